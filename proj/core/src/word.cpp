#include "mcgkit/group/word.hpp"

#include <algorithm>
#include <cstdlib>

namespace mcgkit {

Word Word::power(int gen, int k) {
  Word w;
  const int e = k < 0 ? -1 : 1;
  for (int i = 0; i < std::abs(k); ++i) w.push_back({gen, e});
  return w;
}

void Word::append(const Word& w) {
  letters_.insert(letters_.end(), w.letters_.begin(), w.letters_.end());
}

Word Word::inverse() const {
  Word r;
  r.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) r.push_back(it->inverse());
  return r;
}

Word Word::cyclic_shift(std::size_t k) const {
  if (letters_.empty()) return *this;
  Word r = *this;
  std::rotate(r.letters_.begin(), r.letters_.begin() + static_cast<std::ptrdiff_t>(k % size()),
              r.letters_.end());
  return r;
}

Word Word::pow(int k) const {
  const Word base = k < 0 ? inverse() : *this;
  Word r;
  for (int i = 0; i < std::abs(k); ++i) r.append(base);
  return r;
}

int Word::max_generator() const {
  int m = -1;
  for (const auto& l : letters_) m = std::max(m, l.gen);
  return m;
}

int Word::exponent_sum(int gen) const {
  int s = 0;
  for (const auto& l : letters_)
    if (l.gen == gen) s += l.exp;
  return s;
}

Word free_reduce(const Word& w) {
  std::vector<Letter> stack;
  stack.reserve(w.size());
  for (const auto& l : w) {
    if (!stack.empty() && stack.back().cancels(l)) {
      stack.pop_back();
    } else {
      stack.push_back(l);
    }
  }
  return Word(std::move(stack));
}

bool is_freely_reduced(const Word& w) {
  for (std::size_t i = 1; i < w.size(); ++i)
    if (w[i - 1].cancels(w[i])) return false;
  return true;
}

Word commutator(const Word& a, const Word& b) { return a * b * a.inverse() * b.inverse(); }

std::size_t WordHash::operator()(const Word& w) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (const auto& l : w) {
    const auto v = static_cast<std::size_t>(l.gen) * 2 + (l.exp > 0 ? 1 : 0);
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace mcgkit
