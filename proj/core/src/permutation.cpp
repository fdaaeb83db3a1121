#include "mcgkit/finite/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "mcgkit/errors.hpp"

namespace mcgkit {

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> hit(images_.size(), false);
  for (auto x : images_) {
    if (x >= images_.size() || hit[x]) throw BadParameters("images do not form a bijection");
    hit[x] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  Permutation p;
  p.images_.resize(degree);
  std::iota(p.images_.begin(), p.images_.end(), Point{0});
  return p;
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     const std::vector<std::vector<Point>>& cycles) {
  Permutation result = identity(degree);
  for (const auto& cycle : cycles) {
    Permutation c = identity(degree);
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (cycle[i] >= degree) throw BadParameters("cycle point out of range");
      c.images_[cycle[i]] = cycle[(i + 1) % cycle.size()];
    }
    result = result * Permutation(c.images_);
  }
  return result;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  Permutation p;
  p.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) p.images_[images_[i]] = static_cast<Point>(i);
  return p;
}

std::uint64_t Permutation::order() const {
  std::uint64_t result = 1;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    std::uint64_t len = 0;
    for (auto x = static_cast<Point>(i); !seen[x]; x = images_[x]) {
      seen[x] = true;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

std::string Permutation::to_cycle_string() const {
  std::ostringstream os;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    os << '(';
    bool first = true;
    for (auto x = static_cast<Point>(i); !seen[x]; x = images_[x]) {
      seen[x] = true;
      os << (first ? "" : " ") << x;
      first = false;
    }
    os << ')';
  }
  const auto s = os.str();
  return s.empty() ? "()" : s;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw BadParameters("degree mismatch in permutation product");
  Permutation r;
  r.images_.resize(a.degree());
  for (std::size_t i = 0; i < a.degree(); ++i) r.images_[i] = b.images_[a.images_[i]];
  return r;
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (auto x : p.images()) h = (h ^ x) * 0x100000001b3ULL;
  return h;
}

std::vector<Permutation> symmetric_group_elements(std::size_t n) {
  std::vector<Permutation::Point> images(n);
  std::iota(images.begin(), images.end(), Permutation::Point{0});
  std::vector<Permutation> out;
  do {
    out.emplace_back(images);
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

}  // namespace mcgkit
