#include "mcgkit/finite/coset_table.hpp"

#include <algorithm>
#include <deque>
#include <limits>

#include "mcgkit/errors.hpp"

namespace mcgkit {

namespace {

constexpr std::size_t kUndefined = std::numeric_limits<std::size_t>::max();

std::size_t column(const Letter& l) { return 2 * static_cast<std::size_t>(l.gen) + (l.exp < 0); }

// Hasselgrove-Leech-Trotter enumeration. Dead cosets keep their rows; `parent`
// is a union-find forest whose roots are the live cosets.
class Enumerator {
 public:
  Enumerator(const Presentation& p, std::size_t max_cosets)
      : columns_(2 * p.generator_count()), max_live_(max_cosets), max_total_(8 * max_cosets) {
    for (const auto& r : p.relators()) {
      const Word reduced = free_reduce(r);
      if (reduced.empty()) continue;
      std::vector<std::size_t> cols;
      for (const auto& l : reduced) cols.push_back(column(l));
      relators_.push_back(std::move(cols));
    }
    new_row();
  }

  CosetTable run() {
    for (std::size_t c = 0; c < table_.size(); ++c) {
      for (const auto& r : relators_) {
        if (!live(c)) break;
        scan_and_fill(c, r);
      }
      if (!live(c)) continue;
      for (std::size_t x = 0; x < columns_; ++x)
        if (table_[c][x] == kUndefined) define(c, x);
    }
    return compact();
  }

 private:
  bool live(std::size_t c) const { return parent_[c] == c; }

  std::size_t new_row() {
    if (live_count_ >= max_live_ || table_.size() >= max_total_)
      throw CosetLimitExceeded("more than " + std::to_string(max_live_) + " cosets");
    table_.emplace_back(columns_, kUndefined);
    parent_.push_back(table_.size() - 1);
    ++live_count_;
    return table_.size() - 1;
  }

  void define(std::size_t c, std::size_t x) {
    const std::size_t d = new_row();
    table_[c][x] = d;
    table_[d][x ^ 1] = c;
  }

  std::size_t rep(std::size_t c) {
    std::size_t root = c;
    while (parent_[root] != root) root = parent_[root];
    while (parent_[c] != root) {
      const std::size_t next = parent_[c];
      parent_[c] = root;
      c = next;
    }
    return root;
  }

  void merge(std::size_t a, std::size_t b, std::deque<std::size_t>& queue) {
    a = rep(a);
    b = rep(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
    --live_count_;
    queue.push_back(b);
  }

  void coincidence(std::size_t a, std::size_t b) {
    std::deque<std::size_t> queue;
    merge(a, b, queue);
    while (!queue.empty()) {
      const std::size_t e = queue.front();
      queue.pop_front();
      for (std::size_t x = 0; x < columns_; ++x) {
        const std::size_t f = table_[e][x];
        if (f == kUndefined) continue;
        table_[f][x ^ 1] = kUndefined;
        const std::size_t e1 = rep(e);
        const std::size_t f1 = rep(f);
        if (table_[e1][x] != kUndefined) {
          merge(f1, table_[e1][x], queue);
        } else if (table_[f1][x ^ 1] != kUndefined) {
          merge(e1, table_[f1][x ^ 1], queue);
        } else {
          table_[e1][x] = f1;
          table_[f1][x ^ 1] = e1;
        }
      }
    }
  }

  void scan_and_fill(std::size_t c, const std::vector<std::size_t>& w) {
    std::size_t f = c;
    std::size_t b = c;
    std::size_t i = 0;
    std::size_t j = w.size();  // one past the last unscanned letter
    while (true) {
      while (i < j && table_[f][w[i]] != kUndefined) f = table_[f][w[i++]];
      if (i == j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j > i && table_[b][w[j - 1] ^ 1] != kUndefined) b = table_[b][w[--j] ^ 1];
      if (j == i) {
        coincidence(f, b);
        return;
      }
      if (j == i + 1) {
        table_[f][w[i]] = b;
        table_[b][w[i] ^ 1] = f;
        return;
      }
      define(f, w[i]);
    }
  }

  CosetTable compact() {
    std::vector<std::size_t> index(table_.size(), kUndefined);
    std::size_t next = 0;
    for (std::size_t c = 0; c < table_.size(); ++c)
      if (live(c)) index[c] = next++;
    CosetTable out;
    out.generator_count = columns_ / 2;
    out.table.reserve(next);
    for (std::size_t c = 0; c < table_.size(); ++c) {
      if (!live(c)) continue;
      std::vector<std::size_t> row(columns_);
      for (std::size_t x = 0; x < columns_; ++x) row[x] = index[rep(table_[c][x])];
      out.table.push_back(std::move(row));
    }
    return out;
  }

  std::size_t columns_;
  std::size_t max_live_;
  std::size_t max_total_;
  std::size_t live_count_ = 0;
  std::vector<std::vector<std::size_t>> relators_;
  std::vector<std::vector<std::size_t>> table_;
  std::vector<std::size_t> parent_;
};

}  // namespace

CosetTable enumerate_cosets(const Presentation& p, std::size_t max_cosets) {
  return Enumerator(p, max_cosets).run();
}

FiniteGroupModel::FiniteGroupModel(const Presentation& p, std::size_t max_cosets)
    : presentation_(p), table_(enumerate_cosets(p, max_cosets)) {
  // Breadth-first spanning tree over columns in order gives shortlex-least words.
  words_.assign(table_.size(), Word{});
  std::vector<bool> reached(table_.size(), false);
  std::deque<std::size_t> queue{0};
  reached[0] = true;
  while (!queue.empty()) {
    const std::size_t c = queue.front();
    queue.pop_front();
    for (std::size_t x = 0; x < 2 * table_.generator_count; ++x) {
      const std::size_t d = table_.table[c][x];
      if (reached[d]) continue;
      reached[d] = true;
      words_[d] = words_[c];
      words_[d].push_back({static_cast<int>(x / 2), x % 2 ? -1 : 1});
      queue.push_back(d);
    }
  }
}

std::size_t FiniteGroupModel::element_of(const Word& w) const {
  std::size_t c = 0;
  for (const auto& l : w) {
    if (l.gen < 0 || static_cast<std::size_t>(l.gen) >= table_.generator_count)
      throw UnknownGenerator("generator id " + std::to_string(l.gen));
    c = table_.table[c][column(l)];
  }
  return c;
}

std::size_t FiniteGroupModel::multiply(std::size_t a, std::size_t b) const {
  std::size_t c = a;
  for (const auto& l : words_.at(b)) c = table_.table[c][column(l)];
  return c;
}

PermutationGroup FiniteGroupModel::regular_representation() const {
  const std::size_t n = table_.size();
  std::vector<Permutation> gens;
  for (std::size_t g = 0; g < table_.generator_count; ++g) {
    std::vector<Permutation::Point> images(n);
    for (std::size_t c = 0; c < n; ++c)
      images[c] = static_cast<Permutation::Point>(table_.table[c][2 * g]);
    gens.emplace_back(std::move(images));
  }
  return PermutationGroup(n, std::move(gens));
}

std::uint64_t FiniteGroupModel::element_order(std::size_t element) const {
  std::uint64_t order = 1;
  for (std::size_t x = element; x != 0; x = multiply(x, element)) ++order;
  return order;
}

bool sylow_all_cyclic(const FiniteGroupModel& g) {
  std::vector<std::uint64_t> orders(g.order());
  for (std::size_t e = 0; e < g.order(); ++e) orders[e] = g.element_order(e);
  for (const auto& [p, e] : factorize(g.order())) {
    std::uint64_t part = 1;
    for (unsigned i = 0; i < e; ++i) part *= p;
    if (std::find(orders.begin(), orders.end(), part) == orders.end()) return false;
  }
  return true;
}

}  // namespace mcgkit
