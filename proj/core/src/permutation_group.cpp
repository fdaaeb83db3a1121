#include "mcgkit/finite/permutation_group.hpp"

#include <unordered_set>

#include "mcgkit/errors.hpp"

namespace mcgkit {

PermutationGroup::PermutationGroup(std::size_t degree, std::vector<Permutation> generators)
    : degree_(degree), generators_(std::move(generators)), cache_(std::make_shared<Cache>()) {
  if (degree_ == 0) throw BadParameters("permutation group needs at least one point");
  for (const auto& g : generators_)
    if (g.degree() != degree_) throw BadParameters("generator degree mismatch");
}

PermutationGroup PermutationGroup::symmetric(std::size_t n) {
  if (n <= 1) return PermutationGroup(1, {});
  std::vector<Permutation::Point> cycle(n);
  for (std::size_t i = 0; i < n; ++i) cycle[i] = static_cast<Permutation::Point>(i);
  return PermutationGroup(n, {Permutation::from_cycles(n, {{0, 1}}),
                              Permutation::from_cycles(n, {cycle})});
}

PermutationGroup PermutationGroup::cyclic(std::size_t k) {
  if (k <= 1) return PermutationGroup(1, {});
  std::vector<Permutation::Point> cycle(k);
  for (std::size_t i = 0; i < k; ++i) cycle[i] = static_cast<Permutation::Point>(i);
  return PermutationGroup(k, {Permutation::from_cycles(k, {cycle})});
}

const std::vector<Permutation>& PermutationGroup::elements(std::size_t max_degree) const {
  if (degree_ > max_degree)
    throw DegreeTooLarge("degree " + std::to_string(degree_) + " exceeds limit " +
                         std::to_string(max_degree));
  std::call_once(cache_->once, [this] {
    std::vector<Permutation> out{Permutation::identity(degree_)};
    std::unordered_set<Permutation, PermutationHash> seen(out.begin(), out.end());
    for (std::size_t i = 0; i < out.size(); ++i) {
      for (const auto& g : generators_) {
        Permutation next = out[i] * g;
        if (seen.insert(next).second) out.push_back(std::move(next));
      }
    }
    cache_->elements = std::move(out);
  });
  return cache_->elements;
}

const std::vector<Permutation>& enumerate_elements(const PermutationGroup& g,
                                                   std::size_t max_degree) {
  return g.elements(max_degree);
}

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e) out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

bool sylow_all_cyclic(const PermutationGroup& g, std::size_t max_degree) {
  const auto& elems = g.elements(max_degree);
  std::vector<std::uint64_t> orders;
  orders.reserve(elems.size());
  for (const auto& e : elems) orders.push_back(e.order());
  for (const auto& [p, e] : factorize(elems.size())) {
    std::uint64_t part = 1;
    for (unsigned i = 0; i < e; ++i) part *= p;
    bool found = false;
    for (auto o : orders)
      if (o == part) {
        found = true;
        break;
      }
    if (!found) return false;
  }
  return true;
}

}  // namespace mcgkit
