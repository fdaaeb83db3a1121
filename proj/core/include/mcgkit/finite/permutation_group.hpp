#pragma once

#include <cstddef>
#include <memory>
#include <mutex>
#include <vector>

#include "mcgkit/finite/permutation.hpp"

namespace mcgkit {

inline constexpr std::size_t kDefaultEnumerationDegree = 12;

/// A finite group given by generating permutations on `degree` points.
///
/// The element list is computed on first use and cached. Copies share the
/// cache, and the cache is read-only once filled.
class PermutationGroup {
 public:
  PermutationGroup() : PermutationGroup(1, {}) {}
  PermutationGroup(std::size_t degree, std::vector<Permutation> generators);

  static PermutationGroup symmetric(std::size_t n);
  static PermutationGroup cyclic(std::size_t k);

  std::size_t degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return generators_; }

  /// Breadth-first closure from the identity, right-multiplying by generators.
  /// Throws DegreeTooLarge if degree() > max_degree.
  const std::vector<Permutation>& elements(std::size_t max_degree = kDefaultEnumerationDegree) const;
  std::size_t order(std::size_t max_degree = kDefaultEnumerationDegree) const {
    return elements(max_degree).size();
  }

 private:
  struct Cache {
    std::once_flag once;
    std::vector<Permutation> elements;
  };

  std::size_t degree_;
  std::vector<Permutation> generators_;
  std::shared_ptr<Cache> cache_;
};

const std::vector<Permutation>& enumerate_elements(
    const PermutationGroup& g, std::size_t max_degree = kDefaultEnumerationDegree);

/// True iff every Sylow subgroup of `g` is cyclic, decided by looking for an
/// element whose order is the full p-part of |g| for each prime p.
bool sylow_all_cyclic(const PermutationGroup& g,
                      std::size_t max_degree = kDefaultEnumerationDegree);

/// Prime factorisation as (p, exponent) pairs in increasing p.
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n);

}  // namespace mcgkit
