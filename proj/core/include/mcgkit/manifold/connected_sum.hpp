#pragma once

#include <cstddef>
#include <vector>

#include "mcgkit/group/presentation.hpp"
#include "mcgkit/manifold/prime.hpp"

namespace mcgkit {

/// A closed oriented 3-manifold given by its prime decomposition.
class ConnectedSum {
 public:
  ConnectedSum() = default;
  /// Validates every prime; throws BadParameters or ValidationError (empty sum).
  explicit ConnectedSum(std::vector<Prime> primes);

  const std::vector<Prime>& primes() const { return primes_; }
  const Prime& prime(std::size_t i) const { return primes_.at(i); }

  /// N: number of prime summands.
  std::size_t size() const { return primes_.size(); }
  /// n: irreducible summands.
  std::size_t irreducible_count() const;
  /// m: handles.
  std::size_t handle_count() const;
  /// n_s: spinorial summands.
  std::size_t spinorial_count() const;

  /// Prime indices grouped by diffeomorphism class, in order of first occurrence.
  const std::vector<std::vector<std::size_t>>& species() const { return species_; }
  std::size_t species_of(std::size_t prime) const;

  friend bool operator==(const ConnectedSum& a, const ConnectedSum& b) {
    return a.primes_ == b.primes_;
  }

 private:
  std::vector<Prime> primes_;
  std::vector<std::vector<std::size_t>> species_;
};

enum class ExtensionVerdict { Isomorphic, CentralZ2Extension };

std::string to_string(ExtensionVerdict v);

/// Free product of the summands' fundamental groups, one factor per prime.
/// Single-generator factors are relabelled a, b, c, ...; otherwise each
/// label gets the suffix _i (1-based prime index).
Presentation fundamental_group_sum(const ConnectedSum& sum);

bool is_spinorial_sum(const ConnectedSum& sum);

/// CentralZ2Extension iff the sum is spinorial.
ExtensionVerdict extension_type(const ConnectedSum& sum);

/// Rank m + n_s of the kernel Z_2^{m+n_s}. Throws AssumptionViolated when a
/// generic prime does not declare the homotopy-implies-isotopy property.
std::size_t kernel_rank(const ConnectedSum& sum);

}  // namespace mcgkit
