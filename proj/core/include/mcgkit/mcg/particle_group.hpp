#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <random>
#include <vector>

#include "mcgkit/finite/coset_table.hpp"
#include "mcgkit/finite/permutation.hpp"
#include "mcgkit/manifold/connected_sum.hpp"

namespace mcgkit {

/// Element of G^I x| G^E: one internal mapping class per prime (a canonical
/// word in that prime's MCG presentation) and one permutation per species.
struct ParticleGroupElement {
  std::vector<Word> internal;
  std::vector<Permutation> external;
  friend bool operator==(const ParticleGroupElement&, const ParticleGroupElement&) = default;
};

/// The particle group of a connected sum. The external permutation of a
/// species acts on internal parts by theta(s)(g)_t = g_{s(t)}, positions
/// counted within the species; permutations compose left to right.
class ParticleGroup {
 public:
  /// Internal groups from prime_mcg_presentation; NotCataloged if missing.
  explicit ParticleGroup(const ConnectedSum& sum);
  /// Explicit internal groups, one per prime. Primes of one species must get
  /// equal presentations (MismatchedStructure otherwise).
  ParticleGroup(const ConnectedSum& sum, std::vector<Presentation> internal_groups);

  std::size_t prime_count() const { return prime_species_.size(); }
  const std::vector<std::vector<std::size_t>>& species() const { return species_; }
  const FiniteGroupModel& internal_group(std::size_t prime) const;

  /// |G^I| * prod n_r!
  std::uint64_t order() const;

  ParticleGroupElement identity() const;
  /// Throws MismatchedStructure if either operand does not fit this group.
  ParticleGroupElement multiply(const ParticleGroupElement& x, const ParticleGroupElement& y) const;
  ParticleGroupElement inverse(const ParticleGroupElement& x) const;
  ParticleGroupElement random(std::mt19937_64& rng) const;
  /// Every element; throws BadParameters beyond `limit`.
  std::vector<ParticleGroupElement> elements(std::size_t limit = 1u << 16) const;

  /// Internal part `g` at prime `prime`, identity elsewhere.
  ParticleGroupElement internal_element(std::size_t prime, const Word& g) const;
  /// External permutation `s` on species `r`, identity elsewhere.
  ParticleGroupElement external_element(std::size_t r, const Permutation& s) const;

  void check(const ParticleGroupElement& x) const;

 private:
  std::vector<std::vector<std::size_t>> species_;
  std::vector<std::size_t> prime_species_;
  std::vector<std::size_t> prime_position_;
  std::vector<std::shared_ptr<const FiniteGroupModel>> models_;
};

}  // namespace mcgkit
