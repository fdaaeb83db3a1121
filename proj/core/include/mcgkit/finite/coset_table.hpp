#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "mcgkit/finite/permutation_group.hpp"
#include "mcgkit/group/presentation.hpp"

namespace mcgkit {

inline constexpr std::size_t kDefaultCosetLimit = 1u << 20;

/// Completed coset table of the trivial subgroup, i.e. the right regular
/// action of a finite group on itself. Coset 0 is the identity.
struct CosetTable {
  std::size_t generator_count = 0;
  /// table[c][2*g] = c.g, table[c][2*g+1] = c.g^-1.
  std::vector<std::vector<std::size_t>> table;

  std::size_t size() const { return table.size(); }
};

/// Todd-Coxeter enumeration (HLT strategy with coincidence processing) of the
/// cosets of the trivial subgroup. Throws CosetLimitExceeded if more than
/// `max_cosets` cosets are alive at once, which also covers infinite groups.
CosetTable enumerate_cosets(const Presentation& p, std::size_t max_cosets = kDefaultCosetLimit);

/// A finite group known through its regular representation: elements are
/// numbered 0..order-1 (0 the identity) and each has a shortlex-least word.
class FiniteGroupModel {
 public:
  explicit FiniteGroupModel(const Presentation& p, std::size_t max_cosets = kDefaultCosetLimit);

  const Presentation& presentation() const { return presentation_; }
  std::size_t order() const { return table_.size(); }

  /// Element reached from the identity by reading `w`.
  std::size_t element_of(const Word& w) const;
  const Word& canonical_word(std::size_t element) const { return words_.at(element); }
  /// The canonical word for the element `w` represents.
  const Word& reduce(const Word& w) const { return canonical_word(element_of(w)); }
  std::size_t multiply(std::size_t a, std::size_t b) const;
  std::uint64_t element_order(std::size_t element) const;

  /// The regular permutation representation.
  PermutationGroup regular_representation() const;

 private:
  Presentation presentation_;
  CosetTable table_;
  std::vector<Word> words_;
};

/// Sylow test on a model, using element orders computed from the table.
bool sylow_all_cyclic(const FiniteGroupModel& g);

}  // namespace mcgkit
