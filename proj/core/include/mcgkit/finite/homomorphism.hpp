#pragma once

#include <functional>
#include <memory>
#include <vector>

#include "mcgkit/finite/permutation_group.hpp"
#include "mcgkit/group/presentation.hpp"

namespace mcgkit {

inline constexpr std::size_t kDefaultHomSearchDegree = 7;

/// A homomorphism from a finitely presented group into a permutation group,
/// given by the image of each generator.
struct GroupHomomorphism {
  std::shared_ptr<const Presentation> source;
  PermutationGroup target;
  std::vector<Permutation> assignment;

  /// True iff every relator of `source` maps to the identity.
  bool satisfies_relators() const;
};

/// Image of `w` under an assignment of generator images. Throws
/// UnknownGenerator if a letter has no image.
Permutation evaluate_word(const Word& w, std::span<const Permutation> assignment);
Permutation evaluate_word(const Word& w, const GroupHomomorphism& h);

/// Calls `visit` with every generator assignment into S_n under which all
/// relators of `p` evaluate to the identity. Generators are assigned in id
/// order, images in lexicographic order, and a relator is checked as soon as
/// its largest generator is assigned. Returning true from `visit` stops the
/// search; the function then returns true.
///
/// Throws DegreeTooLarge if n > max_degree.
bool for_each_homomorphism(const Presentation& p, std::size_t n,
                           const std::function<bool(std::span<const Permutation>)>& visit,
                           std::size_t max_degree = kDefaultHomSearchDegree);

/// Every homomorphism from `p` into S_n, in the order of for_each_homomorphism.
std::vector<GroupHomomorphism> enumerate_homomorphisms(
    const Presentation& p, std::size_t n, std::size_t max_degree = kDefaultHomSearchDegree);

}  // namespace mcgkit
