#pragma once

#include <cstddef>
#include <vector>

#include "mcgkit/decider/word_decider.hpp"
#include "mcgkit/group/presentation.hpp"
#include "mcgkit/manifold/connected_sum.hpp"
#include "mcgkit/mcg/generator.hpp"

namespace mcgkit {

/// An endomorphism of a finitely presented group given on generators.
struct Automorphism {
  std::vector<Word> images;

  static Automorphism identity(std::size_t generator_count);
  /// Substitutes images letter by letter and freely reduces.
  Word apply(const Word& w) const;
  friend bool operator==(const Automorphism&, const Automorphism&) = default;
};

/// f o g: first g, then f.
Automorphism compose(const Automorphism& f, const Automorphism& g);

/// Position of the first generator of each prime inside fundamental_group_sum.
std::vector<std::size_t> prime_generator_offsets(const ConnectedSum& sum);

/// Action of an MCG generator on pi_1 of the sum. `p` must be a presentation
/// whose factor structure matches the sum (as produced by
/// fundamental_group_sum); otherwise IncompatiblePresentation. Relator images
/// are checked and a certified non-trivial image also raises
/// IncompatiblePresentation.
Automorphism induced_automorphism(const ConnectedSum& sum, const MCGGenerator& g,
                                  const Presentation& p);
Automorphism induced_automorphism(const ConnectedSum& sum, const MCGGenerator& g);

/// Action of the inverse mapping class.
Automorphism inverse_induced_automorphism(const ConnectedSum& sum, const MCGGenerator& g,
                                          const Presentation& p);

enum class RelatorCheck { Holds, Fails, Unknown };

/// Whether every relator of `p` maps to the identity under `f`. Exact when
/// the factors are cyclic, otherwise decided by the word decider.
RelatorCheck check_relators(const Presentation& p, const Automorphism& f,
                            const Budget& budget = {4, 4, 20000});

/// Whether f(w) = w' in the group, for every generator w mapping to target[w].
RelatorCheck check_equal_on_generators(const Presentation& p, const Automorphism& f,
                                       const Automorphism& target,
                                       const Budget& budget = {4, 4, 20000});

}  // namespace mcgkit
