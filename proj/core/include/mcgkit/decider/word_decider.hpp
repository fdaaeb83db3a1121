#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <variant>
#include <vector>

#include "mcgkit/finite/homomorphism.hpp"
#include "mcgkit/group/presentation.hpp"

namespace mcgkit {

/// Work limits for the two semi-decision procedures.
struct Budget {
  /// Maximum number of relator insertions along one derivation.
  std::size_t max_t1_depth = 8;
  /// Largest symmetric group S_n searched for a witness.
  std::size_t max_t2_degree = 5;
  /// Global cap on search steps: one per generated relator insertion plus
  /// one per homomorphism tested.
  std::uint64_t max_steps = 2'000'000;
};

/// One relator insertion: the cyclic conjugate `inserted` of relator
/// `relator` (inverted if `inverted`, rotated by `shift`) is placed before
/// letter `position`, then the word is freely reduced to `result`.
struct DerivationStep {
  std::size_t position = 0;
  std::size_t relator = 0;
  std::size_t shift = 0;
  bool inverted = false;
  Word inserted;
  Word result;
};

using Derivation = std::vector<DerivationStep>;

struct NontrivialWitness {
  GroupHomomorphism homomorphism;
  Permutation image;
};

struct BudgetUsed {
  std::size_t t1_depth_reached = 0;
  std::size_t t2_degree_reached = 0;
  std::uint64_t steps = 0;
};

struct TrivialVerdict {
  Derivation derivation;
};
struct NontrivialVerdict {
  NontrivialWitness witness;
};
struct ExhaustedVerdict {
  BudgetUsed used;
};

using Verdict = std::variant<TrivialVerdict, NontrivialVerdict, ExhaustedVerdict>;

/// Replays a derivation from `w`; true iff every step's recorded result
/// matches and the final word is empty.
bool replay_derivation(const Presentation& p, const Word& w, const Derivation& d);

/// True iff the witness satisfies every relator and maps `w` to its recorded,
/// non-identity image.
bool verify_witness(const Presentation& p, const Word& w, const NontrivialWitness& witness);

/// Searches for a derivation of the empty word from `w` by inserting cyclic
/// conjugates of relators and their inverses, at most `depth` insertions deep.
/// Expansion order is shortest word first, then fewest insertions, then
/// generation order; the search is exhaustive within the depth bound.
/// `max_steps` caps the number of generated insertions.
std::optional<Derivation> t1_trivial_search(const Presentation& p, const Word& w,
                                            std::size_t depth,
                                            std::uint64_t max_steps = 1'000'000);

/// Looks for a homomorphism into S_n, n = 2..max_degree, under which `w` is
/// not the identity. Homomorphisms are tried in for_each_homomorphism order.
std::optional<NontrivialWitness> t2_nontrivial_search(const Presentation& p, const Word& w,
                                                      std::size_t max_degree);

struct DecideOptions {
  /// Run both searches on separate threads; the first certificate wins.
  bool parallel = false;
};

/// Decides whether `w` is trivial by alternating one increment of the
/// relator-insertion search with one symmetric-group degree of the witness
/// search, until one of them produces a certificate or the budget runs out.
///
/// Increment k of the insertion search may expand up to 4^(k-1) further
/// nodes (increment 0 only tests whether w is already empty). Once the
/// witness search has covered every degree, the insertion search runs to the
/// end of its depth-bounded space or the step cap.
Verdict decide(const Presentation& p, const Word& w, const Budget& budget = {},
               const DecideOptions& options = {});

/// Reusable decider for many words over one presentation. Homomorphism lists
/// are cached per degree (up to a size cap), so deciding a batch of words
/// only enumerates each S_n once. Safe to share between threads.
class WordDecider {
 public:
  explicit WordDecider(Presentation p, Budget budget = {});
  ~WordDecider();
  WordDecider(const WordDecider&) = delete;
  WordDecider& operator=(const WordDecider&) = delete;

  Verdict decide(const Word& w, const DecideOptions& options = {}) const;
  const Presentation& presentation() const { return *presentation_; }
  const Budget& budget() const { return budget_; }

 private:
  struct Impl;

  std::shared_ptr<const Presentation> presentation_;
  Budget budget_;
  std::unique_ptr<Impl> impl_;
};

}  // namespace mcgkit
