#pragma once

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "mcgkit/manifold/connected_sum.hpp"

namespace mcgkit {

// Indices are 0-based; labels print them 1-based.

/// The index-th catalog automorphism of prime `prime`.
struct InternalGen {
  std::size_t prime = 0;
  std::size_t index = 0;
  friend bool operator==(const InternalGen&, const InternalGen&) = default;
};

/// Reflection of a handle: its generator is inverted.
struct SpinGen {
  std::size_t handle = 0;
  friend bool operator==(const SpinGen&, const SpinGen&) = default;
};

/// Interchange of two diffeomorphic primes, i < k.
struct ExchangeGen {
  std::size_t i = 0;
  std::size_t k = 0;
  friend bool operator==(const ExchangeGen&, const ExchangeGen&) = default;
};

/// Slide of irreducible prime k through prime i along generator j of prime i.
struct SlideIrreducibleGen {
  std::size_t i = 0;
  std::size_t j = 0;
  std::size_t k = 0;
  friend bool operator==(const SlideIrreducibleGen&, const SlideIrreducibleGen&) = default;
};

/// Slide of the left end of handle k through prime i along generator j.
struct SlideHandleLeftGen {
  std::size_t i = 0;
  std::size_t j = 0;
  std::size_t k = 0;
  friend bool operator==(const SlideHandleLeftGen&, const SlideHandleLeftGen&) = default;
};

/// Slide of the right end of handle k through prime i along generator j.
struct SlideHandleRightGen {
  std::size_t i = 0;
  std::size_t j = 0;
  std::size_t k = 0;
  friend bool operator==(const SlideHandleRightGen&, const SlideHandleRightGen&) = default;
};

/// 2pi rotation parallel to the neck of a spinorial prime.
struct NeckTwistGen {
  std::size_t prime = 0;
  friend bool operator==(const NeckTwistGen&, const NeckTwistGen&) = default;
};

/// 2pi rotation of a handle's sphere.
struct HandleTwistGen {
  std::size_t handle = 0;
  friend bool operator==(const HandleTwistGen&, const HandleTwistGen&) = default;
};

using MCGGenerator = std::variant<InternalGen, SpinGen, ExchangeGen, SlideIrreducibleGen,
                                  SlideHandleLeftGen, SlideHandleRightGen, NeckTwistGen,
                                  HandleTwistGen>;

/// omega(i,k), mu(i.j,k), lambda(i.j,k), rho(i.j,k), sigma(h), neck(i),
/// twist(h), phi(i,label).
std::string label(const MCGGenerator& g, const ConnectedSum& sum);
/// Variant name, e.g. "SlideIrreducible".
std::string kind_name(const MCGGenerator& g);

bool is_slide(const MCGGenerator& g);
bool is_twist(const MCGGenerator& g);

struct GeneratorCounts {
  std::size_t internals = 0;
  std::size_t spins = 0;
  std::size_t exchanges = 0;
  std::size_t slides_irreducible = 0;
  std::size_t slides_left = 0;
  std::size_t slides_right = 0;
  std::size_t neck_twists = 0;
  std::size_t handle_twists = 0;

  std::size_t total() const {
    return internals + spins + exchanges + slides_irreducible + slides_left + slides_right +
           neck_twists + handle_twists;
  }
  friend bool operator==(const GeneratorCounts&, const GeneratorCounts&) = default;
};

struct MCGGeneratorSet {
  std::vector<MCGGenerator> generators;
  GeneratorCounts counts;
};

/// Generators of the frame-fixing mapping class group in the order: internal
/// automorphisms, spins, exchanges, irreducible slides, handle slides (left
/// and right interleaved), neck twists, handle twists. Throws NotCataloged if
/// some prime has no fundamental group presentation.
MCGGeneratorSet enumerate_generators(const ConnectedSum& sum);

/// Closed-form counts: spins = m, exchanges = sum n_r(n_r-1)/2, neck twists =
/// n_s, handle twists = m, slide counts from the per-prime generator counts.
GeneratorCounts expected_counts(const ConnectedSum& sum);

}  // namespace mcgkit
