#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "mcgkit/group/presentation.hpp"

namespace mcgkit {

/// Lens space L(p,q), stored with q reduced into [0, p).
struct LensSpace {
  long long p = 1;
  long long q = 0;
  friend bool operator==(const LensSpace&, const LensSpace&) = default;
};

/// The handle S^1 x S^2.
struct Handle {
  friend bool operator==(const Handle&, const Handle&) = default;
};

/// Prism manifold with pi_1 = D*_{4m} x Z_p, m odd >= 3, gcd(4m, p) = 1.
struct PrismSpinor {
  int m = 3;
  long long p = 1;
  friend bool operator==(const PrismSpinor&, const PrismSpinor&) = default;
};

/// Spherical space form with pi_1 = D'_{2^k m} x Z_p, k >= 4, m odd >= 3,
/// gcd(2^k m, p) = 1.
struct PrismPrimePrime {
  int k = 4;
  int m = 3;
  long long p = 1;
  friend bool operator==(const PrismPrimePrime&, const PrismPrimePrime&) = default;
};

/// One of the six orientable flat space forms; index 1 is the 3-torus.
struct FlatForm {
  int index = 1;
  friend bool operator==(const FlatForm&, const FlatForm&) = default;
};

/// An automorphism of a prime's fundamental group in the prime's own
/// generator numbering: generator g maps to images[g].
struct LocalAutomorphism {
  std::string label;
  std::vector<Word> images;
  std::vector<Word> inverse_images;
  friend bool operator==(const LocalAutomorphism&, const LocalAutomorphism&) = default;
};

/// A prime supplied entirely as data. Orientation-reversed copies of chiral
/// primes are separate entries whose names end in kReversedSuffix.
struct GenericPrime {
  static constexpr const char* kReversedSuffix = "_rev";

  std::string name;
  Presentation pi1;
  bool spinorial = true;
  std::optional<Presentation> mcg;
  std::optional<bool> chiral;
  std::optional<bool> homotopy_implies_isotopy;
  /// Whether pi_1 is finite; unknown means "try coset enumeration".
  std::optional<bool> finite;
  /// Declared membership in the Hendriks list, overriding the Sylow test.
  std::optional<bool> hendriks;
  std::vector<LocalAutomorphism> internal_automorphisms;

  friend bool operator==(const GenericPrime&, const GenericPrime&) = default;
};

using Prime = std::variant<LensSpace, Handle, PrismSpinor, PrismPrimePrime, FlatForm, GenericPrime>;

/// Validating constructors; they throw BadParameters.
LensSpace make_lens(long long p, long long q);
PrismSpinor make_prism_spinor(int m, long long p);
PrismPrimePrime make_prism_prime_prime(int k, int m, long long p);
FlatForm make_flat_form(int index);
/// Re-checks the invariants of any prime (including Generic automorphism data).
void validate(const Prime& prime);

/// The orientation-reversed entry of a chiral generic prime.
GenericPrime reversed_orientation(const GenericPrime& prime);

std::string describe(const Prime& prime);
bool is_handle(const Prime& prime);
bool is_irreducible(const Prime& prime);

/// Presentation of pi_1 in the prime's fiducial generators. Throws NotCataloged
/// for flat forms other than the 3-torus.
Presentation fundamental_group(const Prime& prime);

/// Lens spaces and handles are non-spinorial; everything else is spinorial
/// unless a generic prime says otherwise.
bool is_spinorial(const Prime& prime);

/// Membership in the list of primes for which the boundary-parallel 2pi
/// rotation is homotopic to the identity: handles, and spherical space forms
/// whose pi_1 has only cyclic Sylow subgroups.
bool in_hendriks_list(const Prime& prime);

/// Same diffeomorphism class: structural equality, with lens spaces compared
/// by lens_homeomorphic.
bool same_species(const Prime& a, const Prime& b);

/// Presentation of the prime's frame-fixing mapping class group when it is
/// cataloged (lens spaces, the handle, generic primes with stored data).
std::optional<Presentation> prime_mcg_presentation(const Prime& prime);

/// Catalog automorphisms of pi_1 realising the internal mapping classes
/// (twists excluded). Lens spaces: inversion and/or a -> a^q according to
/// lens_mcg; generic primes: their stored list; otherwise none.
std::vector<LocalAutomorphism> internal_automorphisms(const Prime& prime);

/// Whether the homotopy-implies-isotopy property is known to hold. Catalog
/// primes assume it; generic primes must declare it.
bool has_homotopy_implies_isotopy(const Prime& prime);

}  // namespace mcgkit
