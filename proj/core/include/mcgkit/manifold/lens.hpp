#pragma once

#include <string>

#include "mcgkit/group/presentation.hpp"

namespace mcgkit {

/// Small groups that occur as mapping class groups of single primes.
enum class NamedGroup { Trivial, Z2, Z4, Z2xZ2 };

std::string to_string(NamedGroup g);
/// Trivial: <|>, Z2: <s|s^2>, Z4: <t|t^4>, Z2xZ2: <t,s|t^2,s^2,[t,s]>.
Presentation presentation_of(NamedGroup g);

/// L(p,q) and L(p,q') are homeomorphic iff q' = +-q or q q' = +-1 (mod p).
/// Throws BadParameters unless p >= 1 and both q are coprime to p.
bool lens_homeomorphic(long long p, long long q, long long q_prime);

/// Homotopy equivalent iff q q' = +-n^2 (mod p) for some n, found by scanning
/// n over 0..p-1.
bool lens_homotopy_equivalent(long long p, long long q, long long q_prime);

/// Frame-fixing mapping class group of L(p,q). For p > 2: Z2xZ2 if q^2 = 1
/// and q != +-1, Z4 if q^2 = -1, otherwise Z2 (all mod p). L(1,0) = S^3 and
/// L(2,1) = RP^3 give Trivial.
NamedGroup lens_mcg(long long p, long long q);

/// Residue of q in [0, p).
long long mod_positive(long long q, long long p);

}  // namespace mcgkit
