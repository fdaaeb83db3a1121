#pragma once

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "mcgkit/group/presentation.hpp"

namespace mcgkit {

using BigInt = boost::multiprecision::cpp_int;

/// Z^free_rank + Z/t_1 + ... + Z/t_k with t_1 | t_2 | ... | t_k, all t_i >= 2.
struct AbelianGroupStructure {
  std::size_t free_rank = 0;
  std::vector<BigInt> torsion_factors;

  std::string to_string() const;
  friend bool operator==(const AbelianGroupStructure&, const AbelianGroupStructure&) = default;
};

/// Diagonal entries (non-negative, divisibility ordered, zeros last) of the
/// Smith normal form of an integer matrix.
std::vector<BigInt> smith_diagonal(std::vector<std::vector<BigInt>> m);

/// Relator exponent-sum matrix: one row per relator, one column per generator.
std::vector<std::vector<BigInt>> relation_matrix(const Presentation& p);

AbelianGroupStructure abelianization(const Presentation& p);

/// Direct sum, re-normalised into invariant factor form.
AbelianGroupStructure direct_sum(const std::vector<AbelianGroupStructure>& parts);

}  // namespace mcgkit
