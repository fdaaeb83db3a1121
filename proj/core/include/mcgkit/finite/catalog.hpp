#pragma once

#include <string>
#include <vector>

#include "mcgkit/finite/permutation_group.hpp"
#include "mcgkit/group/presentation.hpp"

namespace mcgkit {

/// A named finite group shipped with the library.
struct NamedFiniteGroup {
  std::string name;
  PermutationGroup group;
};

/// Presentations of the catalog families.
Presentation cyclic_presentation(int k);
Presentation quaternion_presentation();
/// D*_{4m} = <a,b | ab = ba^-1, a^m = b^4 = 1>, m odd.
Presentation binary_dihedral_presentation(int m);
/// D'_{2^k m} = <A,B | AB = BA^-1, A^m = B^{2^k} = 1>.
Presentation prime_prime_presentation(int k, int m);

/// The shipped catalog: Z_k (1 <= k <= 12), S_2..S_5, Q_8, D*_12, D*_20 and
/// D'_48, the non-symmetric groups as regular representations.
std::vector<NamedFiniteGroup> builtin_group_catalog();

/// Looks a group up by name in `catalog`; throws NotCataloged.
const NamedFiniteGroup& find_group(const std::vector<NamedFiniteGroup>& catalog,
                                   const std::string& name);

}  // namespace mcgkit
