#include "mcgkit/finite/catalog.hpp"

#include "mcgkit/errors.hpp"
#include "mcgkit/finite/coset_table.hpp"

namespace mcgkit {

Presentation cyclic_presentation(int k) {
  if (k < 1) throw BadParameters("cyclic order must be positive");
  return Presentation({"a"}, {Word::power(0, k)});
}

Presentation quaternion_presentation() {
  // <i, j | i^4, i^2 j^-2, j^-1 i j i>
  const Word i = Word::generator(0);
  const Word j = Word::generator(1);
  return Presentation({"i", "j"},
                      {i.pow(4), i.pow(2) * j.pow(-2), j.inverse() * i * j * i});
}

Presentation binary_dihedral_presentation(int m) {
  if (m < 1 || m % 2 == 0) throw BadParameters("binary dihedral needs odd m");
  const Word a = Word::generator(0);
  const Word b = Word::generator(1);
  // ab = ba^-1  <=>  a b a b^-1 = 1
  return Presentation({"a", "b"}, {a * b * a * b.inverse(), a.pow(m), b.pow(4)});
}

Presentation prime_prime_presentation(int k, int m) {
  if (k < 2 || k > 20 || m < 1 || m % 2 == 0) throw BadParameters("need k >= 2 and odd m");
  const Word a = Word::generator(0);
  const Word b = Word::generator(1);
  return Presentation({"A", "B"}, {a * b * a * b.inverse(), a.pow(m), b.pow(1 << k)});
}

namespace {

NamedFiniteGroup regular(std::string name, const Presentation& p) {
  return {std::move(name), FiniteGroupModel(p).regular_representation()};
}

}  // namespace

std::vector<NamedFiniteGroup> builtin_group_catalog() {
  std::vector<NamedFiniteGroup> out;
  for (int k = 1; k <= 12; ++k) out.push_back({"Z" + std::to_string(k), PermutationGroup::cyclic(k)});
  for (int n = 2; n <= 5; ++n) out.push_back({"S" + std::to_string(n), PermutationGroup::symmetric(n)});
  out.push_back(regular("Q8", quaternion_presentation()));
  out.push_back(regular("Dic12", binary_dihedral_presentation(3)));
  out.push_back(regular("Dic20", binary_dihedral_presentation(5)));
  out.push_back(regular("Dprime48", prime_prime_presentation(4, 3)));
  return out;
}

const NamedFiniteGroup& find_group(const std::vector<NamedFiniteGroup>& catalog,
                                   const std::string& name) {
  for (const auto& g : catalog)
    if (g.name == name) return g;
  throw NotCataloged("no finite group named '" + name + "'");
}

}  // namespace mcgkit
