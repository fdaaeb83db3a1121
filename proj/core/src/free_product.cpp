#include "mcgkit/group/free_product.hpp"

#include "mcgkit/errors.hpp"

namespace mcgkit {

namespace {

// Order k of the cyclic group <g | r>, where r must be g^{+-k}.
long long power_relator_order(const Word& r, std::size_t factor) {
  for (const auto& l : r)
    if (l.gen != r[0].gen || l.exp != r[0].exp)
      throw UnsupportedPresentation("factor " + std::to_string(factor) +
                                    " relator is not a generator power");
  return static_cast<long long>(r.size());
}

}  // namespace

std::vector<long long> cyclic_factor_orders(const Presentation& p) {
  if (!p.has_factor_structure()) {
    // Each generator is its own factor; relators must be single powers.
    std::vector<long long> orders(p.generator_count(), 0);
    for (const auto& r : p.relators()) {
      if (r.empty()) continue;
      const auto g = static_cast<std::size_t>(r[0].gen);
      if (orders[g] != 0)
        throw UnsupportedPresentation("generator " + p.label(r[0].gen) + " has several relators");
      orders[g] = power_relator_order(r, g);
    }
    return orders;
  }
  std::vector<long long> orders;
  for (std::size_t f = 0; f < p.factors().size(); ++f) {
    const auto& block = p.factors()[f];
    if (block.size() != 1)
      throw UnsupportedPresentation("factor " + std::to_string(f) + " is not cyclic");
    const auto rels = p.factor_relators(f);
    if (rels.empty()) {
      orders.push_back(0);
      continue;
    }
    if (rels.size() != 1)
      throw UnsupportedPresentation("factor " + std::to_string(f) + " has several relators");
    orders.push_back(power_relator_order(rels.front(), f));
  }
  return orders;
}

Word free_product_normal_form(const Presentation& p, const Word& w) {
  const auto orders = cyclic_factor_orders(p);
  // Syllable stack: (generator, exponent); a factor has exactly one generator.
  struct Syllable {
    int gen;
    long long exp;
  };
  std::vector<Syllable> stack;
  auto factor_index = [&](int gen) {
    return p.has_factor_structure() ? p.factor_of(gen) : static_cast<std::size_t>(gen);
  };
  auto normalise = [&](int gen, long long e) {
    const long long k = orders[factor_index(gen)];
    if (k == 0) return e;
    e %= k;
    return e < 0 ? e + k : e;
  };
  for (const auto& l : w) {
    if (!stack.empty() && stack.back().gen == l.gen) {
      stack.back().exp = normalise(l.gen, stack.back().exp + l.exp);
      if (stack.back().exp == 0) stack.pop_back();
    } else {
      const long long e = normalise(l.gen, l.exp);
      if (e != 0) stack.push_back({l.gen, e});
    }
  }
  Word out;
  for (const auto& s : stack) out.append(Word::power(s.gen, static_cast<int>(s.exp)));
  return out;
}

}  // namespace mcgkit
