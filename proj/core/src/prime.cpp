#include "mcgkit/manifold/prime.hpp"

#include <numeric>

#include "mcgkit/errors.hpp"
#include "mcgkit/finite/catalog.hpp"
#include "mcgkit/finite/coset_table.hpp"
#include "mcgkit/manifold/lens.hpp"

namespace mcgkit {

namespace {

// Largest group order for which Sylow cyclicity is checked by enumeration.
constexpr std::size_t kSylowOrderLimit = 4096;

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

bool sylow_cyclic_by_enumeration(const Presentation& p) {
  return sylow_all_cyclic(FiniteGroupModel(p, kSylowOrderLimit));
}

// Appends a central Z_p factor generated by z.
Presentation with_cyclic_factor(const Presentation& base, long long p) {
  if (p == 1) return base;
  auto labels = base.labels();
  auto relators = base.relators();
  const int z = static_cast<int>(labels.size());
  labels.push_back("z");
  relators.push_back(Word::power(z, static_cast<int>(p)));
  for (int g = 0; g < z; ++g)
    relators.push_back(commutator(Word::generator(z), Word::generator(g)));
  return Presentation(std::move(labels), std::move(relators));
}

// Shortest exponent representing k modulo p.
int symmetric_residue(long long k, long long p) {
  long long r = mod_positive(k, p);
  if (2 * r > p) r -= p;
  return static_cast<int>(r);
}

long long inverse_mod(long long a, long long p) {
  for (long long x = 1; x < p; ++x)
    if (static_cast<__int128>(a) * x % p == 1) return x;
  throw BadParameters("no inverse modulo " + std::to_string(p));
}

void check_local_automorphism(const GenericPrime& g, const LocalAutomorphism& a) {
  const auto n = g.pi1.generator_count();
  if (a.images.size() != n || a.inverse_images.size() != n)
    throw BadParameters("automorphism '" + a.label + "' of '" + g.name +
                        "' must give one image per generator");
  for (const auto& list : {a.images, a.inverse_images})
    for (const auto& w : list)
      if (w.max_generator() >= static_cast<int>(n))
        throw BadParameters("automorphism '" + a.label + "' uses an undeclared generator");
}

}  // namespace

LensSpace make_lens(long long p, long long q) {
  if (p < 1) throw BadParameters("lens space needs p >= 1");
  if (std::gcd(p, q) != 1)
    throw BadParameters("lens space L(" + std::to_string(p) + "," + std::to_string(q) +
                        ") needs gcd(p,q) = 1");
  return {p, mod_positive(q, p)};
}

PrismSpinor make_prism_spinor(int m, long long p) {
  if (m < 3 || m % 2 == 0) throw BadParameters("prism manifold needs odd m >= 3");
  if (p < 1 || std::gcd(4LL * m, p) != 1) throw BadParameters("prism manifold needs gcd(4m,p) = 1");
  return {m, p};
}

PrismPrimePrime make_prism_prime_prime(int k, int m, long long p) {
  if (k < 4 || k > 20) throw BadParameters("D' space form needs 4 <= k <= 20");
  if (m < 3 || m % 2 == 0) throw BadParameters("D' space form needs odd m >= 3");
  if (p < 1 || std::gcd((1LL << k) * m, p) != 1)
    throw BadParameters("D' space form needs gcd(2^k m, p) = 1");
  return {k, m, p};
}

FlatForm make_flat_form(int index) {
  if (index < 1 || index > 6) throw BadParameters("flat form index must be 1..6");
  return {index};
}

void validate(const Prime& prime) {
  std::visit(Overloaded{
                 [](const LensSpace& l) {
                   if (make_lens(l.p, l.q) != l)
                     throw BadParameters("lens space q is not reduced modulo p");
                 },
                 [](const Handle&) {},
                 [](const PrismSpinor& s) { make_prism_spinor(s.m, s.p); },
                 [](const PrismPrimePrime& s) { make_prism_prime_prime(s.k, s.m, s.p); },
                 [](const FlatForm& f) { make_flat_form(f.index); },
                 [](const GenericPrime& g) {
                   if (g.name.empty()) throw BadParameters("generic prime needs a name");
                   for (const auto& a : g.internal_automorphisms) check_local_automorphism(g, a);
                 },
             },
             prime);
}

GenericPrime reversed_orientation(const GenericPrime& prime) {
  if (prime.chiral != true)
    throw BadParameters("'" + prime.name + "' is not declared chiral");
  GenericPrime out = prime;
  const std::string suffix = GenericPrime::kReversedSuffix;
  if (out.name.size() > suffix.size() && out.name.ends_with(suffix)) {
    out.name.resize(out.name.size() - suffix.size());
  } else {
    out.name += suffix;
  }
  return out;
}

std::string describe(const Prime& prime) {
  return std::visit(
      Overloaded{
          [](const LensSpace& l) {
            return "L(" + std::to_string(l.p) + "," + std::to_string(l.q) + ")";
          },
          [](const Handle&) { return std::string("S1xS2"); },
          [](const PrismSpinor& s) {
            return "S3/(D*" + std::to_string(4 * s.m) + "xZ" + std::to_string(s.p) + ")";
          },
          [](const PrismPrimePrime& s) {
            return "S3/(D'" + std::to_string((1LL << s.k) * s.m) + "xZ" + std::to_string(s.p) + ")";
          },
          [](const FlatForm& f) { return "flat" + std::to_string(f.index); },
          [](const GenericPrime& g) { return g.name; },
      },
      prime);
}

bool is_handle(const Prime& prime) { return std::holds_alternative<Handle>(prime); }
bool is_irreducible(const Prime& prime) { return !is_handle(prime); }

Presentation fundamental_group(const Prime& prime) {
  return std::visit(
      Overloaded{
          [](const LensSpace& l) { return Presentation({"a"}, {Word::power(0, static_cast<int>(l.p))}); },
          [](const Handle&) { return Presentation({"a"}, {}); },
          [](const PrismSpinor& s) {
            return with_cyclic_factor(binary_dihedral_presentation(s.m), s.p);
          },
          [](const PrismPrimePrime& s) {
            const auto base = prime_prime_presentation(s.k, s.m);
            return with_cyclic_factor(Presentation({"a", "b"}, base.relators()), s.p);
          },
          [](const FlatForm& f) {
            if (f.index != 1)
              throw NotCataloged("flat space form " + std::to_string(f.index) +
                                 " has no shipped presentation");
            const Word x = Word::generator(0), y = Word::generator(1), z = Word::generator(2);
            return Presentation({"x", "y", "z"},
                                {commutator(x, y), commutator(x, z), commutator(y, z)});
          },
          [](const GenericPrime& g) { return g.pi1; },
      },
      prime);
}

bool is_spinorial(const Prime& prime) {
  return std::visit(Overloaded{
                        [](const LensSpace&) { return false; },
                        [](const Handle&) { return false; },
                        [](const GenericPrime& g) { return g.spinorial; },
                        [](const auto&) { return true; },
                    },
                    prime);
}

bool in_hendriks_list(const Prime& prime) {
  return std::visit(
      Overloaded{
          [](const LensSpace&) { return true; },
          [](const Handle&) { return true; },
          // D*_{4m} x Z_p with gcd(4m, p) = 1: the Sylow subgroups are those of
          // D*_{4m} together with those of the cyclic Z_p.
          [](const PrismSpinor& s) {
            if (4 * static_cast<std::size_t>(s.m) > kSylowOrderLimit)
              throw NotCataloged("D*_" + std::to_string(4 * s.m) + " too large to enumerate");
            return sylow_cyclic_by_enumeration(binary_dihedral_presentation(s.m));
          },
          [](const PrismPrimePrime& s) {
            if ((std::size_t{1} << s.k) * static_cast<std::size_t>(s.m) > kSylowOrderLimit)
              throw NotCataloged("D' group too large to enumerate");
            return sylow_cyclic_by_enumeration(prime_prime_presentation(s.k, s.m));
          },
          [](const FlatForm&) { return false; },
          [](const GenericPrime& g) {
            if (g.hendriks) return *g.hendriks;
            if (g.finite == false) return false;
            try {
              return sylow_cyclic_by_enumeration(g.pi1);
            } catch (const CosetLimitExceeded&) {
              throw NotCataloged("cannot enumerate pi_1 of '" + g.name +
                                 "'; declare 'finite' or 'hendriks'");
            }
          },
      },
      prime);
}

bool same_species(const Prime& a, const Prime& b) {
  if (a.index() != b.index()) return false;
  if (const auto* la = std::get_if<LensSpace>(&a)) {
    const auto& lb = std::get<LensSpace>(b);
    return la->p == lb.p && lens_homeomorphic(la->p, la->q, lb.q);
  }
  return a == b;
}

std::optional<Presentation> prime_mcg_presentation(const Prime& prime) {
  return std::visit(Overloaded{
                        [](const LensSpace& l) -> std::optional<Presentation> {
                          return presentation_of(lens_mcg(l.p, l.q));
                        },
                        [](const Handle&) -> std::optional<Presentation> {
                          return presentation_of(NamedGroup::Z2xZ2);
                        },
                        [](const GenericPrime& g) { return g.mcg; },
                        [](const auto&) -> std::optional<Presentation> { return std::nullopt; },
                    },
                    prime);
}

std::vector<LocalAutomorphism> internal_automorphisms(const Prime& prime) {
  if (const auto* g = std::get_if<GenericPrime>(&prime)) return g->internal_automorphisms;
  const auto* l = std::get_if<LensSpace>(&prime);
  if (!l) return {};
  const Word a = Word::generator(0);
  const LocalAutomorphism invert{"invert", {a.inverse()}, {a.inverse()}};
  const int q = symmetric_residue(l->q, l->p);
  switch (lens_mcg(l->p, l->q)) {
    case NamedGroup::Trivial: return {};
    case NamedGroup::Z2: return {invert};
    case NamedGroup::Z4: {
      const int q_inv = symmetric_residue(inverse_mod(l->q, l->p), l->p);
      return {{"power_q", {Word::power(0, q)}, {Word::power(0, q_inv)}}};
    }
    case NamedGroup::Z2xZ2:
      return {invert, {"power_q", {Word::power(0, q)}, {Word::power(0, q)}}};
  }
  return {};
}

bool has_homotopy_implies_isotopy(const Prime& prime) {
  if (const auto* g = std::get_if<GenericPrime>(&prime))
    return g->homotopy_implies_isotopy.value_or(false);
  return true;
}

}  // namespace mcgkit
