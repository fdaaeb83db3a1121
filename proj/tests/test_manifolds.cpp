#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "mcgkit/errors.hpp"
#include "mcgkit/finite/coset_table.hpp"
#include "mcgkit/group/abelian.hpp"
#include "mcgkit/io/json.hpp"
#include "mcgkit/manifold/connected_sum.hpp"
#include "mcgkit/manifold/lens.hpp"
#include "oracles.hpp"

using namespace mcgkit;

namespace {

const Word a = Word::generator(0);
const Word b = Word::generator(1);

Prime rp3() { return make_lens(2, 1); }

// Reference arithmetic, written independently of the library.
long long md(long long x, long long p) { return ((x % p) + p) % p; }

bool ref_homeomorphic(long long p, long long q, long long r) {
  return md(r - q, p) == 0 || md(r + q, p) == 0 || md(q * r - 1, p) == 0 || md(q * r + 1, p) == 0;
}

bool ref_homotopy(long long p, long long q, long long r) {
  for (long long n = 0; n < p; ++n)
    if (md(q * r - n * n, p) == 0 || md(q * r + n * n, p) == 0) return true;
  return false;
}

long long inverse_mod(long long q, long long p) {
  for (long long x = 1; x < p; ++x)
    if (md(q * x, p) == 1) return x;
  return 0;
}

GenericPrime quaternionic() {
  GenericPrime g;
  g.name = "S3/Q8";
  g.pi1 = Presentation({"i", "j"}, {a.pow(4), a.pow(2) * b.pow(-2), b.inverse() * a * b * a});
  g.spinorial = true;
  g.finite = true;
  g.homotopy_implies_isotopy = true;
  return g;
}

Prime random_prime(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> kind(0, 4);
  switch (kind(rng)) {
    case 0: {
      std::uniform_int_distribution<long long> pd(1, 30);
      const long long p = pd(rng);
      long long q = 1;
      for (long long c = std::uniform_int_distribution<long long>(0, p)(rng); c < 2 * p + 2; ++c)
        if (std::gcd(c, p) == 1) {
          q = c;
          break;
        }
      return make_lens(p, q);
    }
    case 1: return Handle{};
    case 2: return make_prism_spinor(std::uniform_int_distribution<int>(0, 1)(rng) ? 3 : 5, 1);
    case 3: return make_flat_form(1);
    default: return make_prism_prime_prime(4, 3, 1);
  }
}

}  // namespace

TEST(Lens, ConstructorReducesQ) {
  const auto l = make_lens(7, 9);
  EXPECT_EQ(l.q, 2);
  EXPECT_THROW(make_lens(6, 2), BadParameters);
  EXPECT_THROW(make_lens(0, 1), BadParameters);
}

TEST(Lens, HomeomorphicExamples) {
  EXPECT_FALSE(lens_homeomorphic(15, 1, 4));
  EXPECT_TRUE(lens_homeomorphic(7, 1, 6));
  EXPECT_TRUE(lens_homeomorphic(11, 3, 3));
  EXPECT_THROW(lens_homeomorphic(15, 3, 1), BadParameters);
  EXPECT_THROW(lens_homeomorphic(15, 1, 5), BadParameters);
}

TEST(Lens, HomotopyExamples) {
  EXPECT_TRUE(lens_homotopy_equivalent(15, 1, 4));
  EXPECT_FALSE(lens_homotopy_equivalent(15, 1, 2));
  EXPECT_TRUE(lens_homotopy_equivalent(13, 5, 5));
  EXPECT_THROW(lens_homotopy_equivalent(9, 3, 1), BadParameters);
}

TEST(Lens, MappingClassGroupExamples) {
  EXPECT_EQ(lens_mcg(15, 4), NamedGroup::Z2xZ2);
  EXPECT_EQ(lens_mcg(15, 1), NamedGroup::Z2);
  EXPECT_EQ(lens_mcg(5, 2), NamedGroup::Z4);
  EXPECT_EQ(lens_mcg(2, 1), NamedGroup::Trivial);
  EXPECT_EQ(lens_mcg(1, 0), NamedGroup::Trivial);
  EXPECT_THROW(lens_mcg(4, 2), BadParameters);
}

TEST(Lens, ExhaustivePropertiesUpTo50) {
  for (long long p = 1; p <= 50; ++p) {
    std::vector<long long> units;
    for (long long q = 0; q < p; ++q)
      if (std::gcd(q, p) == 1) units.push_back(q);
    for (long long q : units) {
      ASSERT_TRUE(lens_homeomorphic(p, q, q));
      ASSERT_TRUE(lens_homotopy_equivalent(p, q, q));
      const auto g = lens_mcg(p, q);
      EXPECT_EQ(g, lens_mcg(p, md(p - q, p)));
      EXPECT_EQ(g, lens_mcg(p, p == 1 ? 0 : inverse_mod(q, p)));
      for (long long r : units) {
        const bool h = lens_homeomorphic(p, q, r);
        const bool he = lens_homotopy_equivalent(p, q, r);
        ASSERT_EQ(h, ref_homeomorphic(p, q, r)) << p << " " << q << " " << r;
        ASSERT_EQ(he, ref_homotopy(p, q, r)) << p << " " << q << " " << r;
        EXPECT_TRUE(!h || he);
        EXPECT_EQ(h, lens_homeomorphic(p, r, q));
        EXPECT_EQ(he, lens_homotopy_equivalent(p, r, q));
        if (h) EXPECT_EQ(g, lens_mcg(p, r));
      }
    }
  }
}

TEST(Lens, NamedGroupPresentationsHaveRightOrder) {
  EXPECT_EQ(FiniteGroupModel(presentation_of(NamedGroup::Trivial)).order(), 1u);
  EXPECT_EQ(FiniteGroupModel(presentation_of(NamedGroup::Z2)).order(), 2u);
  EXPECT_EQ(FiniteGroupModel(presentation_of(NamedGroup::Z4)).order(), 4u);
  FiniteGroupModel v4(presentation_of(NamedGroup::Z2xZ2));
  EXPECT_EQ(v4.order(), 4u);
  for (std::size_t e = 1; e < 4; ++e) EXPECT_EQ(v4.element_order(e), 2u);
}

TEST(Prime, Validation) {
  EXPECT_THROW(make_prism_spinor(4, 1), BadParameters);
  EXPECT_THROW(make_prism_spinor(3, 3), BadParameters);
  EXPECT_THROW(make_prism_spinor(3, 2), BadParameters);
  EXPECT_NO_THROW(make_prism_spinor(3, 5));
  EXPECT_THROW(make_prism_prime_prime(3, 3, 1), BadParameters);
  EXPECT_THROW(make_prism_prime_prime(4, 3, 2), BadParameters);
  EXPECT_THROW(make_flat_form(7), BadParameters);
  EXPECT_NO_THROW(make_flat_form(6));
}

TEST(FundamentalGroup, Catalog) {
  EXPECT_EQ(fundamental_group(rp3()), Presentation({"a"}, {a.pow(2)}));
  const auto h = fundamental_group(Handle{});
  EXPECT_EQ(h.generator_count(), 1u);
  EXPECT_TRUE(h.relators().empty());
  const auto t3 = fundamental_group(make_flat_form(1));
  EXPECT_EQ(abelianization(t3).free_rank, 3u);
  EXPECT_THROW(fundamental_group(make_flat_form(2)), NotCataloged);
}

TEST(FundamentalGroup, PrismSpinorHasOrder12) {
  const auto p = fundamental_group(make_prism_spinor(3, 1));
  FiniteGroupModel model(p);
  EXPECT_EQ(model.order(), 12u);
  const auto reg = model.regular_representation();
  std::vector<oracle::Perm> gens;
  for (const auto& g : reg.generators()) gens.emplace_back(g.images().begin(), g.images().end());
  EXPECT_EQ(oracle::closure(gens, reg.degree()).size(), 12u);
  // The regular representation is a homomorphism of p: relators hold on the images.
  for (const auto& r : p.relators())
    EXPECT_EQ(oracle::evaluate(r, gens, reg.degree()), oracle::identity(reg.degree()));
}

TEST(FundamentalGroup, OrdersOfFiniteFamilies) {
  EXPECT_EQ(FiniteGroupModel(fundamental_group(make_prism_spinor(5, 3))).order(), 60u);
  EXPECT_EQ(FiniteGroupModel(fundamental_group(make_prism_prime_prime(4, 3, 1))).order(), 48u);
  EXPECT_EQ(FiniteGroupModel(fundamental_group(make_lens(9, 2))).order(), 9u);
}

TEST(FundamentalGroupSum, TwoProjectiveSpaces) {
  const auto p = fundamental_group_sum(ConnectedSum({rp3(), rp3()}));
  EXPECT_EQ(p.labels(), (std::vector<std::string>{"a", "b"}));
  EXPECT_EQ(p.relators(), (std::vector<Word>{a.pow(2), b.pow(2)}));
  EXPECT_EQ(p.factors().size(), 2u);
}

TEST(FundamentalGroupSum, TwoHandles) {
  const auto p = fundamental_group_sum(ConnectedSum({Handle{}, Handle{}}));
  EXPECT_EQ(p.generator_count(), 2u);
  EXPECT_TRUE(p.relators().empty());
}

TEST(FundamentalGroupSum, LensAndHandle) {
  const auto p = fundamental_group_sum(ConnectedSum({make_lens(3, 1), Handle{}}));
  EXPECT_EQ(p.to_string(), "<a,b | a^3>");
}

TEST(FundamentalGroupSum, RandomSumsFactorCountAndAbelianization) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Prime> primes;
    const int n = std::uniform_int_distribution<int>(1, 5)(rng);
    for (int i = 0; i < n; ++i) primes.push_back(random_prime(rng));
    const ConnectedSum sum(primes);
    const auto p = fundamental_group_sum(sum);
    ASSERT_EQ(p.factors().size(), sum.size());
    std::vector<AbelianGroupStructure> parts;
    for (const auto& pr : primes) parts.push_back(abelianization(fundamental_group(pr)));
    EXPECT_EQ(abelianization(p), direct_sum(parts));
    EXPECT_EQ(sum.irreducible_count() + sum.handle_count(), sum.size());
    EXPECT_LE(sum.spinorial_count(), sum.irreducible_count());
    std::size_t species_total = 0;
    for (const auto& s : sum.species()) species_total += s.size();
    EXPECT_EQ(species_total, sum.size());
    EXPECT_EQ(extension_type(sum) == ExtensionVerdict::CentralZ2Extension, is_spinorial_sum(sum));
    EXPECT_EQ(kernel_rank(sum), sum.handle_count() + sum.spinorial_count());
  }
}

TEST(ConnectedSum, EmptyRejected) { EXPECT_THROW(ConnectedSum(std::vector<Prime>{}), ValidationError); }

TEST(ConnectedSum, SpeciesUseLensHomeomorphism) {
  const ConnectedSum sum({make_lens(7, 1), Handle{}, make_lens(7, 6), make_lens(7, 2), Handle{}});
  ASSERT_EQ(sum.species().size(), 3u);
  EXPECT_EQ(sum.species()[0], (std::vector<std::size_t>{0, 2}));
  EXPECT_EQ(sum.species()[1], (std::vector<std::size_t>{1, 4}));
  EXPECT_EQ(sum.species()[2], (std::vector<std::size_t>{3}));
}

TEST(Spinorial, Primes) {
  EXPECT_FALSE(is_spinorial(make_lens(15, 4)));
  EXPECT_FALSE(is_spinorial(Handle{}));
  EXPECT_TRUE(is_spinorial(make_prism_spinor(3, 1)));
  EXPECT_TRUE(is_spinorial(make_flat_form(1)));
  EXPECT_TRUE(is_spinorial(make_prism_prime_prime(4, 3, 1)));
  auto g = quaternionic();
  g.spinorial = false;
  EXPECT_FALSE(is_spinorial(g));
}

TEST(Spinorial, Sums) {
  EXPECT_FALSE(is_spinorial_sum(ConnectedSum({rp3(), rp3()})));
  EXPECT_TRUE(is_spinorial_sum(ConnectedSum({make_lens(7, 1), make_prism_spinor(3, 1)})));
  EXPECT_FALSE(is_spinorial_sum(ConnectedSum({make_lens(5, 1)})));
}

TEST(Hendriks, Examples) {
  EXPECT_TRUE(in_hendriks_list(make_lens(15, 4)));
  EXPECT_TRUE(in_hendriks_list(Handle{}));
  EXPECT_TRUE(in_hendriks_list(make_prism_spinor(3, 1)));
  EXPECT_TRUE(in_hendriks_list(make_prism_spinor(5, 7)));
  EXPECT_FALSE(in_hendriks_list(quaternionic()));
  EXPECT_FALSE(in_hendriks_list(make_flat_form(1)));
  // D'_{48} has cyclic Sylow subgroups (Z16 and Z3).
  EXPECT_TRUE(in_hendriks_list(make_prism_prime_prime(4, 3, 1)));
}

TEST(Hendriks, DeclaredValueWinsAndInfiniteGenericIsExcluded) {
  GenericPrime g = quaternionic();
  g.hendriks = true;
  EXPECT_TRUE(in_hendriks_list(g));
  GenericPrime inf;
  inf.name = "F3";
  inf.pi1 = Presentation({"x", "y", "z"}, {});
  inf.finite = false;
  EXPECT_FALSE(in_hendriks_list(inf));
}

TEST(Hendriks, NonSpinorialImpliesInList) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const auto pr = random_prime(rng);
    if (!is_spinorial(pr)) EXPECT_TRUE(in_hendriks_list(pr)) << describe(pr);
  }
}

TEST(Extension, Examples) {
  EXPECT_EQ(extension_type(ConnectedSum({rp3(), rp3()})), ExtensionVerdict::Isomorphic);
  EXPECT_EQ(extension_type(ConnectedSum({make_prism_spinor(3, 1)})),
            ExtensionVerdict::CentralZ2Extension);
  EXPECT_EQ(extension_type(ConnectedSum({Handle{}, Handle{}})), ExtensionVerdict::Isomorphic);
}

TEST(KernelRank, Examples) {
  const auto sum = manifold_from_json(
      read_json_file(MCGKIT_DATA_DIR "/manifolds/two_handles_four_spinorial.json"));
  EXPECT_EQ(sum.handle_count(), 2u);
  EXPECT_EQ(sum.spinorial_count(), 4u);
  EXPECT_EQ(kernel_rank(sum), 6u);
  EXPECT_EQ(kernel_rank(ConnectedSum({rp3(), rp3()})), 0u);
  EXPECT_EQ(kernel_rank(ConnectedSum({Handle{}})), 1u);
}

TEST(KernelRank, GenericWithoutFlag) {
  auto g = quaternionic();
  g.homotopy_implies_isotopy.reset();
  EXPECT_THROW(kernel_rank(ConnectedSum({g, rp3()})), AssumptionViolated);
}

TEST(Chirality, ReversedOrientationIsDistinctSpecies) {
  auto g = quaternionic();
  g.chiral = true;
  const auto r = reversed_orientation(g);
  EXPECT_EQ(r.name, "S3/Q8_rev");
  EXPECT_EQ(reversed_orientation(r).name, g.name);
  const ConnectedSum sum({g, r, g});
  EXPECT_EQ(sum.species().size(), 2u);
  g.chiral = false;
  EXPECT_THROW(reversed_orientation(g), BadParameters);
}

TEST(Describe, Names) {
  EXPECT_EQ(describe(make_lens(5, 2)), "L(5,2)");
  EXPECT_EQ(describe(Handle{}), "S1xS2");
  EXPECT_EQ(describe(make_flat_form(1)), "flat1");
}
