#include <map>
#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "mcgkit/errors.hpp"
#include "mcgkit/group/abelian.hpp"
#include "mcgkit/group/free_product.hpp"
#include "mcgkit/manifold/lens.hpp"
#include "mcgkit/mcg/automorphism.hpp"
#include "mcgkit/mcg/generator.hpp"
#include "mcgkit/mcg/particle_group.hpp"
#include "mcgkit/mcg/presentation.hpp"
#include "oracles.hpp"

using namespace mcgkit;

namespace {

const Word a = Word::generator(0);
const Word b = Word::generator(1);
const Word A = a.inverse();
const Word B = b.inverse();

ConnectedSum rp3_sum() { return ConnectedSum({make_lens(2, 1), make_lens(2, 1)}); }

std::vector<std::string> labels_of(const ConnectedSum& sum) {
  std::vector<std::string> out;
  for (const auto& g : enumerate_generators(sum).generators) out.push_back(label(g, sum));
  return out;
}

Prime random_catalog_prime(std::mt19937_64& rng, bool with_prisms) {
  static const std::vector<std::pair<long long, long long>> lenses{
      {2, 1}, {3, 1}, {5, 2}, {7, 1}, {8, 3}, {15, 4}, {15, 1}};
  const int top = with_prisms ? 3 : 1;
  switch (std::uniform_int_distribution<int>(0, top)(rng)) {
    case 0: {
      const auto& [p, q] = lenses[std::uniform_int_distribution<std::size_t>(0, lenses.size() - 1)(rng)];
      return make_lens(p, q);
    }
    case 1: return Handle{};
    case 2: return make_prism_spinor(3, 1);
    default: return make_flat_form(1);
  }
}

ConnectedSum random_sum(std::mt19937_64& rng, int max_primes, bool with_prisms) {
  std::vector<Prime> primes;
  const int n = std::uniform_int_distribution<int>(1, max_primes)(rng);
  for (int i = 0; i < n; ++i) primes.push_back(random_catalog_prime(rng, with_prisms));
  return ConnectedSum(primes);
}

// Independent count of the generator families from the sum's bookkeeping.
GeneratorCounts reference_counts(const ConnectedSum& sum) {
  GeneratorCounts c;
  const std::size_t m = sum.handle_count();
  std::size_t total_gens = 0;
  std::vector<std::size_t> gens(sum.size());
  for (std::size_t i = 0; i < sum.size(); ++i) {
    gens[i] = fundamental_group(sum.prime(i)).generator_count();
    total_gens += gens[i];
    if (!is_handle(sum.prime(i))) c.internals += internal_automorphisms(sum.prime(i)).size();
  }
  c.spins = m;
  for (const auto& s : sum.species()) c.exchanges += s.size() * (s.size() - 1) / 2;
  for (std::size_t k = 0; k < sum.size(); ++k) {
    const std::size_t through = total_gens - gens[k];
    if (is_handle(sum.prime(k))) {
      c.slides_left += through;
      c.slides_right += through;
    } else {
      c.slides_irreducible += through;
    }
  }
  c.neck_twists = sum.spinorial_count();
  c.handle_twists = m;
  return c;
}

bool certified_trivial(const Presentation& p, const Word& w) {
  return free_product_normal_form(p, w).empty();
}

}  // namespace

TEST(Generators, TwoProjectiveSpaces) {
  const auto set = enumerate_generators(rp3_sum());
  ASSERT_EQ(set.generators.size(), 3u);
  EXPECT_EQ(set.generators[0], MCGGenerator(ExchangeGen{0, 1}));
  EXPECT_EQ(set.generators[1], MCGGenerator(SlideIrreducibleGen{0, 0, 1}));
  EXPECT_EQ(set.generators[2], MCGGenerator(SlideIrreducibleGen{1, 0, 0}));
  EXPECT_EQ(set.counts.internals, 0u);
  EXPECT_EQ(set.counts.neck_twists + set.counts.handle_twists, 0u);
  EXPECT_EQ(labels_of(rp3_sum()), (std::vector<std::string>{"omega(1,2)", "mu(1.1,2)", "mu(2.1,1)"}));
}

TEST(Generators, SingleHandle) {
  const ConnectedSum sum({Handle{}});
  const auto set = enumerate_generators(sum);
  ASSERT_EQ(set.generators.size(), 2u);
  EXPECT_EQ(set.generators[0], MCGGenerator(SpinGen{0}));
  EXPECT_EQ(set.generators[1], MCGGenerator(HandleTwistGen{0}));
}

TEST(Generators, ProjectiveSpaceAndHandle) {
  const ConnectedSum sum({make_lens(2, 1), Handle{}});
  const auto set = enumerate_generators(sum);
  const std::vector<MCGGenerator> expected{SpinGen{1}, SlideIrreducibleGen{1, 0, 0},
                                           SlideHandleLeftGen{0, 0, 1},
                                           SlideHandleRightGen{0, 0, 1}, HandleTwistGen{1}};
  ASSERT_EQ(set.generators.size(), 5u);
  for (const auto& g : expected)
    EXPECT_NE(std::find(set.generators.begin(), set.generators.end(), g), set.generators.end())
        << kind_name(g);
}

TEST(Generators, CountsMatchClosedFormOnRandomSums) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const auto sum = random_sum(rng, 6, true);
    const auto set = enumerate_generators(sum);
    EXPECT_EQ(set.counts, expected_counts(sum));
    EXPECT_EQ(set.counts, reference_counts(sum));
    EXPECT_EQ(set.counts.total(), set.generators.size());
    EXPECT_EQ(set.counts.spins, sum.handle_count());
    EXPECT_EQ(set.counts.handle_twists, sum.handle_count());
    EXPECT_EQ(set.counts.neck_twists, sum.spinorial_count());
    std::set<std::string> labels;
    for (const auto& g : set.generators) labels.insert(label(g, sum));
    EXPECT_EQ(labels.size(), set.generators.size()) << "duplicate generator";
    for (const auto& g : set.generators)
      if (const auto* e = std::get_if<ExchangeGen>(&g))
        EXPECT_TRUE(same_species(sum.prime(e->i), sum.prime(e->k)));
  }
}

TEST(InducedAutomorphism, SpinInvertsHandleGenerator) {
  const ConnectedSum sum({make_lens(3, 1), Handle{}});
  const auto f = induced_automorphism(sum, SpinGen{1});
  EXPECT_EQ(f.images[0], a);
  EXPECT_EQ(f.images[1], B);
}

TEST(InducedAutomorphism, SlideConjugates) {
  const auto f = induced_automorphism(rp3_sum(), SlideIrreducibleGen{1, 0, 0});
  EXPECT_EQ(f.images[0], B * a * b);
  EXPECT_EQ(f.images[1], b);
  // b^-1 a b equals b a b once b^2 = 1 is used.
  EXPECT_TRUE(certified_trivial(fundamental_group_sum(rp3_sum()), f.images[0] * (b * a * b).inverse()));
}

TEST(InducedAutomorphism, TwistsAreIdentity) {
  const ConnectedSum sum({make_lens(5, 2), Handle{}, make_prism_spinor(3, 1)});
  const auto n = fundamental_group_sum(sum).generator_count();
  EXPECT_EQ(induced_automorphism(sum, HandleTwistGen{1}), Automorphism::identity(n));
  EXPECT_EQ(induced_automorphism(sum, NeckTwistGen{2}), Automorphism::identity(n));
}

TEST(InducedAutomorphism, HandleSlides) {
  const ConnectedSum sum({make_lens(3, 1), Handle{}});
  const auto left = induced_automorphism(sum, SlideHandleLeftGen{0, 0, 1});
  const auto right = induced_automorphism(sum, SlideHandleRightGen{0, 0, 1});
  EXPECT_EQ(left.images[1], A * b);
  EXPECT_EQ(right.images[1], b * a);
  EXPECT_EQ(left.images[0], a);
}

TEST(InducedAutomorphism, IncompatiblePresentation) {
  const Presentation wrong({"a", "b", "c"}, {});
  EXPECT_THROW(induced_automorphism(rp3_sum(), ExchangeGen{0, 1}, wrong), IncompatiblePresentation);
}

TEST(InducedAutomorphism, OmegaConjugatesMu12ToMu21) {
  const auto sum = rp3_sum();
  const auto p = fundamental_group_sum(sum);
  const MCGGenerator omega = ExchangeGen{0, 1};
  const MCGGenerator mu12 = SlideIrreducibleGen{0, 0, 1};
  const MCGGenerator mu21 = SlideIrreducibleGen{1, 0, 0};
  const auto lhs = compose(induced_automorphism(sum, omega, p),
                           compose(induced_automorphism(sum, mu12, p),
                                   inverse_induced_automorphism(sum, omega, p)));
  const auto rhs = induced_automorphism(sum, mu21, p);
  for (std::size_t g = 0; g < p.generator_count(); ++g)
    EXPECT_TRUE(certified_trivial(p, lhs.images[g] * rhs.images[g].inverse())) << g;
  EXPECT_EQ(check_equal_on_generators(p, lhs, rhs), RelatorCheck::Holds);
}

TEST(InducedAutomorphism, GenuineAutomorphismsOnRandomSums) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 30; ++trial) {
    const auto sum = random_sum(rng, 4, false);
    const auto p = fundamental_group_sum(sum);
    const auto id = Automorphism::identity(p.generator_count());
    for (const auto& g : enumerate_generators(sum).generators) {
      const auto f = induced_automorphism(sum, g, p);
      const auto finv = inverse_induced_automorphism(sum, g, p);
      for (const auto& r : p.relators()) ASSERT_TRUE(certified_trivial(p, f.apply(r))) << label(g, sum);
      for (std::size_t x = 0; x < p.generator_count(); ++x) {
        const Word gx = Word::generator(static_cast<int>(x));
        EXPECT_TRUE(certified_trivial(p, compose(f, finv).apply(gx) * gx.inverse())) << label(g, sum);
        EXPECT_TRUE(certified_trivial(p, compose(finv, f).apply(gx) * gx.inverse())) << label(g, sum);
      }
      EXPECT_EQ(check_equal_on_generators(p, compose(f, finv), id), RelatorCheck::Holds);
    }
  }
}

TEST(InducedAutomorphism, PrismSumUsesDecider) {
  const ConnectedSum sum({make_prism_spinor(3, 1), make_lens(2, 1)});
  const auto p = fundamental_group_sum(sum);
  for (const auto& g : enumerate_generators(sum).generators) {
    const auto f = induced_automorphism(sum, g, p);
    EXPECT_NE(check_relators(p, f), RelatorCheck::Fails) << label(g, sum);
  }
}

TEST(ParticleGroup, IdentityAndSwapSquares) {
  const ConnectedSum sum({make_lens(7, 1), make_lens(7, 1)});
  ParticleGroup g(sum);
  EXPECT_EQ(g.order(), 8u);
  std::mt19937_64 rng(1);
  for (int i = 0; i < 50; ++i) {
    const auto x = g.random(rng);
    EXPECT_EQ(g.multiply(g.identity(), x), x);
    EXPECT_EQ(g.multiply(x, g.identity()), x);
  }
  const auto swap = Permutation::from_cycles(2, {{0, 1}});
  const auto s = g.external_element(0, swap);
  const auto x = g.multiply(g.internal_element(0, Word::generator(0)), s);  // (gamma'; swap)
  const auto y = g.multiply(g.internal_element(1, Word::generator(0)), s);  // (gamma; swap)
  const auto xy = g.multiply(x, y);
  EXPECT_TRUE(xy.external[0].is_identity());
  ParticleGroupElement expected = g.identity();
  expected.internal[0] = g.internal_group(0).reduce(x.internal[0] * y.internal[1]);
  expected.internal[1] = g.internal_group(1).reduce(x.internal[1] * y.internal[0]);
  EXPECT_EQ(xy, expected);
}

TEST(ParticleGroup, OrderEightIsDihedral) {
  const ConnectedSum sum({make_lens(7, 1), make_lens(7, 1)});
  ParticleGroup g(sum);
  auto els = g.elements();
  ASSERT_EQ(els.size(), 8u);
  const auto id_it = std::find(els.begin(), els.end(), g.identity());
  ASSERT_NE(id_it, els.end());
  std::iter_swap(els.begin(), id_it);
  oracle::Table table(8, std::vector<int>(8));
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) {
      const auto it = std::find(els.begin(), els.end(), g.multiply(els[i], els[j]));
      ASSERT_NE(it, els.end());
      table[i][j] = static_cast<int>(it - els.begin());
    }
  const auto tests = oracle::small_test_groups();
  const auto d4 = std::find_if(tests.begin(), tests.end(), [](const auto& t) { return std::string(t.name) == "D4"; });
  const oracle::FiniteGroup dihedral(oracle::closure(d4->gens, d4->degree));
  ASSERT_EQ(dihedral.order(), 8u);
  EXPECT_TRUE(oracle::isomorphic(table, dihedral.table));
  const auto q8 = std::find_if(tests.begin(), tests.end(), [](const auto& t) { return std::string(t.name) == "Q8"; });
  EXPECT_FALSE(oracle::isomorphic(table, oracle::FiniteGroup(oracle::closure(q8->gens, q8->degree)).table));
}

TEST(ParticleGroup, GroupAxiomsOnRandomTriples) {
  std::mt19937_64 rng(29);
  int triples = 0;
  while (triples < 1000) {
    const auto sum = random_sum(rng, 4, false);
    ParticleGroup g(sum);
    for (int k = 0; k < 50; ++k, ++triples) {
      const auto x = g.random(rng), y = g.random(rng), z = g.random(rng);
      ASSERT_EQ(g.multiply(g.multiply(x, y), z), g.multiply(x, g.multiply(y, z)));
      ASSERT_EQ(g.multiply(g.identity(), x), x);
      ASSERT_EQ(g.multiply(x, g.identity()), x);
      ASSERT_EQ(g.multiply(x, g.inverse(x)), g.identity());
      ASSERT_EQ(g.multiply(g.inverse(x), x), g.identity());
    }
  }
}

TEST(ParticleGroup, OrderFormula) {
  const ConnectedSum sum({make_lens(15, 4), make_lens(15, 4), make_lens(15, 4), Handle{}, make_lens(5, 2)});
  ParticleGroup g(sum);
  EXPECT_EQ(g.order(), 4u * 4 * 4 * 4 * 4 * 6);
}

TEST(ParticleGroup, MismatchedStructure) {
  const ConnectedSum sum({make_lens(7, 1), make_lens(7, 1)});
  ParticleGroup g(sum);
  ParticleGroupElement bad = g.identity();
  bad.external.push_back(Permutation::identity(1));
  EXPECT_THROW(g.multiply(bad, g.identity()), MismatchedStructure);
  EXPECT_THROW(ParticleGroup(sum, {presentation_of(NamedGroup::Z2), presentation_of(NamedGroup::Z4)}),
               MismatchedStructure);
  EXPECT_THROW(ParticleGroup(ConnectedSum({make_prism_spinor(3, 1)})), NotCataloged);
}

TEST(McgPresentation, TwoProjectiveSpaces) {
  const auto p = mcg_presentation(rp3_sum());
  EXPECT_EQ(p.to_string(), "<omega,mu | omega^2, mu^2>");
  const auto ab = abelianization(p);
  EXPECT_EQ(ab.free_rank, 0u);
  EXPECT_EQ(ab.torsion_factors, (std::vector<BigInt>{2, 2}));
  const auto three = rp3_sum_three_generator_presentation();
  EXPECT_EQ(three.to_string(), "<omega,mu12,mu21 | omega^2, mu12^2, mu21^2, omega mu12 omega^-1 mu21^-1>");
  EXPECT_EQ(abelianization(three), ab);
}

TEST(McgPresentation, SingleHandleAndLens) {
  EXPECT_EQ(mcg_presentation(ConnectedSum({Handle{}})), presentation_of(NamedGroup::Z2xZ2));
  EXPECT_EQ(mcg_presentation(ConnectedSum({make_lens(15, 4)})), presentation_of(NamedGroup::Z2xZ2));
  EXPECT_EQ(mcg_presentation(ConnectedSum({make_lens(5, 2)})), presentation_of(NamedGroup::Z4));
  EXPECT_THROW(mcg_presentation(ConnectedSum({Handle{}, Handle{}})), UnsupportedSum);
  EXPECT_TRUE(is_rp3_sum(rp3_sum()));
  EXPECT_FALSE(is_rp3_sum(ConnectedSum({make_lens(2, 1)})));
}

TEST(Semidirect, TwoProjectiveSpaces) {
  const auto d = decompose_semidirect(rp3_sum());
  EXPECT_TRUE(d.splits);
  EXPECT_EQ(d.slide_subgroup_generators,
            (std::vector<MCGGenerator>{SlideIrreducibleGen{0, 0, 1}, SlideIrreducibleGen{1, 0, 0}}));
  EXPECT_EQ(d.particle_generators, (std::vector<MCGGenerator>{ExchangeGen{0, 1}}));
  ParticleGroup gp(rp3_sum());
  EXPECT_EQ(gp.order(), 2u);
}

TEST(Semidirect, HandlesDoNotSplit) {
  EXPECT_FALSE(decompose_semidirect(ConnectedSum({Handle{}, Handle{}})).splits);
}

TEST(Semidirect, SingleLens) {
  const auto d = decompose_semidirect(ConnectedSum({make_lens(7, 1)}));
  EXPECT_TRUE(d.splits);
  EXPECT_TRUE(d.slide_subgroup_generators.empty());
  EXPECT_EQ(d.particle_generators.size(), 1u);
}
