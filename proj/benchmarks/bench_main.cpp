#include <benchmark/benchmark.h>

#include "mcgkit/decider/word_decider.hpp"
#include "mcgkit/finite/catalog.hpp"
#include "mcgkit/finite/coset_table.hpp"
#include "mcgkit/finite/homomorphism.hpp"
#include "mcgkit/manifold/connected_sum.hpp"
#include "mcgkit/mcg/generator.hpp"
#include "mcgkit/reps/uir.hpp"

using namespace mcgkit;

namespace {

const Word a = Word::generator(0);
const Word b = Word::generator(1);

Presentation z2_star_z2() { return Presentation({"a", "b"}, {a.pow(2), b.pow(2)}); }

// Palindromes like b a b ... a b are trivial only after several insertions.
Word nested_trivial(int depth) {
  Word w;
  for (int i = 0; i < depth; ++i) w = (i % 2 ? a : b) * w * (i % 2 ? a : b);
  return w;
}

}  // namespace

static void BM_DecideTrivial(benchmark::State& state) {
  const auto p = z2_star_z2();
  const Word w = nested_trivial(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(decide(p, w));
}
BENCHMARK(BM_DecideTrivial)->DenseRange(2, 8, 2);

static void BM_DecideNontrivial(benchmark::State& state) {
  const auto p = z2_star_z2();
  const Word w = (a * b).pow(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(decide(p, w));
}
BENCHMARK(BM_DecideNontrivial)->Arg(1)->Arg(3)->Arg(6);

static void BM_DeciderBatch(benchmark::State& state) {
  WordDecider decider(z2_star_z2());
  std::vector<Word> words;
  for (int k = 0; k < 64; ++k) words.push_back(k % 2 ? nested_trivial(k % 7) : (a * b).pow(k % 5 + 1));
  for (auto _ : state)
    for (const auto& w : words) benchmark::DoNotOptimize(decider.decide(w));
}
BENCHMARK(BM_DeciderBatch);

static void BM_HomomorphismCount(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Presentation p({"a", "b"}, {a.pow(3), b.pow(2), (a * b).pow(2)});
  for (auto _ : state) {
    std::size_t count = 0;
    for_each_homomorphism(p, n, [&](auto) { return ++count, false; });
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_HomomorphismCount)->DenseRange(3, 6);

static void BM_CosetEnumeration(benchmark::State& state) {
  const std::vector<Presentation> groups{binary_dihedral_presentation(5), prime_prime_presentation(4, 3),
                                         Presentation({"a", "b"}, {a.pow(3), b.pow(2), (a * b).pow(5)})};
  const auto& p = groups.at(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_cosets(p));
}
BENCHMARK(BM_CosetEnumeration)->DenseRange(0, 2);

static void BM_SymmetricClosure(benchmark::State& state) {
  for (auto _ : state) {
    const auto g = PermutationGroup::symmetric(static_cast<std::size_t>(state.range(0)));
    benchmark::DoNotOptimize(g.order());
  }
}
BENCHMARK(BM_SymmetricClosure)->DenseRange(4, 7);

static void BM_EnumerateGenerators(benchmark::State& state) {
  std::vector<Prime> primes;
  for (int i = 0; i < state.range(0); ++i)
    primes.push_back(i % 3 == 2 ? Prime(Handle{}) : Prime(make_lens(15, 4)));
  const ConnectedSum sum(primes);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_generators(sum));
}
BENCHMARK(BM_EnumerateGenerators)->RangeMultiplier(2)->Range(2, 32);

static void BM_RhoTauAnalysis(benchmark::State& state) {
  const auto p = z2_star_z2_presentation();
  for (auto _ : state) {
    const auto r = rho_tau(1.0);
    benchmark::DoNotOptimize(verify_relations(r, p));
    benchmark::DoNotOptimize(commutant_dimension(r));
  }
}
BENCHMARK(BM_RhoTauAnalysis);
BENCHMARK_MAIN();
