// Acceptance report: one PASS/FAIL line per criterion, each with a wall-clock limit.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <set>
#include <string>

#include "cli.hpp"
#include "mcgkit/decider/word_decider.hpp"
#include "mcgkit/finite/catalog.hpp"
#include "mcgkit/finite/homomorphism.hpp"
#include "mcgkit/group/abelian.hpp"
#include "mcgkit/group/free_product.hpp"
#include "mcgkit/io/json.hpp"
#include "mcgkit/manifold/connected_sum.hpp"
#include "mcgkit/manifold/lens.hpp"
#include "mcgkit/mcg/automorphism.hpp"
#include "mcgkit/mcg/generator.hpp"
#include "mcgkit/mcg/particle_group.hpp"
#include "mcgkit/mcg/presentation.hpp"
#include "mcgkit/reps/matrix_rep.hpp"
#include "mcgkit/reps/uir.hpp"
#include "oracles.hpp"

using namespace mcgkit;

namespace {

constexpr double kUnitarityTol = 1e-12;
constexpr double kScalarTol = 1e-12;
constexpr int kTauSamples = 50;

struct Check {
  bool ok = true;
  std::string detail;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

const Word a = Word::generator(0);
const Word b = Word::generator(1);

Presentation z2_star_z2() { return Presentation({"a", "b"}, {a.pow(2), b.pow(2)}); }
ConnectedSum rp3_sum() { return ConnectedSum({make_lens(2, 1), make_lens(2, 1)}); }

Check lens_facts() {
  Check c;
  const auto r = cli::run(cli::ClassifyLens{15, 1, 4});
  c.require(r.exit_status == 0, "classify-lens exit status");
  c.require(r.results == parse_json_text(
                             R"({"homeomorphic":false,"homotopy_equivalent":true,"mcg":["Z2","Z2xZ2"]})"),
            "classify-lens 15 1 4 report");
  c.require(!lens_homeomorphic(15, 1, 4), "L(15,1) vs L(15,4) homeomorphic");
  c.require(lens_homotopy_equivalent(15, 1, 4), "L(15,1) vs L(15,4) homotopy");
  c.require(lens_mcg(15, 1) == NamedGroup::Z2, "mcg L(15,1)");
  c.require(lens_mcg(15, 4) == NamedGroup::Z2xZ2, "mcg L(15,4)");
  c.require(lens_mcg(5, 2) == NamedGroup::Z4, "mcg L(5,2)");
  c.require(lens_mcg(2, 1) == NamedGroup::Trivial, "mcg L(2,1)");
  const auto r52 = cli::run(cli::ClassifyLens{5, 2, std::nullopt});
  c.require(r52.results["mcg"] == Json({"Z4"}), "classify-lens 5 2 report");
  const auto r21 = cli::run(cli::ClassifyLens{2, 1, std::nullopt});
  c.require(r21.results["mcg"] == Json({"Trivial"}), "classify-lens 2 1 report");
  return c;
}

Check rp3_pipeline() {
  Check c;
  const auto sum = rp3_sum();
  const auto pi1 = fundamental_group_sum(sum);
  c.require(pi1.labels() == std::vector<std::string>{"a", "b"} &&
                pi1.relators() == std::vector<Word>{a.pow(2), b.pow(2)},
            "pi_1 presentation");
  const auto gens = enumerate_generators(sum).generators;
  const std::vector<MCGGenerator> expected{ExchangeGen{0, 1}, SlideIrreducibleGen{0, 0, 1},
                                           SlideIrreducibleGen{1, 0, 0}};
  c.require(gens == expected, "generator set");
  const auto p = mcg_presentation(sum);
  c.require(p.to_string() == "<omega,mu | omega^2, mu^2>", "mcg presentation");
  const auto ab = abelianization(p);
  c.require(ab.free_rank == 0 && ab.torsion_factors == std::vector<BigInt>{2, 2}, "abelianization");
  const auto d = decompose_semidirect(sum);
  c.require(d.splits, "semidirect splits");
  c.require(d.particle_generators == std::vector<MCGGenerator>{ExchangeGen{0, 1}}, "particle generators");
  c.require(ParticleGroup(sum).order() == 2, "particle group order");
  return c;
}

Check decider_vs_oracle() {
  Check c;
  const auto p = z2_star_z2();
  WordDecider decider(p, Budget{8, 5, Budget{}.max_steps});
  std::size_t total = 0, exhausted = 0, disagreements = 0;
  for (const auto& w : oracle::freely_reduced_words(2, 12)) {
    ++total;
    const auto v = decider.decide(w);
    if (std::holds_alternative<ExhaustedVerdict>(v)) {
      ++exhausted;
      continue;
    }
    const bool trivial = std::holds_alternative<TrivialVerdict>(v);
    if (trivial != free_product_normal_form(p, w).empty()) ++disagreements;
    if (trivial && !replay_derivation(p, w, std::get<TrivialVerdict>(v).derivation)) ++disagreements;
    if (!trivial && !verify_witness(p, w, std::get<NontrivialVerdict>(v).witness)) ++disagreements;
  }
  // 1 + sum over L = 1..12 of 4 * 3^(L-1)
  c.require(total == 1062881, "word count " + std::to_string(total));
  c.require(exhausted == 0, std::to_string(exhausted) + " exhausted verdicts");
  c.require(disagreements == 0, std::to_string(disagreements) + " disagreements");
  if (c.ok) c.detail = std::to_string(total) + " words";
  return c;
}

Check hom_counts() {
  Check c;
  const auto p = z2_star_z2();
  c.require(enumerate_homomorphisms(p, 2).size() == 4, "S2 count");
  c.require(enumerate_homomorphisms(p, 3).size() == 16, "S3 count");
  c.require(oracle::brute_force_hom_count(p, 2) == 4, "S2 brute force");
  c.require(oracle::brute_force_hom_count(p, 3) == 16, "S3 brute force");
  return c;
}

Check sylow() {
  Check c;
  const auto catalog = builtin_group_catalog();
  c.require(!sylow_all_cyclic(find_group(catalog, "Q8").group), "Q8");
  c.require(sylow_all_cyclic(PermutationGroup::cyclic(6)), "Z6");
  c.require(sylow_all_cyclic(find_group(catalog, "Dic12").group), "dicyclic 12");
  auto raw = [](const PermutationGroup& g) {
    std::vector<oracle::Perm> out;
    for (const auto& e : g.elements(64)) out.emplace_back(e.images().begin(), e.images().end());
    return out;
  };
  std::size_t compared = 0;
  for (const auto& tg : oracle::small_test_groups()) {
    std::vector<Permutation> gens;
    for (const auto& g : tg.gens)
      gens.emplace_back(std::vector<Permutation::Point>(g.begin(), g.end()));
    const PermutationGroup g(tg.degree, gens);
    c.require(sylow_all_cyclic(g) ==
                  oracle::sylow_all_cyclic_by_subgroups(oracle::FiniteGroup(raw(g))),
              std::string("subgroup search disagrees on ") + tg.name);
    ++compared;
  }
  for (const auto& ng : catalog) {
    if (ng.group.order(64) > 24) continue;
    c.require(sylow_all_cyclic(ng.group, 64) ==
                  oracle::sylow_all_cyclic_by_subgroups(oracle::FiniteGroup(raw(ng.group))),
              "subgroup search disagrees on " + ng.name);
    ++compared;
  }
  if (c.ok) c.detail = std::to_string(compared) + " groups cross-checked";
  return c;
}

Check spinoriality() {
  Check c;
  const std::vector<Prime> catalog{make_lens(2, 1), make_lens(15, 4), make_lens(5, 2), Handle{},
                                   make_prism_spinor(3, 1), make_prism_spinor(5, 3),
                                   make_prism_prime_prime(4, 3, 1), make_flat_form(1),
                                   make_flat_form(3)};
  for (const auto& pr : catalog) {
    const bool expected = !(std::holds_alternative<LensSpace>(pr) || std::holds_alternative<Handle>(pr));
    c.require(is_spinorial(pr) == expected, "is_spinorial " + describe(pr));
  }
  const auto fig = manifold_from_json(
      read_json_file(MCGKIT_DATA_DIR "/manifolds/two_handles_four_spinorial.json"));
  c.require(kernel_rank(fig) == 6, "kernel rank of 2 handles + 4 spinorial primes");
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<std::size_t> pick(0, catalog.size() - 1);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Prime> primes;
    const int n = std::uniform_int_distribution<int>(1, 6)(rng);
    bool any = false;
    for (int i = 0; i < n; ++i) {
      primes.push_back(catalog[pick(rng)]);
      any |= is_spinorial(primes.back());
    }
    const ConnectedSum sum(primes);
    c.require(is_spinorial_sum(sum) == any, "is_spinorial_sum disjunction");
    c.require((extension_type(sum) == ExtensionVerdict::CentralZ2Extension) == any, "extension type");
  }
  return c;
}

Check uir_suite() {
  Check c;
  const auto p = z2_star_z2_presentation();
  const auto found = scan_one_dimensional(p, 12);
  c.require(found.size() == 4, "one-dimensional scan found " + std::to_string(found.size()));
  const auto catalog = classify_uirs_z2star_z2();
  std::size_t one_dim = 0;
  for (const auto& e : catalog) {
    if (e.dimension == 1) {
      ++one_dim;
      const auto r = e.construct(0);
      c.require(verify_relations(r, p), e.name + " relations");
      const bool bosonic = r.matrix(0)(0, 0).real() > 0;
      c.require(sector_analysis(r, 0) == (bosonic ? SectorLabel::Bosonic : SectorLabel::Fermionic),
                e.name + " sector");
      continue;
    }
    for (int i = 1; i <= kTauSamples; ++i) {
      const double tau = std::numbers::pi * i / (kTauSamples + 1);
      const auto r = e.construct(tau);
      c.require(verify_relations(r, p), "rho_tau relations");
      for (const auto& m : r.matrices()) c.require(unitarity_defect(m) < kUnitarityTol, "unitarity");
      c.require(commutant_dimension(r) == 1, "commutant dimension");
      const auto l = central_element_scalar(r, p);
      c.require(l && std::abs(*l - std::complex<double>(2 * std::cos(tau))) < kScalarTol, "central scalar");
      c.require(sector_analysis(r, 0) == SectorLabel::Mixed, "rho_tau sector");
    }
  }
  c.require(one_dim == 4, "four one-dimensional catalog entries");
  const auto names = [&] {
    std::set<std::string> s;
    for (const auto& e : catalog) s.insert(e.name);
    return s;
  }();
  c.require(names.count("rho1") && names.count("rho2") && names.count("rho3") && names.count("rho4"),
            "catalog names");
  return c;
}

Check particle_group() {
  Check c;
  const ParticleGroup g(ConnectedSum({make_lens(7, 1), make_lens(7, 1)}));
  auto els = g.elements();
  c.require(els.size() == 8, "order 8");
  if (!c.ok) return c;
  std::iter_swap(els.begin(), std::find(els.begin(), els.end(), g.identity()));
  oracle::Table table(8, std::vector<int>(8));
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j)
      table[i][j] = static_cast<int>(
          std::find(els.begin(), els.end(), g.multiply(els[i], els[j])) - els.begin());
  // Dihedral group of order 8: symmetries of a square on 4 points.
  const oracle::FiniteGroup d8(oracle::closure({{1, 2, 3, 0}, {0, 3, 2, 1}}, 4));
  c.require(d8.order() == 8, "dihedral reference order");
  c.require(oracle::isomorphic(table, d8.table), "isomorphic to dihedral group of order 8");

  std::mt19937_64 rng(8);
  const std::vector<Prime> pool{make_lens(2, 1), make_lens(7, 1), make_lens(15, 4), make_lens(5, 2), Handle{}};
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  int triples = 0;
  while (triples < 1000) {
    std::vector<Prime> primes;
    const int n = std::uniform_int_distribution<int>(1, 4)(rng);
    for (int i = 0; i < n; ++i) primes.push_back(pool[pick(rng)]);
    const ParticleGroup h{ConnectedSum(primes)};
    for (int k = 0; k < 100 && triples < 1000; ++k, ++triples) {
      const auto x = h.random(rng), y = h.random(rng), z = h.random(rng);
      c.require(h.multiply(h.multiply(x, y), z) == h.multiply(x, h.multiply(y, z)), "associativity");
      c.require(h.multiply(h.identity(), x) == x && h.multiply(x, h.identity()) == x, "identity");
      c.require(h.multiply(x, h.inverse(x)) == h.identity(), "inverse");
    }
  }
  return c;
}

Check induced_automorphisms() {
  Check c;
  const auto sum = rp3_sum();
  const auto p = fundamental_group_sum(sum);
  const MCGGenerator omega = ExchangeGen{0, 1};
  const auto lhs = compose(induced_automorphism(sum, omega, p),
                           compose(induced_automorphism(sum, SlideIrreducibleGen{0, 0, 1}, p),
                                   inverse_induced_automorphism(sum, omega, p)));
  const auto rhs = induced_automorphism(sum, SlideIrreducibleGen{1, 0, 0}, p);
  for (std::size_t g = 0; g < p.generator_count(); ++g)
    c.require(free_product_normal_form(p, lhs.images[g] * rhs.images[g].inverse()).empty(),
              "omega mu12 omega^-1 differs from mu21");
  for (const auto& g : enumerate_generators(sum).generators) {
    const auto f = induced_automorphism(sum, g, p);
    for (const auto& r : p.relators()) {
      const auto v = decide(p, f.apply(r));
      c.require(std::holds_alternative<TrivialVerdict>(v) &&
                    replay_derivation(p, f.apply(r), std::get<TrivialVerdict>(v).derivation),
                label(g, sum) + " relator image not certified trivial");
    }
  }
  return c;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    double limit_seconds;
    std::function<Check()> run;
  };
  const std::vector<Criterion> criteria{
      {"lens-space facts", 1, lens_facts},
      {"RP3#RP3 pipeline", 1, rp3_pipeline},
      {"word decider vs normal form (length <= 12)", 60, decider_vs_oracle},
      {"homomorphism counts", 5, hom_counts},
      {"Sylow cyclicity", 10, sylow},
      {"spinoriality and kernel", 5, spinoriality},
      {"UIR suite", 5, uir_suite},
      {"particle group", 10, particle_group},
      {"induced automorphisms", 5, induced_automorphisms},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto& cr = criteria[i];
    const auto t0 = std::chrono::steady_clock::now();
    Check result;
    try {
      result = cr.run();
    } catch (const std::exception& e) {
      result.ok = false;
      result.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = secs < cr.limit_seconds;
    const bool pass = result.ok && in_time;
    if (!pass) ++failures;
    std::string detail = result.detail;
    if (!in_time) detail += (detail.empty() ? "" : "; ") + std::string("over time limit");
    std::printf("criterion %zu [%s]: %s (%.3f s, limit %.0f s)%s%s\n", i + 1, cr.name,
                pass ? "PASS" : "FAIL", secs, cr.limit_seconds, detail.empty() ? "" : " - ",
                detail.c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
