#include "cli.hpp"

#include <cmath>
#include <filesystem>
#include <numbers>
#include <random>

#include "mcgkit/errors.hpp"
#include "mcgkit/finite/homomorphism.hpp"
#include "mcgkit/group/abelian.hpp"
#include "mcgkit/manifold/connected_sum.hpp"
#include "mcgkit/manifold/lens.hpp"
#include "mcgkit/mcg/automorphism.hpp"
#include "mcgkit/mcg/generator.hpp"
#include "mcgkit/mcg/presentation.hpp"
#include "mcgkit/reps/uir.hpp"

namespace mcgkit::cli {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

Json presentation_report(const Presentation& p) {
  Json out = presentation_to_json(p);
  out["text"] = p.to_string();
  return out;
}

Json permutation_json(const Permutation& perm) { return perm.to_cycle_string(); }

Json assignment_json(const Presentation& p, std::span<const Permutation> images) {
  Json out = Json::object();
  for (std::size_t g = 0; g < images.size(); ++g)
    out[p.label(static_cast<int>(g))] = permutation_json(images[g]);
  return out;
}

std::string kind_of(const Prime& prime) {
  static constexpr const char* kKinds[] = {"lens", "handle", "prism_spinor",
                                           "prism_prime_prime", "flat", "generic"};
  return kKinds[prime.index()];
}

Json species_json(const ConnectedSum& sum) {
  Json out = Json::array();
  for (const auto& cls : sum.species()) {
    Json ids = Json::array();
    for (auto i : cls) ids.push_back(i + 1);
    out.push_back(std::move(ids));
  }
  return out;
}

ConnectedSum load_manifold(const std::string& path) {
  return manifold_from_json(read_json_file(path));
}

void classify_lens(const ClassifyLens& c, Report& r) {
  Json mcg = Json::array({to_string(lens_mcg(c.p, c.q))});
  if (c.q_prime) {
    r.results["homeomorphic"] = lens_homeomorphic(c.p, c.q, *c.q_prime);
    r.results["homotopy_equivalent"] = lens_homotopy_equivalent(c.p, c.q, *c.q_prime);
    mcg.push_back(to_string(lens_mcg(c.p, *c.q_prime)));
  }
  r.results["mcg"] = std::move(mcg);
}

void analyze_manifold(const AnalyzeManifold& c, Report& r) {
  const ConnectedSum sum = load_manifold(c.path);
  Json primes = Json::array();
  bool all_hendriks = true;
  bool hendriks_known = true;
  for (std::size_t i = 0; i < sum.size(); ++i) {
    const auto& prime = sum.prime(i);
    Json entry{{"index", i + 1},
               {"kind", kind_of(prime)},
               {"description", describe(prime)},
               {"irreducible", is_irreducible(prime)},
               {"spinorial", is_spinorial(prime)}};
    try {
      const bool h = in_hendriks_list(prime);
      entry["hendriks"] = h;
      all_hendriks = all_hendriks && h;
    } catch (const NotCataloged& e) {
      entry["hendriks"] = nullptr;
      hendriks_known = false;
      r.warnings.push_back("prime " + std::to_string(i + 1) + ": " + e.what());
    }
    primes.push_back(std::move(entry));
  }
  r.results["primes"] = std::move(primes);
  r.results["counts"] = {{"N", sum.size()},
                         {"n", sum.irreducible_count()},
                         {"m", sum.handle_count()},
                         {"n_s", sum.spinorial_count()}};
  r.results["species"] = species_json(sum);
  try {
    const auto pi1 = fundamental_group_sum(sum);
    r.results["pi1"] = presentation_report(pi1);
    r.results["abelianization"] = abelianization(pi1).to_string();
  } catch (const NotCataloged& e) {
    r.results["pi1"] = nullptr;
    r.warnings.push_back(e.what());
  }
  r.results["spinorial"] = is_spinorial_sum(sum);
  r.results["extension"] = to_string(extension_type(sum));
  try {
    r.results["kernel_rank"] = kernel_rank(sum);
  } catch (const AssumptionViolated& e) {
    r.results["kernel_rank"] = nullptr;
    r.warnings.push_back(e.what());
  }
  r.results["hendriks_all"] = hendriks_known ? Json(all_hendriks) : Json(nullptr);
}

Json automorphism_json(const Presentation& p, const Automorphism& f) {
  Json out = Json::object();
  for (std::size_t g = 0; g < f.images.size(); ++g)
    out[p.label(static_cast<int>(g))] = p.word_to_string(f.images[g]);
  return out;
}

Json labels_json(const std::vector<MCGGenerator>& gens, const ConnectedSum& sum) {
  Json out = Json::array();
  for (const auto& g : gens) out.push_back(label(g, sum));
  return out;
}

void build_mcg(const BuildMCG& c, Report& r) {
  const ConnectedSum sum = load_manifold(c.path);
  const auto set = enumerate_generators(sum);
  const auto& k = set.counts;

  Json gens = Json::array();
  for (const auto& g : set.generators)
    gens.push_back({{"label", label(g, sum)}, {"kind", kind_name(g)}});
  r.results["generators"] = std::move(gens);
  r.results["counts"] = {{"internal", k.internals},
                         {"spin", k.spins},
                         {"exchange", k.exchanges},
                         {"slide_irreducible", k.slides_irreducible},
                         {"slide_handle_left", k.slides_left},
                         {"slide_handle_right", k.slides_right},
                         {"neck_twist", k.neck_twists},
                         {"handle_twist", k.handle_twists},
                         {"total", k.total()}};
  try {
    r.results["kernel_rank"] = kernel_rank(sum);
  } catch (const AssumptionViolated& e) {
    r.results["kernel_rank"] = nullptr;
    r.warnings.push_back(e.what());
  }
  r.results["extension"] = to_string(extension_type(sum));

  const auto dec = decompose_semidirect(sum);
  r.results["decomposition"] = {{"splits", dec.splits},
                                {"slide_subgroup", labels_json(dec.slide_subgroup_generators, sum)},
                                {"particle", labels_json(dec.particle_generators, sum)},
                                {"kernel", labels_json(dec.kernel_generators, sum)}};

  if (c.emit_presentation) {
    try {
      r.results["presentation"] = presentation_report(mcg_presentation(sum));
      if (is_rp3_sum(sum))
        r.results["three_generator_presentation"] =
            presentation_report(rp3_sum_three_generator_presentation());
    } catch (const UnsupportedSum& e) {
      r.results["presentation"] = nullptr;
      r.warnings.push_back(e.what());
    }
  }
  if (c.emit_automorphisms) {
    const auto pi1 = fundamental_group_sum(sum);
    Json autos = Json::object();
    for (const auto& g : set.generators)
      autos[label(g, sum)] = automorphism_json(pi1, induced_automorphism(sum, g, pi1));
    r.results["pi1"] = presentation_report(pi1);
    r.results["automorphisms"] = std::move(autos);
  }
}

Json derivation_json(const Presentation& p, const Derivation& d) {
  Json out = Json::array();
  for (const auto& s : d)
    out.push_back({{"position", s.position},
                   {"relator", s.relator},
                   {"shift", s.shift},
                   {"inverted", s.inverted},
                   {"inserted", p.word_to_string(s.inserted)},
                   {"result", p.word_to_string(s.result)}});
  return out;
}

void decide_word(const DecideWord& c, Report& r) {
  const Presentation p = load_presentation(c.source);
  const Word w = parse_word(c.word, p);
  r.results["presentation"] = p.to_string();
  r.results["word"] = p.word_to_string(w);
  const Verdict v = decide(p, w, c.budget, DecideOptions{c.parallel});
  std::visit(Overloaded{
                 [&](const TrivialVerdict& t) {
                   r.results["verdict"] = "Trivial";
                   r.results["derivation"] = derivation_json(p, t.derivation);
                 },
                 [&](const NontrivialVerdict& n) {
                   const auto& h = n.witness.homomorphism;
                   r.results["verdict"] = "Nontrivial";
                   r.results["witness"] = {{"degree", h.target.degree()},
                                           {"assignment", assignment_json(p, h.assignment)},
                                           {"image", permutation_json(n.witness.image)}};
                 },
                 [&](const ExhaustedVerdict& e) {
                   r.results["verdict"] = "Exhausted";
                   r.results["budget_used"] = {{"t1_depth", e.used.t1_depth_reached},
                                               {"t2_degree", e.used.t2_degree_reached},
                                               {"steps", e.used.steps}};
                   r.exit_status = kExhausted;
                 },
             },
             v);
}

void enumerate_homs(const EnumerateHoms& c, Report& r) {
  const Presentation p = load_presentation(c.source);
  std::size_t count = 0;
  Json listed = Json::array();
  for_each_homomorphism(p, c.degree, [&](std::span<const Permutation> images) {
    if (count < c.limit) listed.push_back(assignment_json(p, images));
    ++count;
    return false;
  });
  r.results["presentation"] = p.to_string();
  r.results["degree"] = c.degree;
  r.results["count"] = count;
  r.results["homomorphisms"] = std::move(listed);
  if (count > c.limit)
    r.warnings.push_back("listed the first " + std::to_string(c.limit) + " homomorphisms");
}

Json matrix_json(const Eigen::MatrixXcd& a) {
  Json re = Json::array(), im = Json::array();
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    Json rr = Json::array(), ii = Json::array();
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      rr.push_back(a(i, j).real());
      ii.push_back(a(i, j).imag());
    }
    re.push_back(std::move(rr));
    im.push_back(std::move(ii));
  }
  return {{"re", std::move(re)}, {"im", std::move(im)}};
}

Json rep_json(const std::string& name, const MatrixRep& rep, const Presentation& p,
              std::mt19937_64& rng) {
  Json matrices = Json::object();
  for (std::size_t g = 0; g < rep.generator_count(); ++g)
    matrices[p.label(static_cast<int>(g))] = matrix_json(rep.matrix(g));
  const auto lambda = central_element_scalar(rep, p);
  // Invariants after a random change of basis.
  const MatrixRep twin = rep.conjugated(random_unitary(rep.dimension(), rng));
  const auto trace = (rep.matrix(0) * rep.matrix(1)).trace();
  const auto twin_trace = (twin.matrix(0) * twin.matrix(1)).trace();
  const bool invariant = commutant_dimension(twin) == commutant_dimension(rep) &&
                         sector_analysis(twin, 0) == sector_analysis(rep, 0) &&
                         std::abs(trace - twin_trace) <= rep.tolerance();
  return {{"name", name},
          {"dimension", rep.dimension()},
          {"matrices", std::move(matrices)},
          {"verified", verify_relations(rep, p)},
          {"commutant_dimension", commutant_dimension(rep)},
          {"sector", to_string(sector_analysis(rep, 0))},
          {"central_scalar",
           lambda ? Json{{"re", lambda->real()}, {"im", lambda->imag()}} : Json(nullptr)},
          {"trace_omega_mu", trace.real()},
          {"basis_invariant", invariant}};
}

void classify_reps(const ClassifyReps& c, const GlobalOptions& o, Report& r) {
  if (c.target != "rp3-sum") throw BadParameters("unknown representation target '" + c.target + "'");
  if (c.samples == 0) throw BadParameters("--sample-tau needs at least one sample");
  const Presentation p = z2_star_z2_presentation();
  std::mt19937_64 rng(o.seed);
  Json entries = Json::array();
  for (const auto& entry : classify_uirs_z2star_z2()) {
    if (!entry.parameter_domain) {
      entries.push_back(rep_json(entry.name, entry.construct(0), p, rng));
      continue;
    }
    const auto [lo, hi] = *entry.parameter_domain;
    for (std::size_t k = 1; k <= c.samples; ++k) {
      const double tau = lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(c.samples + 1);
      Json j = rep_json(entry.name, rho_tau(tau, o.tolerance), p, rng);
      j["tau"] = tau;
      entries.push_back(std::move(j));
    }
  }
  r.results["entries"] = std::move(entries);
  Json boundary = Json::array();
  for (double tau : {0.0, std::numbers::pi}) {
    const MatrixRep rep = rho_tau(tau, o.tolerance);
    const auto parts = diagonal_constituents(rep);
    boundary.push_back({{"tau", tau},
                        {"commutant_dimension", commutant_dimension(rep)},
                        {"constituents", parts ? Json(*parts) : Json(nullptr)}});
  }
  r.results["boundary"] = std::move(boundary);
}

bool is_user_error(const Error& e) {
  return dynamic_cast<const CosetLimitExceeded*>(&e) == nullptr;
}

}  // namespace

Json Report::to_json() const {
  return {{"command", command},
          {"results", results},
          {"warnings", warnings},
          {"exit_status", exit_status}};
}

std::string Report::render(bool compact) const {
  return compact ? to_json().dump() : to_json().dump(2);
}

std::string command_name(const Command& cmd) {
  static constexpr const char* kNames[] = {"classify-lens", "analyze-manifold", "build-mcg",
                                           "decide-word",   "enumerate-homs",   "classify-reps"};
  return kNames[cmd.index()];
}

Json command_echo(const Command& cmd) {
  Json args = std::visit(
      Overloaded{
          [](const ClassifyLens& c) {
            Json j{{"p", c.p}, {"q", c.q}};
            if (c.q_prime) j["q_prime"] = *c.q_prime;
            return j;
          },
          [](const AnalyzeManifold& c) { return Json{{"path", c.path}}; },
          [](const BuildMCG& c) {
            return Json{{"path", c.path},
                        {"emit_automorphisms", c.emit_automorphisms},
                        {"emit_presentation", c.emit_presentation}};
          },
          [](const DecideWord& c) {
            return Json{{"source", c.source},
                        {"word", c.word},
                        {"max_t1_depth", c.budget.max_t1_depth},
                        {"max_t2_degree", c.budget.max_t2_degree},
                        {"max_steps", c.budget.max_steps},
                        {"parallel", c.parallel}};
          },
          [](const EnumerateHoms& c) {
            return Json{{"source", c.source}, {"degree", c.degree}, {"limit", c.limit}};
          },
          [](const ClassifyReps& c) { return Json{{"target", c.target}, {"samples", c.samples}}; },
      },
      cmd);
  return {{"name", command_name(cmd)}, {"args", std::move(args)}};
}

Presentation load_presentation(const std::string& source) {
  if (!source.empty() && source.front() == '<') return parse_presentation_text(source);
  const Json j = read_json_file(source);
  if (j.is_object() && j.contains("primes")) return fundamental_group_sum(manifold_from_json(j));
  if (j.is_object() && j.contains("presentation")) return presentation_from_json(j.at("presentation"));
  return presentation_from_json(j);
}

Report run(const Command& cmd, const GlobalOptions& options) {
  Report r;
  r.command = command_echo(cmd);
  try {
    if (!(options.tolerance >= 0)) throw BadParameters("tolerance must be non-negative");
    std::visit(Overloaded{
                   [&](const ClassifyLens& c) { classify_lens(c, r); },
                   [&](const AnalyzeManifold& c) { analyze_manifold(c, r); },
                   [&](const BuildMCG& c) { build_mcg(c, r); },
                   [&](const DecideWord& c) { decide_word(c, r); },
                   [&](const EnumerateHoms& c) { enumerate_homs(c, r); },
                   [&](const ClassifyReps& c) { classify_reps(c, options, r); },
               },
               cmd);
  } catch (const Error& e) {
    r.results = {{"error", e.what()}};
    r.exit_status = is_user_error(e) ? kUserError : kInternalError;
  } catch (const std::exception& e) {
    r.results = {{"error", std::string("internal error: ") + e.what()}};
    r.exit_status = kInternalError;
  }
  return r;
}

}  // namespace mcgkit::cli
