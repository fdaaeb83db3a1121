#include <iostream>

#include <CLI11.hpp>

#include "cli.hpp"

using namespace mcgkit::cli;

int main(int argc, char** argv) {
  CLI::App app{"Mapping class groups of connected sums of prime 3-manifolds"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions options;
  app.add_flag("--json", options.compact, "Compact single-line JSON output");
  app.add_option("--tolerance", options.tolerance, "Floating-point comparison tolerance")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--seed", options.seed, "Seed for randomized checks");

  Command command;

  ClassifyLens lens;
  auto* lens_cmd = app.add_subcommand("classify-lens", "Lens space classification");
  lens_cmd->add_option("p", lens.p)->required();
  lens_cmd->add_option("q", lens.q)->required();
  lens_cmd->add_option("q_prime", lens.q_prime);
  lens_cmd->callback([&] { command = lens; });

  AnalyzeManifold analyze;
  auto* analyze_cmd = app.add_subcommand("analyze-manifold", "Analyze a connected sum");
  analyze_cmd->add_option("file", analyze.path, "Manifold spec JSON")->required();
  analyze_cmd->callback([&] { command = analyze; });

  BuildMCG mcg;
  auto* mcg_cmd = app.add_subcommand("build-mcg", "Mapping class group generators");
  mcg_cmd->add_option("file", mcg.path, "Manifold spec JSON")->required();
  mcg_cmd->add_flag("--emit-automorphisms", mcg.emit_automorphisms);
  mcg_cmd->add_flag("--emit-presentation", mcg.emit_presentation);
  mcg_cmd->callback([&] { command = mcg; });

  DecideWord word;
  auto* word_cmd = app.add_subcommand("decide-word", "Decide whether a word is trivial");
  word_cmd->add_option("source,--presentation", word.source, "Presentation JSON, manifold spec, or <gens | rels>")
      ->required();
  word_cmd->add_option("word,--word", word.word, "Word such as \"a b a^-1\"")->required();
  word_cmd->add_option("--depth", word.budget.max_t1_depth, "Relator insertion depth");
  word_cmd->add_option("--degree", word.budget.max_t2_degree, "Largest S_n searched");
  word_cmd->add_option("--steps", word.budget.max_steps, "Step budget");
  word_cmd->add_flag("--parallel", word.parallel, "Run both searches concurrently");
  word_cmd->callback([&] { command = word; });

  EnumerateHoms homs;
  auto* homs_cmd = app.add_subcommand("enumerate-homs", "Homomorphisms into S_n");
  homs_cmd->add_option("source,--presentation", homs.source, "Presentation JSON, manifold spec, or <gens | rels>")
      ->required();
  homs_cmd->add_option("--degree", homs.degree, "n")->required();
  homs_cmd->add_option("--limit", homs.limit, "How many homomorphisms to list");
  homs_cmd->callback([&] { command = homs; });

  ClassifyReps reps;
  auto* reps_cmd = app.add_subcommand("classify-reps", "Unitary irreducible representations");
  reps_cmd->add_option("--group", reps.target, "Target group")->required();
  reps_cmd->add_option("--sample-tau", reps.samples, "Samples of the continuous family");
  reps_cmd->callback([&] { command = reps; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUserError;
  }

  const Report report = run(command, options);
  std::cout << report.render(options.compact) << '\n';
  return report.exit_status;
}
