#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "mcgkit/decider/word_decider.hpp"
#include "mcgkit/io/json.hpp"

namespace mcgkit::cli {

enum ExitStatus : int { kOk = 0, kInternalError = 1, kUserError = 2, kExhausted = 3 };

struct ClassifyLens {
  long long p = 1;
  long long q = 0;
  std::optional<long long> q_prime;
};

struct AnalyzeManifold {
  std::string path;
};

struct BuildMCG {
  std::string path;
  bool emit_automorphisms = false;
  bool emit_presentation = false;
};

/// `source` is a JSON file (a presentation or a manifold spec, whose pi_1 is
/// used) or inline text such as "<a,b | a^2, b^2>".
struct DecideWord {
  std::string source;
  std::string word;
  Budget budget;
  bool parallel = false;
};

struct EnumerateHoms {
  std::string source;
  std::size_t degree = 2;
  std::size_t limit = 64;
};

struct ClassifyReps {
  std::string target = "rp3-sum";
  std::size_t samples = 8;
};

using Command =
    std::variant<ClassifyLens, AnalyzeManifold, BuildMCG, DecideWord, EnumerateHoms, ClassifyReps>;

struct GlobalOptions {
  bool compact = false;
  double tolerance = 1e-9;
  std::uint64_t seed = 1;
};

struct Report {
  Json command;
  Json results = Json::object();
  std::vector<std::string> warnings;
  int exit_status = kOk;

  Json to_json() const;
  /// Pretty-printed unless `compact`.
  std::string render(bool compact) const;
};

std::string command_name(const Command& cmd);
Json command_echo(const Command& cmd);

/// Never throws for bad input: library errors become an "error" result with
/// exit status kUserError, anything else kInternalError.
Report run(const Command& cmd, const GlobalOptions& options = {});

/// Presentation named by a DecideWord/EnumerateHoms source.
Presentation load_presentation(const std::string& source);

}  // namespace mcgkit::cli
