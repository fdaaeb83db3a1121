#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mcgkit/group/word.hpp"

namespace mcgkit {

struct GeneratorSymbol {
  int id = 0;
  std::string label;
};

/// A finitely presented group <generators | relators>.
///
/// Generator ids are contiguous from 0 and index `labels()`. An optional
/// factor structure records that the group is the free product of the
/// subgroups generated by each block of generators; every relator must then
/// live inside one block.
class Presentation {
 public:
  Presentation() = default;
  /// Throws InvalidPresentation when a relator references an undeclared
  /// generator, labels repeat, or the factor structure is malformed.
  Presentation(std::vector<std::string> labels, std::vector<Word> relators,
               std::optional<std::vector<std::vector<int>>> factors = std::nullopt);

  std::size_t generator_count() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int gen) const { return labels_.at(gen); }
  std::vector<GeneratorSymbol> generators() const;
  /// Generator id for `label`, or nullopt.
  std::optional<int> find(const std::string& label) const;

  const std::vector<Word>& relators() const { return relators_; }

  bool has_factor_structure() const { return factors_.has_value(); }
  const std::vector<std::vector<int>>& factors() const;
  /// Index of the factor containing `gen`.
  std::size_t factor_of(int gen) const;
  /// Relators lying in factor `f`.
  std::vector<Word> factor_relators(std::size_t f) const;

  /// Free product of the given presentations. Generator labels are taken
  /// from `labels` when provided, otherwise from the inputs.
  static Presentation free_product(const std::vector<Presentation>& parts,
                                   std::optional<std::vector<std::string>> labels = std::nullopt);

  /// Human-readable "<a,b | a^2, b^2>".
  std::string to_string() const;
  std::string word_to_string(const Word& w) const;

  friend bool operator==(const Presentation&, const Presentation&) = default;

 private:
  std::vector<std::string> labels_;
  std::vector<Word> relators_;
  std::optional<std::vector<std::vector<int>>> factors_;
};

}  // namespace mcgkit
