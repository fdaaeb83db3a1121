#include "mcgkit/group/presentation.hpp"

#include <set>
#include <sstream>

#include "mcgkit/errors.hpp"

namespace mcgkit {

Presentation::Presentation(std::vector<std::string> labels, std::vector<Word> relators,
                           std::optional<std::vector<std::vector<int>>> factors)
    : labels_(std::move(labels)), relators_(std::move(relators)), factors_(std::move(factors)) {
  std::set<std::string> seen;
  for (const auto& l : labels_) {
    if (l.empty()) throw InvalidPresentation("empty generator label");
    if (!seen.insert(l).second) throw InvalidPresentation("duplicate generator label '" + l + "'");
  }
  const int n = static_cast<int>(labels_.size());
  for (const auto& r : relators_) {
    for (const auto& letter : r) {
      if (letter.gen < 0 || letter.gen >= n)
        throw InvalidPresentation("relator uses undeclared generator id " +
                                  std::to_string(letter.gen));
      if (letter.exp != 1 && letter.exp != -1)
        throw InvalidPresentation("letter exponent must be +1 or -1");
    }
  }
  if (!factors_) return;

  std::vector<int> owner(labels_.size(), -1);
  for (std::size_t f = 0; f < factors_->size(); ++f) {
    if ((*factors_)[f].empty()) throw InvalidPresentation("empty free-product factor");
    for (int g : (*factors_)[f]) {
      if (g < 0 || g >= n) throw InvalidPresentation("factor references undeclared generator");
      if (owner[g] != -1) throw InvalidPresentation("generator in two factors");
      owner[g] = static_cast<int>(f);
    }
  }
  for (int g = 0; g < n; ++g)
    if (owner[g] == -1) throw InvalidPresentation("generator '" + labels_[g] + "' in no factor");
  for (const auto& r : relators_) {
    if (r.empty()) continue;
    const int f = owner[r[0].gen];
    for (const auto& letter : r)
      if (owner[letter.gen] != f)
        throw InvalidPresentation("relator " + word_to_string(r) + " spans several factors");
  }
}

std::vector<GeneratorSymbol> Presentation::generators() const {
  std::vector<GeneratorSymbol> out;
  for (std::size_t i = 0; i < labels_.size(); ++i) out.push_back({static_cast<int>(i), labels_[i]});
  return out;
}

std::optional<int> Presentation::find(const std::string& label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return static_cast<int>(i);
  return std::nullopt;
}

const std::vector<std::vector<int>>& Presentation::factors() const {
  if (!factors_) throw UnsupportedPresentation("presentation has no factor structure");
  return *factors_;
}

std::size_t Presentation::factor_of(int gen) const {
  const auto& fs = factors();
  for (std::size_t f = 0; f < fs.size(); ++f)
    for (int g : fs[f])
      if (g == gen) return f;
  throw UnknownGenerator(std::to_string(gen));
}

std::vector<Word> Presentation::factor_relators(std::size_t f) const {
  std::vector<Word> out;
  const auto& block = factors().at(f);
  for (const auto& r : relators_) {
    if (r.empty()) continue;
    for (int g : block)
      if (r[0].gen == g) {
        out.push_back(r);
        break;
      }
  }
  return out;
}

Presentation Presentation::free_product(const std::vector<Presentation>& parts,
                                        std::optional<std::vector<std::string>> labels) {
  std::vector<std::string> all_labels;
  std::vector<Word> relators;
  std::vector<std::vector<int>> factors;
  int offset = 0;
  for (const auto& part : parts) {
    std::vector<int> block;
    for (std::size_t i = 0; i < part.generator_count(); ++i) {
      all_labels.push_back(part.labels_[i]);
      block.push_back(offset + static_cast<int>(i));
    }
    for (const auto& r : part.relators_) {
      Word shifted;
      for (const auto& l : r) shifted.push_back({l.gen + offset, l.exp});
      relators.push_back(std::move(shifted));
    }
    factors.push_back(std::move(block));
    offset += static_cast<int>(part.generator_count());
  }
  if (labels) {
    if (labels->size() != all_labels.size())
      throw InvalidPresentation("label count does not match generator count");
    all_labels = std::move(*labels);
  }
  return Presentation(std::move(all_labels), std::move(relators), std::move(factors));
}

std::string Presentation::word_to_string(const Word& w) const {
  if (w.empty()) return "1";
  std::ostringstream os;
  std::size_t i = 0;
  bool first = true;
  while (i < w.size()) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    const auto run = static_cast<long>(j - i) * w[i].exp;
    if (!first) os << ' ';
    first = false;
    os << label(w[i].gen);
    if (run != 1) os << '^' << run;
    i = j;
  }
  return os.str();
}

std::string Presentation::to_string() const {
  std::ostringstream os;
  os << '<';
  for (std::size_t i = 0; i < labels_.size(); ++i) os << (i ? "," : "") << labels_[i];
  os << " | ";
  for (std::size_t i = 0; i < relators_.size(); ++i)
    os << (i ? ", " : "") << word_to_string(relators_[i]);
  os << '>';
  return os.str();
}

}  // namespace mcgkit
