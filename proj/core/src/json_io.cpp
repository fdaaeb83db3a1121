#include "mcgkit/io/json.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "mcgkit/errors.hpp"
#include "mcgkit/finite/coset_table.hpp"

namespace mcgkit {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

int parse_exponent(const std::string& text, const std::string& token) {
  int value = 0;
  const char* begin = text.data();
  const char* end = begin + text.size();
  if (begin != end && *begin == '+') ++begin;
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end || begin == end)
    throw ParseError("bad exponent in '" + token + "'");
  return value;
}

// "label" or "label^k".
bool parse_token(const std::string& token, const Presentation& p, Word& out) {
  const auto caret = token.find('^');
  const std::string name = token.substr(0, caret);
  const auto id = p.find(name);
  if (!id) return false;
  const int exp = caret == std::string::npos ? 1 : parse_exponent(token.substr(caret + 1), token);
  out.append(Word::power(*id, exp));
  return true;
}

bool single_char_labels(const Presentation& p) {
  return std::all_of(p.labels().begin(), p.labels().end(),
                     [](const auto& l) { return l.size() == 1; });
}

// "abab^-1" with one-character labels.
void parse_compact(const std::string& token, const Presentation& p, Word& out) {
  std::size_t i = 0;
  while (i < token.size()) {
    std::size_t j = i + 1;
    if (j < token.size() && token[j] == '^') {
      ++j;
      if (j < token.size() && (token[j] == '-' || token[j] == '+')) ++j;
      while (j < token.size() && std::isdigit(static_cast<unsigned char>(token[j]))) ++j;
    }
    if (!parse_token(token.substr(i, j - i), p, out))
      throw ParseError("unknown generator '" + token.substr(i, 1) + "' in '" + token + "'");
    i = j;
  }
}

std::pair<std::size_t, std::size_t> line_and_column(const std::string& text, std::size_t byte) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i < std::min(byte, text.size()); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

template <class T>
T field(const Json& j, const char* key) {
  if (!j.contains(key)) throw ValidationError(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const Json::exception&) {
    throw ValidationError(std::string("field '") + key + "' has the wrong type");
  }
}

template <class T>
T field_or(const Json& j, const char* key, T fallback) {
  return j.contains(key) ? field<T>(j, key) : fallback;
}

template <class T>
std::optional<T> optional_field(const Json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return field<T>(j, key);
}

// A word is either a string "a b^-1" or an array of letters ["a", "b^-1"].
Word word_from_json(const Json& j, const Presentation& p) {
  if (j.is_string()) return parse_word(j.get<std::string>(), p);
  if (!j.is_array()) throw ValidationError("a word must be a string or an array of letters");
  std::string text;
  for (const auto& letter : j) {
    if (!letter.is_string()) throw ValidationError("word letters must be strings");
    const auto token = letter.get<std::string>();
    if (token.empty() || token.find_first_of(" *") != std::string::npos)
      throw ParseError("bad letter '" + token + "'");
    Word w;
    if (!parse_token(token, p, w)) throw ParseError("unknown generator in '" + token + "'");
    text += token + ' ';
  }
  return parse_word(text, p);
}

std::vector<Word> words_from_json(const Json& j, const char* key, const Presentation& p) {
  if (!j.contains(key) || !j.at(key).is_array())
    throw ValidationError(std::string("field '") + key + "' must be an array");
  std::vector<Word> out;
  for (const auto& w : j.at(key)) out.push_back(word_from_json(w, p));
  return out;
}

Json words_to_json(const std::vector<Word>& words, const Presentation& p) {
  Json out = Json::array();
  for (const auto& w : words) out.push_back(p.word_to_string(w));
  return out;
}

// Letter-array form: one entry per letter, inverses written "g^-1".
Json letters_to_json(const Word& w, const Presentation& p) {
  Json out = Json::array();
  for (const auto& l : w) out.push_back(l.exp > 0 ? p.label(l.gen) : p.label(l.gen) + "^-1");
  return out;
}

GenericPrime generic_from_json(const Json& j) {
  GenericPrime g;
  g.name = field<std::string>(j, "name");
  if (!j.contains("pi1")) throw ValidationError("missing field 'pi1'");
  g.pi1 = presentation_from_json(j.at("pi1"));
  g.spinorial = field_or<bool>(j, "spinorial", true);
  if (j.contains("mcg") && !j.at("mcg").is_null()) g.mcg = presentation_from_json(j.at("mcg"));
  g.chiral = optional_field<bool>(j, "chiral");
  g.homotopy_implies_isotopy = optional_field<bool>(j, "homotopy_implies_isotopy");
  g.finite = optional_field<bool>(j, "finite");
  g.hendriks = optional_field<bool>(j, "hendriks");
  if (j.contains("internal_automorphisms")) {
    for (const auto& a : j.at("internal_automorphisms")) {
      LocalAutomorphism la;
      la.label = field<std::string>(a, "label");
      la.images = words_from_json(a, "images", g.pi1);
      la.inverse_images = words_from_json(a, "inverse_images", g.pi1);
      g.internal_automorphisms.push_back(std::move(la));
    }
  }
  return g;
}

Prime prime_from_json(const Json& j) {
  if (!j.is_object()) throw ValidationError("prime must be an object");
  const auto kind = field<std::string>(j, "kind");
  if (kind == "lens") return make_lens(field<long long>(j, "p"), field<long long>(j, "q"));
  if (kind == "handle") return Handle{};
  if (kind == "prism_spinor")
    return make_prism_spinor(field<int>(j, "m"), field_or<long long>(j, "p", 1));
  if (kind == "prism_prime_prime")
    return make_prism_prime_prime(field<int>(j, "k"), field<int>(j, "m"),
                                  field_or<long long>(j, "p", 1));
  if (kind == "flat") return make_flat_form(field<int>(j, "index"));
  if (kind == "generic") return generic_from_json(j);
  throw ValidationError("unknown prime kind '" + kind + "'");
}

std::vector<Permutation::Point> cycle_points(const Json& cycle) {
  return cycle.get<std::vector<Permutation::Point>>();
}

}  // namespace

Word parse_word(const std::string& text, const Presentation& p) {
  std::string normalized = text;
  std::replace(normalized.begin(), normalized.end(), '*', ' ');
  std::istringstream in(normalized);
  Word out;
  std::string token;
  while (in >> token) {
    if (token == "1" && !p.find("1")) continue;
    if (parse_token(token, p, out)) continue;
    if (single_char_labels(p)) {
      parse_compact(token, p, out);
      continue;
    }
    throw ParseError("unknown generator in '" + token + "'");
  }
  return free_reduce(out);
}

Presentation parse_presentation_text(const std::string& text) {
  std::string body = trim(text);
  if (body.size() < 2 || body.front() != '<' || body.back() != '>')
    throw ParseError("presentation must look like <a,b | r1, r2>");
  body = body.substr(1, body.size() - 2);
  const auto bar = body.find('|');
  const std::string gens = body.substr(0, bar);
  const std::string rels = bar == std::string::npos ? "" : body.substr(bar + 1);

  std::vector<std::string> labels;
  if (!trim(gens).empty())
    for (auto& l : split(gens, ',')) {
      if (l.empty() || l.find_first_of(" ^*") != std::string::npos)
        throw ParseError("bad generator label '" + l + "'");
      labels.push_back(l);
    }
  std::vector<Word> relators;
  try {
    const Presentation scratch(labels, {});
    if (!trim(rels).empty())
      for (const auto& r : split(rels, ',')) {
        if (r.empty()) throw ParseError("empty relator");
        relators.push_back(parse_word(r, scratch));
      }
    return Presentation(std::move(labels), std::move(relators));
  } catch (const InvalidPresentation& e) {
    throw ParseError(e.what());
  }
}

Presentation presentation_from_json(const Json& j) {
  if (j.is_string()) return parse_presentation_text(j.get<std::string>());
  if (!j.is_object()) throw ValidationError("presentation must be an object or a string");
  auto labels = field<std::vector<std::string>>(j, "generators");
  try {
    const Presentation scratch(labels, {});
    std::vector<Word> relators;
    if (j.contains("relators")) relators = words_from_json(j, "relators", scratch);
    std::optional<std::vector<std::vector<int>>> factors;
    if (j.contains("factors")) {
      factors.emplace();
      for (const auto& block : field<std::vector<std::vector<std::string>>>(j, "factors")) {
        std::vector<int> ids;
        for (const auto& l : block) {
          const auto id = scratch.find(l);
          if (!id) throw ValidationError("factor names unknown generator '" + l + "'");
          ids.push_back(*id);
        }
        factors->push_back(std::move(ids));
      }
    }
    return Presentation(std::move(labels), std::move(relators), std::move(factors));
  } catch (const InvalidPresentation& e) {
    throw ValidationError(e.what());
  }
}

Json presentation_to_json(const Presentation& p) {
  Json relators = Json::array();
  for (const auto& r : p.relators()) relators.push_back(letters_to_json(r, p));
  Json out{{"generators", p.labels()}, {"relators", std::move(relators)}};
  if (p.has_factor_structure()) {
    Json factors = Json::array();
    for (const auto& block : p.factors()) {
      Json names = Json::array();
      for (int g : block) names.push_back(p.label(g));
      factors.push_back(std::move(names));
    }
    out["factors"] = std::move(factors);
  }
  return out;
}

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    const auto [line, column] = line_and_column(text, e.byte == 0 ? 0 : e.byte - 1);
    throw ParseError("line " + std::to_string(line) + ", column " + std::to_string(column) +
                     ": " + e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_json_text(buffer.str());
}

ConnectedSum parse_manifold_spec(const std::string& text) {
  return manifold_from_json(parse_json_text(text));
}

ConnectedSum manifold_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("primes") || !j.at("primes").is_array())
    throw ValidationError("manifold spec needs a 'primes' array");
  std::vector<Prime> primes;
  std::size_t index = 0;
  for (const auto& entry : j.at("primes")) {
    ++index;
    const std::string kind =
        entry.is_object() && entry.contains("kind") && entry.at("kind").is_string()
            ? entry.at("kind").get<std::string>()
            : "?";
    try {
      Prime prime = prime_from_json(entry);
      validate(prime);
      primes.push_back(std::move(prime));
    } catch (const Error& e) {
      throw ValidationError("prime " + std::to_string(index) + " (" + kind + "): " + e.what());
    }
  }
  if (primes.empty()) throw ValidationError("empty connected sum");
  return ConnectedSum(std::move(primes));
}

Json prime_to_json(const Prime& prime) {
  return std::visit(
      Overloaded{
          [](const LensSpace& l) { return Json{{"kind", "lens"}, {"p", l.p}, {"q", l.q}}; },
          [](const Handle&) { return Json{{"kind", "handle"}}; },
          [](const PrismSpinor& s) { return Json{{"kind", "prism_spinor"}, {"m", s.m}, {"p", s.p}}; },
          [](const PrismPrimePrime& s) {
            return Json{{"kind", "prism_prime_prime"}, {"k", s.k}, {"m", s.m}, {"p", s.p}};
          },
          [](const FlatForm& f) { return Json{{"kind", "flat"}, {"index", f.index}}; },
          [](const GenericPrime& g) {
            Json out{{"kind", "generic"},
                     {"name", g.name},
                     {"pi1", presentation_to_json(g.pi1)},
                     {"spinorial", g.spinorial}};
            if (g.mcg) out["mcg"] = presentation_to_json(*g.mcg);
            if (g.chiral) out["chiral"] = *g.chiral;
            if (g.homotopy_implies_isotopy) out["homotopy_implies_isotopy"] = *g.homotopy_implies_isotopy;
            if (g.finite) out["finite"] = *g.finite;
            if (g.hendriks) out["hendriks"] = *g.hendriks;
            if (!g.internal_automorphisms.empty()) {
              Json autos = Json::array();
              for (const auto& a : g.internal_automorphisms)
                autos.push_back({{"label", a.label},
                                 {"images", words_to_json(a.images, g.pi1)},
                                 {"inverse_images", words_to_json(a.inverse_images, g.pi1)}});
              out["internal_automorphisms"] = std::move(autos);
            }
            return out;
          },
      },
      prime);
}

Json manifold_to_json(const ConnectedSum& sum) {
  Json primes = Json::array();
  for (const auto& p : sum.primes()) primes.push_back(prime_to_json(p));
  return Json{{"primes", std::move(primes)}};
}

std::vector<NamedFiniteGroup> group_catalog_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("groups")) throw ValidationError("catalog needs 'groups'");
  std::vector<NamedFiniteGroup> out;
  for (const auto& g : j.at("groups")) {
    const auto name = field<std::string>(g, "name");
    try {
      if (g.contains("presentation")) {
        const FiniteGroupModel model(presentation_from_json(g.at("presentation")));
        out.push_back({name, model.regular_representation()});
        continue;
      }
      const auto degree = field<std::size_t>(g, "degree");
      std::vector<Permutation> gens;
      for (const auto& perm : field<Json>(g, "generators")) {
        if (!perm.empty() && perm.front().is_number()) {
          gens.emplace_back(perm.get<std::vector<Permutation::Point>>());
          continue;
        }
        std::vector<std::vector<Permutation::Point>> cycles;
        for (const auto& c : perm) cycles.push_back(cycle_points(c));
        gens.push_back(Permutation::from_cycles(degree, cycles));
      }
      out.push_back({name, PermutationGroup(degree, std::move(gens))});
    } catch (const ValidationError&) {
      throw;
    } catch (const Error& e) {
      throw ValidationError("group '" + name + "': " + e.what());
    } catch (const Json::exception& e) {
      throw ValidationError("group '" + name + "': " + e.what());
    }
  }
  return out;
}

}  // namespace mcgkit
