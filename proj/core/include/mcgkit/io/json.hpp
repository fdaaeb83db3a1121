#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "mcgkit/finite/catalog.hpp"
#include "mcgkit/group/presentation.hpp"
#include "mcgkit/manifold/connected_sum.hpp"

namespace mcgkit {

using Json = nlohmann::json;

/// Parses "a b^-1 a^2" (tokens separated by blanks or '*'). A token that is
/// not a label is split into single characters when every label has one
/// character, so "abab^-1" also works. "1" and "" denote the empty word.
/// Throws ParseError on unknown labels or malformed exponents.
Word parse_word(const std::string& text, const Presentation& p);

/// Parses "<a,b | a^2, b^2>" (the bar and relators are optional).
Presentation parse_presentation_text(const std::string& text);

/// {"generators": ["a","b"], "relators": [["a","a"], ["b","b"]],
/// "factors": [["a"], ["b"]]}. Relators may also be strings such as "a^2";
/// inverse letters are written "a^-1"; the factors entry is optional. A
/// plain string is read with parse_presentation_text.
Presentation presentation_from_json(const Json& j);
Json presentation_to_json(const Presentation& p);

/// Manifold spec {"primes": [{"kind": "lens", "p": 15, "q": 4}, ...]}.
/// Throws ParseError (with line and column) for malformed JSON and
/// ValidationError naming the offending prime for invalid content.
ConnectedSum parse_manifold_spec(const std::string& text);
ConnectedSum manifold_from_json(const Json& j);
Json manifold_to_json(const ConnectedSum& sum);
Json prime_to_json(const Prime& prime);

/// Finite group catalog {"groups": [{"name": ..., "degree": n,
/// "generators": [...]} | {"name": ..., "presentation": {...}}]}. Each
/// generator is an image array [1,0,2] or a cycle list [[0,1]].
std::vector<NamedFiniteGroup> group_catalog_from_json(const Json& j);

/// Parses JSON text, turning syntax errors into ParseError with line/column.
Json parse_json_text(const std::string& text);
/// Reads and parses a file; throws ParseError if it cannot be read.
Json read_json_file(const std::string& path);

}  // namespace mcgkit
