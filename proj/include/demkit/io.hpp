// Interchange formats (canonical JSON, Graphviz DOT) and the small parsers
// shared by the CLI and the tests.

#pragma once

#include <optional>
#include <string>

#include "demkit/demazure.hpp"
#include "demkit/tensor_analysis.hpp"

namespace demkit {

// canonical form: keys sorted, elements listed by index, edges by (i, from);
// byte-stable across runs
std::string to_canonical_json(const CrystalPtr& g);
CrystalPtr graph_from_json(const std::string& text);

// {"ambient": sha256 of the ambient's canonical JSON, "members": [...]}
std::string subset_to_json(const Subcrystal& s);
// ambient must hash to the stored digest
Subcrystal subset_from_json(const std::string& text, const CrystalPtr& ambient);

std::string sha256_hex(const std::string& bytes);

// digraph with color-labeled edges; subset members drawn filled
std::string to_dot(const CrystalPtr& g, const std::set<int>* members = nullptr);

Weight parse_weight(const std::string& text, int rank);  // "1,1"
// "s1*s2", "121", "id", "w0"
WeylElement parse_word(const CartanPtr& c, const std::string& text);
std::string word_str(const WeylElement& w);  // canonical reduced word or "id"
std::string word_str(const ReducedWord& word);

}  // namespace demkit
