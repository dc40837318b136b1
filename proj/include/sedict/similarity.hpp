#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "sedict/lexicon.hpp"

namespace sedict {

// Orthographic correspondences applied before comparing a Russian and a Bulgarian lemma.
struct OrthographyTable {
  std::map<std::string, std::string> fold;                    // single letters, both languages
  std::map<std::string, std::vector<std::string>> bg_variants;  // letter -> Russian-side readings
  std::vector<std::string> ru_verb_endings;                   // longest first
  std::vector<std::string> ru_reflexive;
  std::vector<std::string> bg_verb_endings;
  std::vector<std::string> bg_reflexive;
  std::size_t max_variants = 64;

  bool operator==(const OrthographyTable&) const = default;
};

OrthographyTable default_orthography();
// Parses the orthography.json format; throws std::invalid_argument on malformed input.
OrthographyTable parse_orthography(std::string_view json_text);
std::string orthography_to_json(const OrthographyTable& table);

std::size_t levenshtein(std::u32string_view a, std::u32string_view b);
// Levenshtein distance divided by the longer length; 0 for two empty strings.
double normalized_distance(std::u32string_view a, std::u32string_view b);

// Minimum normalized distance over the Bulgarian spelling variants, after folding
// and (for two verbs) stripping infinitive and present-tense endings.
double form_distance(const Lexeme& a, const Lexeme& b, const OrthographyTable& table);

inline constexpr double kSimilarityEpsilon = 1e-9;

bool form_similar(const Lexeme& a, const Lexeme& b, const OrthographyTable& table, double threshold);

}  // namespace sedict
