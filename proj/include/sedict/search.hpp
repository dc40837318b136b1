#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sedict/page.hpp"

namespace sedict {

struct AlphaEntry {
  std::string lemma;
  PartOfSpeech pos = PartOfSpeech::verb;
  std::string slug;
  std::string lexeme;

  bool operator==(const AlphaEntry&) const = default;
};

struct AlphaIndex {
  Language language = Language::ru;
  std::vector<AlphaEntry> entries;

  bool operator==(const AlphaIndex&) const = default;
};

enum class HitRubric { page, in_page_text, corpus_excerpt, co_positioned_pair, ted_catalog, link_catalog };
std::string_view to_string(HitRubric r);
std::optional<HitRubric> hit_rubric_from_string(std::string_view s);

// What a document contributes when matched; weights follow the scoring table below.
enum class DocKind { header, gloss, citation, other };

struct SearchWeights {
  int exact_lemma = 100;
  int header = 50;
  int gloss = 20;
  int citation = 10;
  int other = 5;
  int whole_word_bonus = 1;

  bool operator==(const SearchWeights&) const = default;
};

struct IndexDocument {
  HitRubric rubric = HitRubric::page;
  DocKind kind = DocKind::other;
  std::string slug;
  std::string text;
  std::string lemma;  // set when the document stands for one word

  bool operator==(const IndexDocument&) const = default;
};

struct Route {
  std::string lemma;  // folded
  Language language = Language::ru;
  std::string slug;
  int rank = 0;      // header rank of the page, lower first
  bool header = false;

  bool operator==(const Route&) const = default;
};

struct CombinedHit {
  HitRubric rubric = HitRubric::page;
  std::string slug;
  std::string snippet;
  int score = 0;

  bool operator==(const CombinedHit&) const = default;
};

struct SearchIndex {
  AlphaIndex ru{Language::ru, {}};
  AlphaIndex bg{Language::bg, {}};
  std::vector<IndexDocument> documents;
  std::vector<Route> routes;
  SearchWeights weights;

  const AlphaIndex& alpha(Language lang) const { return lang == Language::ru ? ru : bg; }
  bool operator==(const SearchIndex&) const = default;
};

SearchIndex build_indices(const std::vector<Page>& pages, const LexiconModel& model);

struct LookupResult {
  enum class Status { found, only_on_rows, not_found };
  Status status = Status::not_found;
  std::string slug;
  std::vector<std::string> suggestions;  // pages showing the lemma on a row
};

LookupResult lookup(const SearchIndex& index, std::string_view lemma, Language lang);

struct SearchPage {
  std::vector<CombinedHit> hits;
  std::size_t total = 0;
  std::size_t page = 1;
  std::size_t pages = 0;
};

// All hits in deterministic order (rubric, score descending, slug, snippet).
// Throws std::invalid_argument on an empty query.
std::vector<CombinedHit> combined_search_all(const SearchIndex& index, std::string_view query);
// One page of hits, 1-based. Throws std::invalid_argument on an empty query or hits_per_page == 0.
SearchPage combined_search(const SearchIndex& index, std::string_view query, std::size_t hits_per_page,
                           std::size_t page = 1);

std::string alpha_to_json(const AlphaIndex& index);
std::string combined_to_json(const SearchIndex& index);
std::string search_page_to_json(const SearchPage& page);
// Rebuilds a SearchIndex from the serialized alpha and combined files.
SearchIndex index_from_json(std::string_view alpha_ru, std::string_view alpha_bg, std::string_view combined);

}  // namespace sedict
