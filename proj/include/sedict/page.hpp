#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sedict/chains.hpp"
#include "sedict/headers.hpp"

namespace sedict {

inline constexpr std::size_t kPaletteSize = 12;

// A rubric anchor on row 1 (or beside a row-5 warning): a corpus excerpt list, an external link,
// or inline payload lines (idioms, synonyms).
struct RubricLink {
  std::string rubric;  // НКРЯ, БНК, АСС, МОРФ, ФР, СИН, ПЗ
  Language side = Language::ru;
  std::string lexeme;
  std::string target;  // URL, possibly empty
  std::vector<std::string> items;

  bool operator==(const RubricLink&) const = default;
};

struct PageSign {
  std::string id;
  SignType type = SignType::SynchronousHomogeneous;
  Direction direction = Direction::none;
  int level = 0;
  std::string ru_sense;  // empty when the Russian side is descriptive
  std::string bg_sense;
  std::string ru_text;
  std::string bg_text;
  std::optional<std::string> ted_ru;
  std::optional<std::string> ted_bg;
  std::optional<ResultIndex> ir;
  std::string color;  // "c0".."c11"; empty for warning signs
  std::vector<RubricLink> links;

  bool operator==(const PageSign&) const = default;
};

struct GlossPayload {
  std::string sense;
  std::string lemma;
  Language language = Language::ru;
  std::string gloss_ru;
  std::string gloss_bg;
  std::string color;

  bool operator==(const GlossPayload&) const = default;
};

// Non-gloss pop-up content: corpus excerpts, rubric links, TED and IR notes.
struct Popup {
  std::string id;
  std::string kind;  // corpus, rubric, ted, ir
  std::string anchor;
  std::string title;
  std::vector<std::string> lines;
  std::string url;

  bool operator==(const Popup&) const = default;
};

struct LegendEntry {
  std::string key;
  std::string glyph;
  std::string label;

  bool operator==(const LegendEntry&) const = default;
};

enum class RowKind { nodal = 1, copositioned = 2, synchronous = 3, diffuse = 4, warnings = 5 };

struct Page {
  std::string slug;
  std::string title;  // formatted header
  PageHeader header;
  std::array<std::vector<PageSign>, 5> rows;
  std::vector<RubricLink> rubric_links;  // row 1
  std::optional<std::string> ted;        // row 1
  std::optional<ResultIndex> ir;         // row 1
  std::vector<GlossPayload> payloads;
  std::vector<Popup> popups;
  std::map<std::string, std::string> colors;  // sign id -> color index
  std::vector<ImplicativeChain> chains;
  std::vector<LegendEntry> reference_base;

  const std::vector<PageSign>& row(int n) const { return rows.at(static_cast<std::size_t>(n - 1)); }
  std::size_t popup_count() const { return payloads.size() + popups.size(); }
  bool operator==(const Page&) const = default;
};

struct PageConfig {
  int max_chain_depth = 4;
  GlyphSet glyphs = GlyphSet::defaults();
};

struct CompileResult {
  std::optional<Page> page;
  Diagnostics diagnostics;
};

CompileResult compile_page(const PageHeader& header, const SignGraph& graph, const LexiconModel& model,
                           const PageConfig& cfg = {});

// Colors each non-warning sign in row order; reuses the palette round-robin past 12 groups.
Diagnostics assign_colors(Page& page);

// Sense ids shown anywhere on the page (header members and both sides of every row sign).
std::vector<std::string> displayed_senses(const Page& page);
// Distinct words shown on the page, descriptive equivalents included.
std::size_t displayed_word_count(const Page& page);
// Displayed senses without an embedded gloss payload.
std::vector<std::string> missing_payloads(const Page& page);

std::vector<LegendEntry> reference_base(const GlyphSet& glyphs);
std::string legend_to_json(const std::vector<LegendEntry>& legend);

}  // namespace sedict
