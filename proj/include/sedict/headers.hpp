#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sedict/classifier.hpp"
#include "sedict/ideogram.hpp"

namespace sedict {

enum class MemberFormat { plain, parenthesized, bracketed };

std::string_view to_string(MemberFormat f);
std::optional<MemberFormat> member_format_from_string(std::string_view s);

struct HeaderMember {
  std::string lexeme;
  std::string sense;
  std::string lemma;
  Language language = Language::ru;
  MemberFormat format = MemberFormat::plain;

  bool operator==(const HeaderMember&) const = default;
};

// Members in display order. connectors[i] sits between members[i] and members[i + 1]; an empty
// connector is a plain space (a bracketed dublet in front of its partner). A diffuse header ends
// with its descriptive equivalent, a disjunctive header with the bare connector glyph.
struct PageHeader {
  std::vector<HeaderMember> members;
  std::vector<std::optional<SignType>> connectors;
  std::optional<DescriptiveEquivalent> descriptive;
  SignType kind = SignType::SynchronousHomogeneous;
  std::vector<std::string> signs;  // header signs shown in row 1
  std::string key;                 // the sign id, or "unique:<sense>" for disjunctive headers

  std::vector<std::string> root_senses() const;
  bool operator==(const PageHeader&) const = default;
};

// One header per distinct best sign of every lexeme that has a sense in the action scheme.
// Lexemes that get no header are reported as info diagnostics.
std::vector<PageHeader> select_headers(const LexiconModel& model, const SignGraph& graph,
                                       Diagnostics* log = nullptr);

std::string format_header(const PageHeader& header, const GlyphSet& glyphs = GlyphSet::defaults());
std::string header_slug(const PageHeader& header);

// Header-type priority used for routing: lower is better.
int header_rank(SignType t);

}  // namespace sedict
