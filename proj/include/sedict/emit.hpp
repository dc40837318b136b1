#pragma once

#include <string>
#include <string_view>

#include "sedict/page.hpp"

namespace sedict {

// Self-contained HTML: gloss and pop-up payloads ship inline in a JSON script block.
std::string emit_html(const Page& page, const GlyphSet& glyphs = GlyphSet::defaults());

// Lossless XML serialization; parse_xml(emit_xml(p)) == p.
std::string emit_xml(const Page& page);
// Throws std::runtime_error on malformed documents.
Page parse_xml(std::string_view xml);

std::string page_to_json(const Page& page);
Page page_from_json(std::string_view json_text);

std::string html_escape(std::string_view s);

}  // namespace sedict
