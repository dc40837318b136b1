#include <map>
#include <sstream>

#include "json.hpp"
#include "sedict/emit.hpp"

namespace sedict {

std::string html_escape(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&#39;"; break;
      default: out += c;
    }
  }
  return out;
}

namespace {

class PageWriter {
 public:
  PageWriter(const Page& page, const GlyphSet& glyphs) : page_(page), glyphs_(glyphs) {
    for (const auto& p : page.popups) popup_by_anchor_.emplace(p.kind + "|" + p.anchor, p.id);
    for (const auto& p : page.payloads) color_of_.emplace(p.sense, p.color);
  }

  std::string render() {
    out_ << "<!DOCTYPE html>\n<html lang=\"ru\">\n<head>\n<meta charset=\"utf-8\">\n";
    out_ << "<meta name=\"viewport\" content=\"width=device-width, initial-scale=1\">\n";
    out_ << "<title>" << html_escape(page_.title) << "</title>\n";
    out_ << "<link rel=\"stylesheet\" href=\"../assets/sedict.css\">\n</head>\n<body>\n";
    out_ << "<article class=\"sed-page\" data-slug=\"" << html_escape(page_.slug) << "\">\n";
    header();
    row1();
    divider(Ideogram::polarization_start);
    row(2, "sed-copositioned");
    row(3, "sed-synchronous");
    divider(Ideogram::polarization_step);
    row(4, "sed-diffuse");
    row(5, "sed-warnings");
    out_ << "<hr class=\"sed-rule\">\n";
    legend();
    out_ << "</article>\n";
    payloads();
    out_ << "</body>\n</html>\n";
    return out_.str();
  }

 private:
  std::string word(const std::string& sense, const std::string& text, std::string_view extra_class = "") {
    std::ostringstream w;
    w << "<span class=\"sed-word" << extra_class << "\"";
    if (!sense.empty()) {
      auto it = color_of_.find(sense);
      w << " data-sense=\"" << html_escape(sense) << "\" data-popup=\"gloss:" << html_escape(sense) << "\"";
      if (it != color_of_.end() && !it->second.empty()) w << " data-color=\"" << it->second << "\"";
    }
    w << ">" << html_escape(text) << "</span>";
    return w.str();
  }

  std::string ideogram(Ideogram i) {
    return "<span class=\"sed-ideogram\" data-ideogram=\"" + std::string(to_string(i)) + "\">" +
           html_escape(glyphs_.of(i)) + "</span>";
  }

  std::string popup_anchor(const std::string& kind, const std::string& anchor, const std::string& label) {
    auto it = popup_by_anchor_.find(kind + "|" + anchor);
    if (it == popup_by_anchor_.end()) return "";
    return "<span class=\"sed-" + kind + "\" data-popup=\"" + it->second + "\">" + html_escape(label) + "</span>";
  }

  void header() {
    out_ << "<header class=\"sed-header\">\n<h1>";
    const PageHeader& h = page_.header;
    for (std::size_t i = 0; i < h.members.size(); ++i) {
      if (i > 0) {
        const auto& c = i - 1 < h.connectors.size() ? h.connectors[i - 1] : std::nullopt;
        out_ << (c ? " " + ideogram(ideogram_for(*c)) + " " : " ");
      }
      const auto& m = h.members[i];
      std::string text = text::to_upper(m.lemma);
      if (m.format == MemberFormat::parenthesized) text = "(" + text + ")";
      if (m.format == MemberFormat::bracketed) text = "[" + text + "]";
      out_ << word(m.sense, text, " sed-member");
    }
    if (h.kind == SignType::Diffuse && h.descriptive)
      out_ << " " << ideogram(Ideogram::filled_circle) << " <span class=\"sed-descriptive\">"
           << html_escape(text::capitalize(h.descriptive->text)) << "</span>";
    if (h.kind == SignType::Disjunctive) out_ << " " << ideogram(Ideogram::disjunctive_mark);
    out_ << "</h1>\n</header>\n";
  }

  std::string rubric_anchor(const RubricLink& l, const std::string& kind, const std::string& anchor) {
    std::string a = "<a class=\"sed-rubric\" data-rubric=\"" + html_escape(l.rubric) + "\"";
    if (!l.target.empty()) a += " href=\"" + html_escape(l.target) + "\"";
    auto it = popup_by_anchor_.find(kind + "|" + anchor);
    if (it != popup_by_anchor_.end()) a += " data-popup=\"" + it->second + "\"";
    return a + ">" + html_escape(l.rubric) + "</a>";
  }

  void links(const std::vector<RubricLink>& ls, Language side) {
    for (const auto& l : ls) {
      if (l.side != side) continue;
      std::string kind = l.rubric == "НКРЯ" || l.rubric == "БНК" ? "corpus" : "rubric";
      out_ << rubric_anchor(l, kind, l.lexeme + ":" + l.rubric) << "\n";
    }
  }

  void sign(const PageSign& s) {
    out_ << "<div class=\"sed-sign\" data-sign=\"" << html_escape(s.id) << "\" data-sign-type=\""
         << to_string(s.type) << "\" data-level=\"" << s.level << "\" data-direction=\"" << to_string(s.direction)
         << "\"";
    if (!s.color.empty()) out_ << " data-color=\"" << s.color << "\"";
    out_ << ">";
    if (s.ted_ru) out_ << popup_anchor("ted", s.id + ":ru", "ТЭД") << " ";
    out_ << (s.ru_sense.empty() ? "<span class=\"sed-descriptive\">" + html_escape(s.ru_text) + "</span>"
                                : word(s.ru_sense, s.ru_text));
    out_ << " " << ideogram(ideogram_for(s.type));
    if (s.direction != Direction::none)
      out_ << "<span class=\"sed-direction\" data-ideogram=\"direction_arrow\" data-from=\""
           << (s.direction == Direction::left_to_right ? "ru" : "bg") << "\">" << html_escape(glyphs_.of(Ideogram::direction_arrow))
           << "</span>";
    out_ << " "
         << (s.bg_sense.empty() ? "<span class=\"sed-descriptive\">" + html_escape(s.bg_text) + "</span>"
                                : word(s.bg_sense, s.bg_text));
    if (s.ted_bg) out_ << " " << popup_anchor("ted", s.id + ":bg", "ТЭД");
    if (s.ir) out_ << " " << popup_anchor("ir", s.id, "ИР");
    for (const auto& l : s.links) out_ << " " << rubric_anchor(l, "rubric", s.id + ":" + l.lexeme + ":" + l.rubric);
    out_ << "</div>\n";
  }

  void row1() {
    out_ << "<section class=\"sed-row sed-nodal\" data-row=\"1\">\n<div class=\"sed-rubrics\" data-side=\"ru\">\n";
    links(page_.rubric_links, Language::ru);
    out_ << "</div>\n<div class=\"sed-node\">\n";
    for (const auto& s : page_.row(1)) sign(s);
    if (page_.row(1).empty())
      for (const auto& m : page_.header.members) out_ << word(m.sense, m.lemma) << "\n";
    out_ << "</div>\n<div class=\"sed-rubrics\" data-side=\"bg\">\n";
    links(page_.rubric_links, Language::bg);
    out_ << "</div>\n";
    if (page_.ir) out_ << popup_anchor("ir", page_.slug, "ИР") << "\n";
    if (page_.ted) out_ << popup_anchor("ted", page_.slug, "ТЭД") << "\n";
    out_ << "</section>\n";
  }

  void row(int n, const char* cls) {
    out_ << "<section class=\"sed-row " << cls << "\" data-row=\"" << n << "\">\n";
    for (const auto& s : page_.row(n)) sign(s);
    out_ << "</section>\n";
  }

  void divider(Ideogram i) {
    out_ << "<div class=\"sed-divider\" data-ideogram=\"" << to_string(i) << "\">" << html_escape(glyphs_.of(i))
         << "</div>\n";
  }

  void legend() {
    out_ << "<section class=\"sed-reference-base\">\n<table>\n";
    for (const auto& e : page_.reference_base)
      out_ << "<tr data-legend=\"" << html_escape(e.key) << "\"><td>" << html_escape(e.glyph) << "</td><td>"
           << html_escape(e.label) << "</td></tr>\n";
    out_ << "</table>\n</section>\n";
  }

  void payloads() {
    nlohmann::json js;
    js["glosses"] = nlohmann::json::object();
    for (const auto& p : page_.payloads)
      js["glosses"][p.sense] = {{"lemma", p.lemma},
                                {"language", to_string(p.language)},
                                {"gloss_ru", p.gloss_ru},
                                {"gloss_bg", p.gloss_bg},
                                {"color", p.color}};
    js["popups"] = nlohmann::json::object();
    for (const auto& p : page_.popups)
      js["popups"][p.id] = {{"kind", p.kind}, {"anchor", p.anchor}, {"title", p.title}, {"lines", p.lines},
                            {"url", p.url}};
    std::string text = js.dump();
    std::string safe;
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (text[i] == '<' && i + 1 < text.size() && text[i + 1] == '/') {
        safe += "<\\/";
        ++i;
      } else {
        safe += text[i];
      }
    }
    out_ << "<script type=\"application/json\" id=\"sed-payloads\">" << safe << "</script>\n";
  }

  const Page& page_;
  const GlyphSet& glyphs_;
  std::map<std::string, std::string> popup_by_anchor_;
  std::map<std::string, std::string> color_of_;
  std::ostringstream out_;
};

}  // namespace

std::string emit_html(const Page& page, const GlyphSet& glyphs) { return PageWriter(page, glyphs).render(); }

}  // namespace sedict
