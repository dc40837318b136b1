#include <stdexcept>

#include "json.hpp"
#include "sedict/emit.hpp"

namespace sedict {

using nlohmann::json;

namespace {

template <typename T, typename F>
T enum_from(const json& j, F from) {
  auto v = from(j.get<std::string>());
  if (!v) throw std::runtime_error("page json: bad enum value " + j.get<std::string>());
  return *v;
}

json ir_json(const std::optional<ResultIndex>& ir) {
  return ir ? json{{"ru", ir->ru_label}, {"bg", ir->bg_label}} : json(nullptr);
}

std::optional<ResultIndex> ir_from(const json& j) {
  if (j.is_null()) return std::nullopt;
  return ResultIndex{j.at("ru").get<std::string>(), j.at("bg").get<std::string>()};
}

json opt_json(const std::optional<std::string>& s) { return s ? json(*s) : json(nullptr); }

std::optional<std::string> opt_from(const json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<std::string>();
}

json link_json(const RubricLink& l) {
  return {{"rubric", l.rubric}, {"side", to_string(l.side)}, {"lexeme", l.lexeme}, {"target", l.target},
          {"items", l.items}};
}

RubricLink link_from(const json& j) {
  return {j.at("rubric").get<std::string>(), language_from_string(j.at("side").get<std::string>()),
          j.at("lexeme").get<std::string>(), j.at("target").get<std::string>(),
          j.at("items").get<std::vector<std::string>>()};
}

}  // namespace

std::string page_to_json(const Page& page) {
  json js;
  js["slug"] = page.slug;
  js["title"] = page.title;

  const PageHeader& h = page.header;
  json header;
  header["kind"] = to_string(h.kind);
  header["key"] = h.key;
  header["members"] = json::array();
  for (const auto& m : h.members)
    header["members"].push_back({{"lexeme", m.lexeme},
                                 {"sense", m.sense},
                                 {"lemma", m.lemma},
                                 {"language", to_string(m.language)},
                                 {"format", to_string(m.format)}});
  header["connectors"] = json::array();
  for (const auto& c : h.connectors) header["connectors"].push_back(c ? json(to_string(*c)) : json(nullptr));
  header["descriptive"] = h.descriptive ? json{{"language", to_string(h.descriptive->language)},
                                               {"text", h.descriptive->text},
                                               {"is_definition_like", h.descriptive->is_definition_like}}
                                        : json(nullptr);
  header["signs"] = h.signs;
  js["header"] = header;

  js["rows"] = json::array();
  for (const auto& row : page.rows) {
    json r = json::array();
    for (const auto& s : row) {
      json sj{{"id", s.id},
              {"type", to_string(s.type)},
              {"direction", to_string(s.direction)},
              {"level", s.level},
              {"ru_sense", s.ru_sense},
              {"bg_sense", s.bg_sense},
              {"ru_text", s.ru_text},
              {"bg_text", s.bg_text},
              {"ted_ru", opt_json(s.ted_ru)},
              {"ted_bg", opt_json(s.ted_bg)},
              {"ir", ir_json(s.ir)},
              {"color", s.color},
              {"links", json::array()}};
      for (const auto& l : s.links) sj["links"].push_back(link_json(l));
      r.push_back(sj);
    }
    js["rows"].push_back(r);
  }
  js["rubric_links"] = json::array();
  for (const auto& l : page.rubric_links) js["rubric_links"].push_back(link_json(l));
  js["ted"] = opt_json(page.ted);
  js["ir"] = ir_json(page.ir);
  js["payloads"] = json::array();
  for (const auto& p : page.payloads)
    js["payloads"].push_back({{"sense", p.sense},
                              {"lemma", p.lemma},
                              {"language", to_string(p.language)},
                              {"gloss_ru", p.gloss_ru},
                              {"gloss_bg", p.gloss_bg},
                              {"color", p.color}});
  js["popups"] = json::array();
  for (const auto& p : page.popups)
    js["popups"].push_back({{"id", p.id},
                            {"kind", p.kind},
                            {"anchor", p.anchor},
                            {"title", p.title},
                            {"lines", p.lines},
                            {"url", p.url}});
  js["colors"] = page.colors;
  js["chains"] = json::array();
  for (const auto& c : page.chains)
    js["chains"].push_back({{"links", c.links},
                            {"signs", c.signs},
                            {"terminal", to_string(c.terminal)},
                            {"cut_reason", to_string(c.cut_reason)}});
  js["reference_base"] = json::array();
  for (const auto& e : page.reference_base)
    js["reference_base"].push_back({{"key", e.key}, {"glyph", e.glyph}, {"label", e.label}});
  return js.dump(2) + "\n";
}

Page page_from_json(std::string_view text) {
  json js;
  try {
    js = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::runtime_error(std::string("page json: ") + e.what());
  }
  Page page;
  try {
    page.slug = js.at("slug").get<std::string>();
    page.title = js.at("title").get<std::string>();
    const json& h = js.at("header");
    page.header.kind = enum_from<SignType>(h.at("kind"), sign_type_from_string);
    page.header.key = h.at("key").get<std::string>();
    for (const auto& m : h.at("members"))
      page.header.members.push_back({m.at("lexeme").get<std::string>(), m.at("sense").get<std::string>(),
                                     m.at("lemma").get<std::string>(),
                                     language_from_string(m.at("language").get<std::string>()),
                                     enum_from<MemberFormat>(m.at("format"), member_format_from_string)});
    for (const auto& c : h.at("connectors"))
      page.header.connectors.push_back(c.is_null() ? std::nullopt
                                                   : std::optional(enum_from<SignType>(c, sign_type_from_string)));
    if (!h.at("descriptive").is_null()) {
      const json& d = h.at("descriptive");
      page.header.descriptive = DescriptiveEquivalent{language_from_string(d.at("language").get<std::string>()),
                                                      d.at("text").get<std::string>(),
                                                      d.at("is_definition_like").get<bool>()};
    }
    page.header.signs = h.at("signs").get<std::vector<std::string>>();

    const json& rows = js.at("rows");
    if (!rows.is_array() || rows.size() != 5) throw std::runtime_error("page json: expected five rows");
    for (std::size_t r = 0; r < 5; ++r) {
      for (const auto& s : rows[r]) {
        PageSign p;
        p.id = s.at("id").get<std::string>();
        p.type = enum_from<SignType>(s.at("type"), sign_type_from_string);
        p.direction = enum_from<Direction>(s.at("direction"), direction_from_string);
        p.level = s.at("level").get<int>();
        p.ru_sense = s.at("ru_sense").get<std::string>();
        p.bg_sense = s.at("bg_sense").get<std::string>();
        p.ru_text = s.at("ru_text").get<std::string>();
        p.bg_text = s.at("bg_text").get<std::string>();
        p.ted_ru = opt_from(s.at("ted_ru"));
        p.ted_bg = opt_from(s.at("ted_bg"));
        p.ir = ir_from(s.at("ir"));
        p.color = s.at("color").get<std::string>();
        for (const auto& l : s.at("links")) p.links.push_back(link_from(l));
        page.rows[r].push_back(std::move(p));
      }
    }
    for (const auto& l : js.at("rubric_links")) page.rubric_links.push_back(link_from(l));
    page.ted = opt_from(js.at("ted"));
    page.ir = ir_from(js.at("ir"));
    for (const auto& p : js.at("payloads"))
      page.payloads.push_back({p.at("sense").get<std::string>(), p.at("lemma").get<std::string>(),
                               language_from_string(p.at("language").get<std::string>()),
                               p.at("gloss_ru").get<std::string>(), p.at("gloss_bg").get<std::string>(),
                               p.at("color").get<std::string>()});
    for (const auto& p : js.at("popups"))
      page.popups.push_back({p.at("id").get<std::string>(), p.at("kind").get<std::string>(),
                             p.at("anchor").get<std::string>(), p.at("title").get<std::string>(),
                             p.at("lines").get<std::vector<std::string>>(), p.at("url").get<std::string>()});
    page.colors = js.at("colors").get<std::map<std::string, std::string>>();
    for (const auto& c : js.at("chains")) {
      ImplicativeChain ch;
      ch.links = c.at("links").get<std::vector<std::string>>();
      ch.signs = c.at("signs").get<std::vector<std::string>>();
      ch.terminal = enum_from<ChainTerminal>(c.at("terminal"), chain_terminal_from_string);
      ch.cut_reason = enum_from<CutReason>(c.at("cut_reason"), cut_reason_from_string);
      page.chains.push_back(std::move(ch));
    }
    for (const auto& e : js.at("reference_base"))
      page.reference_base.push_back(
          {e.at("key").get<std::string>(), e.at("glyph").get<std::string>(), e.at("label").get<std::string>()});
  } catch (const json::exception& e) {
    throw std::runtime_error(std::string("page json: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error(std::string("page json: ") + e.what());
  }
  return page;
}

}  // namespace sedict
