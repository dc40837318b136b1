#include <sstream>
#include <stdexcept>

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>

#include "sedict/emit.hpp"

namespace sedict {

namespace {

std::string attr_escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\n': out += "&#10;"; break;
      case '\r': out += "&#13;"; break;
      case '\t': out += "&#9;"; break;
      default: out += c;
    }
  }
  return out;
}

class Writer {
 public:
  void open(std::string_view name, std::initializer_list<std::pair<std::string_view, std::string>> attrs,
            bool empty = false) {
    out_ << std::string(depth_ * 2, ' ') << '<' << name;
    for (const auto& [k, v] : attrs) out_ << ' ' << k << "=\"" << attr_escape(v) << '"';
    if (empty) {
      out_ << "/>\n";
    } else {
      out_ << ">\n";
      ++depth_;
    }
  }
  void leaf(std::string_view name, std::initializer_list<std::pair<std::string_view, std::string>> attrs) {
    open(name, attrs, true);
  }
  void close(std::string_view name) {
    --depth_;
    out_ << std::string(depth_ * 2, ' ') << "</" << name << ">\n";
  }
  std::string str() const { return out_.str(); }

 private:
  std::ostringstream out_;
  std::size_t depth_ = 0;
};

std::string opt(const std::optional<std::string>& v) { return v.value_or(""); }
std::string flag(bool b) { return b ? "1" : "0"; }

void write_links(Writer& w, const std::vector<RubricLink>& links, std::string_view name) {
  for (const auto& l : links) {
    w.open(name, {{"rubric", l.rubric}, {"side", std::string(to_string(l.side))}, {"lexeme", l.lexeme},
                  {"target", l.target}});
    for (const auto& i : l.items) w.leaf("item", {{"value", i}});
    w.close(name);
  }
}

void write_ir(Writer& w, const std::optional<ResultIndex>& ir) {
  if (ir) w.leaf("ir", {{"ru", ir->ru_label}, {"bg", ir->bg_label}});
}

using boost::property_tree::ptree;

const ptree& attrs_of(const ptree& node) {
  static const ptree empty;
  auto it = node.find("<xmlattr>");
  return it == node.not_found() ? empty : it->second;
}

std::string attr(const ptree& node, const char* key) {
  const ptree& a = attrs_of(node);
  auto it = a.find(key);
  if (it == a.not_found()) throw std::runtime_error(std::string("xml: missing attribute ") + key);
  return it->second.data();
}

bool has_attr(const ptree& node, const char* key) {
  const ptree& a = attrs_of(node);
  return a.find(key) != a.not_found();
}

std::optional<std::string> opt_attr(const ptree& node, const char* key) {
  if (!has_attr(node, key)) return std::nullopt;
  return attr(node, key);
}

template <typename T, typename F>
T parse_enum_attr(const ptree& node, const char* key, F from) {
  auto v = from(attr(node, key));
  if (!v) throw std::runtime_error(std::string("xml: bad value for ") + key);
  return *v;
}

Language lang_attr(const ptree& node, const char* key) {
  try {
    return language_from_string(attr(node, key));
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error(std::string("xml: ") + e.what());
  }
}

RubricLink read_link(const ptree& node) {
  RubricLink l{attr(node, "rubric"), lang_attr(node, "side"), attr(node, "lexeme"), attr(node, "target"), {}};
  for (const auto& [k, c] : node)
    if (k == "item") l.items.push_back(attr(c, "value"));
  return l;
}

std::optional<ResultIndex> read_ir(const ptree& node) {
  auto it = node.find("ir");
  if (it == node.not_found()) return std::nullopt;
  return ResultIndex{attr(it->second, "ru"), attr(it->second, "bg")};
}

int to_int(const std::string& s) {
  try {
    return std::stoi(s);
  } catch (const std::exception&) {
    throw std::runtime_error("xml: expected an integer, got '" + s + "'");
  }
}

}  // namespace

std::string emit_xml(const Page& page) {
  Writer w;
  w.open("page", {{"slug", page.slug}, {"title", page.title}});

  const PageHeader& h = page.header;
  w.open("header", {{"kind", std::string(to_string(h.kind))}, {"key", h.key}});
  for (const auto& m : h.members)
    w.leaf("member", {{"lexeme", m.lexeme},
                      {"sense", m.sense},
                      {"lemma", m.lemma},
                      {"language", std::string(to_string(m.language))},
                      {"format", std::string(to_string(m.format))}});
  for (const auto& c : h.connectors) w.leaf("connector", {{"type", c ? std::string(to_string(*c)) : ""}});
  if (h.descriptive)
    w.leaf("descriptive", {{"language", std::string(to_string(h.descriptive->language))},
                           {"text", h.descriptive->text},
                           {"definition-like", flag(h.descriptive->is_definition_like)}});
  for (const auto& s : h.signs) w.leaf("header-sign", {{"id", s}});
  w.close("header");

  for (std::size_t r = 0; r < page.rows.size(); ++r) {
    w.open("row", {{"n", std::to_string(r + 1)}});
    for (const auto& s : page.rows[r]) {
      w.open("sign", {{"id", s.id},
                      {"type", std::string(to_string(s.type))},
                      {"direction", std::string(to_string(s.direction))},
                      {"level", std::to_string(s.level)},
                      {"ru-sense", s.ru_sense},
                      {"bg-sense", s.bg_sense},
                      {"ru-text", s.ru_text},
                      {"bg-text", s.bg_text},
                      {"color", s.color}});
      if (s.ted_ru) w.leaf("ted", {{"side", "ru"}, {"value", *s.ted_ru}});
      if (s.ted_bg) w.leaf("ted", {{"side", "bg"}, {"value", *s.ted_bg}});
      write_ir(w, s.ir);
      write_links(w, s.links, "link");
      w.close("sign");
    }
    w.close("row");
  }

  write_links(w, page.rubric_links, "rubric-link");
  if (page.ted) w.leaf("ted", {{"value", *page.ted}});
  write_ir(w, page.ir);

  for (const auto& p : page.payloads)
    w.leaf("payload", {{"sense", p.sense},
                       {"lemma", p.lemma},
                       {"language", std::string(to_string(p.language))},
                       {"gloss-ru", p.gloss_ru},
                       {"gloss-bg", p.gloss_bg},
                       {"color", p.color}});
  for (const auto& p : page.popups) {
    w.open("popup", {{"id", p.id}, {"kind", p.kind}, {"anchor", p.anchor}, {"title", p.title}, {"url", p.url}});
    for (const auto& l : p.lines) w.leaf("line", {{"value", l}});
    w.close("popup");
  }
  for (const auto& [sign, color] : page.colors) w.leaf("color", {{"sign", sign}, {"index", color}});
  for (const auto& c : page.chains) {
    w.open("chain", {{"terminal", std::string(to_string(c.terminal))},
                     {"cut-reason", std::string(to_string(c.cut_reason))}});
    for (const auto& l : c.links) w.leaf("link", {{"sense", l}});
    for (const auto& s : c.signs) w.leaf("step", {{"sign", s}});
    w.close("chain");
  }
  for (const auto& e : page.reference_base) w.leaf("legend", {{"key", e.key}, {"glyph", e.glyph}, {"label", e.label}});
  w.close("page");
  return "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n" + w.str();
}

Page parse_xml(std::string_view xml) {
  ptree tree;
  try {
    std::istringstream in{std::string(xml)};
    boost::property_tree::read_xml(in, tree);
  } catch (const boost::property_tree::xml_parser_error& e) {
    throw std::runtime_error(std::string("xml: ") + e.what());
  }
  auto root = tree.find("page");
  if (root == tree.not_found()) throw std::runtime_error("xml: no <page> element");
  const ptree& pn = root->second;

  Page page;
  page.slug = attr(pn, "slug");
  page.title = attr(pn, "title");
  for (const auto& [key, node] : pn) {
    if (key == "header") {
      PageHeader& h = page.header;
      h.kind = parse_enum_attr<SignType>(node, "kind", sign_type_from_string);
      h.key = attr(node, "key");
      for (const auto& [k, c] : node) {
        if (k == "member") {
          h.members.push_back({attr(c, "lexeme"), attr(c, "sense"), attr(c, "lemma"), lang_attr(c, "language"),
                               parse_enum_attr<MemberFormat>(c, "format", member_format_from_string)});
        } else if (k == "connector") {
          std::string t = attr(c, "type");
          if (t.empty())
            h.connectors.push_back(std::nullopt);
          else
            h.connectors.push_back(parse_enum_attr<SignType>(c, "type", sign_type_from_string));
        } else if (k == "descriptive") {
          h.descriptive = DescriptiveEquivalent{lang_attr(c, "language"), attr(c, "text"),
                                                attr(c, "definition-like") == "1"};
        } else if (k == "header-sign") {
          h.signs.push_back(attr(c, "id"));
        }
      }
    } else if (key == "row") {
      int n = to_int(attr(node, "n"));
      if (n < 1 || n > 5) throw std::runtime_error("xml: row number out of range");
      for (const auto& [k, c] : node) {
        if (k != "sign") continue;
        PageSign s;
        s.id = attr(c, "id");
        s.type = parse_enum_attr<SignType>(c, "type", sign_type_from_string);
        s.direction = parse_enum_attr<Direction>(c, "direction", direction_from_string);
        s.level = to_int(attr(c, "level"));
        s.ru_sense = attr(c, "ru-sense");
        s.bg_sense = attr(c, "bg-sense");
        s.ru_text = attr(c, "ru-text");
        s.bg_text = attr(c, "bg-text");
        s.color = attr(c, "color");
        for (const auto& [kk, cc] : c) {
          if (kk == "ted") (attr(cc, "side") == "ru" ? s.ted_ru : s.ted_bg) = attr(cc, "value");
          if (kk == "link") s.links.push_back(read_link(cc));
        }
        s.ir = read_ir(c);
        page.rows[static_cast<std::size_t>(n - 1)].push_back(std::move(s));
      }
    } else if (key == "rubric-link") {
      page.rubric_links.push_back(read_link(node));
    } else if (key == "ted") {
      page.ted = attr(node, "value");
    } else if (key == "ir") {
      page.ir = ResultIndex{attr(node, "ru"), attr(node, "bg")};
    } else if (key == "payload") {
      page.payloads.push_back({attr(node, "sense"), attr(node, "lemma"), lang_attr(node, "language"),
                               attr(node, "gloss-ru"), attr(node, "gloss-bg"), attr(node, "color")});
    } else if (key == "popup") {
      Popup p{attr(node, "id"), attr(node, "kind"), attr(node, "anchor"), attr(node, "title"), {}, attr(node, "url")};
      for (const auto& [k, c] : node)
        if (k == "line") p.lines.push_back(attr(c, "value"));
      page.popups.push_back(std::move(p));
    } else if (key == "color") {
      page.colors[attr(node, "sign")] = attr(node, "index");
    } else if (key == "chain") {
      ImplicativeChain c;
      c.terminal = parse_enum_attr<ChainTerminal>(node, "terminal", chain_terminal_from_string);
      c.cut_reason = parse_enum_attr<CutReason>(node, "cut-reason", cut_reason_from_string);
      for (const auto& [k, n] : node) {
        if (k == "link") c.links.push_back(attr(n, "sense"));
        if (k == "step") c.signs.push_back(attr(n, "sign"));
      }
      page.chains.push_back(std::move(c));
    } else if (key == "legend") {
      page.reference_base.push_back({attr(node, "key"), attr(node, "glyph"), attr(node, "label")});
    }
  }
  return page;
}

}  // namespace sedict
