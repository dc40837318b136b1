#include "sedict/headers.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

namespace sedict {

Ideogram ideogram_for(SignType t) {
  switch (t) {
    case SignType::SynchronousHomogeneous: return Ideogram::filled_square;
    case SignType::SynchronousHeterogeneous: return Ideogram::open_square;
    case SignType::Asynchronous: return Ideogram::async_mark;
    case SignType::Disjunctive: return Ideogram::disjunctive_mark;
    case SignType::Diffuse: return Ideogram::filled_circle;
    case SignType::False: return Ideogram::false_mark;
    case SignType::Empty: return Ideogram::empty_mark;
  }
  return Ideogram::false_mark;
}

namespace {
constexpr std::array<std::string_view, 10> kIdeogramNames = {
    "filled_square", "open_square",        "async_mark",        "disjunctive_mark", "filled_circle",
    "false_mark",    "empty_mark",         "polarization_start", "polarization_step", "direction_arrow"};
}

std::string_view to_string(Ideogram i) { return kIdeogramNames[static_cast<std::size_t>(i)]; }

std::optional<Ideogram> ideogram_from_string(std::string_view s) {
  for (std::size_t i = 0; i < kIdeogramNames.size(); ++i)
    if (kIdeogramNames[i] == s) return kAllIdeograms[i];
  return std::nullopt;
}

GlyphSet GlyphSet::defaults() {
  GlyphSet g;
  g.glyphs_ = {
      {Ideogram::filled_square, "■"},      {Ideogram::open_square, "□"},       {Ideogram::async_mark, "◩"},
      {Ideogram::disjunctive_mark, "■■"},  {Ideogram::filled_circle, "●"},     {Ideogram::false_mark, "◇"},
      {Ideogram::empty_mark, "○"},         {Ideogram::polarization_start, "П¹"}, {Ideogram::polarization_step, "П²"},
      {Ideogram::direction_arrow, "→"},
  };
  return g;
}

bool GlyphSet::sign_glyphs_distinct() const {
  std::set<std::string> seen;
  for (SignType t : kAllSignTypes)
    if (!seen.insert(of(t)).second) return false;
  return true;
}

std::string_view to_string(MemberFormat f) {
  switch (f) {
    case MemberFormat::plain: return "plain";
    case MemberFormat::parenthesized: return "parenthesized";
    case MemberFormat::bracketed: return "bracketed";
  }
  return "?";
}

std::optional<MemberFormat> member_format_from_string(std::string_view s) {
  for (MemberFormat f : {MemberFormat::plain, MemberFormat::parenthesized, MemberFormat::bracketed})
    if (to_string(f) == s) return f;
  return std::nullopt;
}

std::vector<std::string> PageHeader::root_senses() const {
  std::vector<std::string> out;
  for (const auto& m : members) out.push_back(m.sense);
  return out;
}

int header_rank(SignType t) {
  switch (t) {
    case SignType::SynchronousHomogeneous: return 0;
    case SignType::SynchronousHeterogeneous: return 1;
    case SignType::Diffuse: return 2;
    case SignType::Disjunctive: return 3;
    default: return 9;
  }
}

namespace {

using PriorityKey = std::tuple<int, int, int, int, std::vector<std::uint32_t>, std::string>;

bool unique_side_is(const BinarySign& b, Language lang) {
  if (b.type == SignType::Diffuse || b.type == SignType::Disjunctive)
    return (b.direction == Direction::left_to_right) == (lang == Language::ru);
  return false;
}

HeaderMember member_for(const Sense& s, const LexiconModel& model) {
  const Lexeme& lex = model.lexeme_of(s);
  HeaderMember m;
  m.lexeme = lex.id;
  m.sense = s.id;
  m.lemma = lex.lemma;
  m.language = lex.language;
  if (lex.has_register(Register::dated))
    m.format = MemberFormat::bracketed;
  else if (!model.has_ted_sense(lex))
    m.format = MemberFormat::parenthesized;
  return m;
}

bool dated(const std::string& sense, const LexiconModel& model) {
  const Sense* s = model.find_sense(sense);
  return s && model.lexeme_of(*s).has_register(Register::dated);
}

struct Dublet {
  const Sense* sense;
  const BinarySign* sign;
};

// Same-language lexemes sharing the etymon of `member` that pair synchronously with `shared`.
std::vector<Dublet> find_dublets(const Sense& member, const Sense& shared, const LexiconModel& model,
                                 const SignGraph& graph) {
  std::vector<Dublet> out;
  const Lexeme& lex = model.lexeme_of(member);
  if (!lex.etymon) return out;
  for (const BinarySign* b : graph.signs_of(shared.id)) {
    if (!is_synchronous(b->type)) continue;
    const Sense* other = model.find_sense(b->partner_of(shared.id));
    if (!other || other->lexeme == lex.id) continue;
    const Lexeme& ol = model.lexeme_of(*other);
    if (ol.language == lex.language && ol.etymon == lex.etymon) out.push_back({other, b});
  }
  std::sort(out.begin(), out.end(), [&](const Dublet& a, const Dublet& b) {
    bool da = dated(a.sense->id, model), db = dated(b.sense->id, model);
    if (da != db) return da;
    int c = text::collate(model.lexeme_of(*a.sense).lemma, model.lexeme_of(*b.sense).lemma);
    if (c != 0) return c < 0;
    return a.sign->id < b.sign->id;
  });
  return out;
}

}  // namespace

std::vector<PageHeader> select_headers(const LexiconModel& model, const SignGraph& graph, Diagnostics* log) {
  std::map<std::string, const BinarySign*> chosen;  // page key -> sign
  for (const auto& lex : model.lexemes) {
    if (!model.has_ted_sense(lex)) continue;
    std::optional<PriorityKey> best_key;
    const BinarySign* best = nullptr;
    for (const Sense* s : model.senses_of(lex)) {
      for (const BinarySign* b : graph.signs_of(s->id)) {
        bool eligible = is_synchronous(b->type) || (is_leaf(b->type) && unique_side_is(*b, lex.language));
        if (!eligible) continue;
        const std::string& partner_id = b->partner_of(s->id);
        const Sense* partner = partner_id.empty() ? nullptr : model.find_sense(partner_id);
        bool neutral = is_synchronous(b->type) && (s->scheme_neutral || (partner && partner->scheme_neutral));
        PriorityKey key{neutral ? 1 : 0,
                        header_rank(b->type),
                        partner && model.lexeme_of(*partner).has_register(Register::dated) ? 1 : 0,
                        s->rank,
                        partner ? text::collation_key(model.lexeme_of(*partner).lemma)
                                : std::vector<std::uint32_t>{},
                        b->id};
        if (!best_key || key < *best_key) {
          best_key = key;
          best = b;
        }
      }
    }
    if (!best) {
      if (log) log->push_back(info("no-header", lex.id, lex.lemma + " has no sign that can head a page"));
      continue;
    }
    std::string key = best->type == SignType::Disjunctive ? "unique:" + best->sense(lex.language) : best->id;
    chosen.emplace(key, best);
  }

  std::vector<std::pair<std::string, const BinarySign*>> order(chosen.begin(), chosen.end());
  std::stable_sort(order.begin(), order.end(), [&](const auto& a, const auto& b) {
    auto rank = [&](const BinarySign* s) {
      bool any_dated = (!s->ru.empty() && dated(s->ru, model)) || (!s->bg.empty() && dated(s->bg, model));
      return std::make_tuple(header_rank(s->type), any_dated ? 1 : 0);
    };
    if (rank(a.second) != rank(b.second)) return rank(a.second) < rank(b.second);
    return a.first < b.first;
  });

  std::set<std::string> absorbed;
  std::vector<PageHeader> headers;
  for (const auto& [key, sign] : order) {
    if (absorbed.count(key)) continue;
    PageHeader h;
    h.key = key;
    h.kind = sign->type;
    if (sign->type == SignType::Disjunctive) {
      Language unique = sign->direction == Direction::left_to_right ? Language::ru : Language::bg;
      h.members.push_back(member_for(*model.find_sense(sign->sense(unique)), model));
    } else if (sign->type == SignType::Diffuse) {
      const std::string& sid = sign->ru.empty() ? sign->bg : sign->ru;
      h.members.push_back(member_for(*model.find_sense(sid), model));
      h.descriptive = sign->descriptive;
      h.signs.push_back(sign->id);
    } else {
      const Sense& ru = *model.find_sense(sign->ru);
      const Sense& bg = *model.find_sense(sign->bg);
      h.members = {member_for(ru, model), member_for(bg, model)};
      h.connectors = {sign->type};
      h.signs.push_back(sign->id);

      // Dublets: at most one more member, Russian side first.
      for (Language side : {Language::ru, Language::bg}) {
        if (h.members.size() >= 3) break;
        const Sense& own = side == Language::ru ? ru : bg;
        const Sense& shared = side == Language::ru ? bg : ru;
        auto dublets = find_dublets(own, shared, model, graph);
        if (dublets.empty()) continue;
        const Dublet& d = dublets.front();
        HeaderMember dm = member_for(*d.sense, model);
        bool bracket = dm.format == MemberFormat::bracketed;
        h.signs.push_back(d.sign->id);
        absorbed.insert(d.sign->id);
        if (side == Language::ru) {
          if (bracket) {
            h.members.insert(h.members.begin(), dm);
            h.connectors.insert(h.connectors.begin(), std::nullopt);
          } else {
            h.members.push_back(dm);
            h.connectors.push_back(d.sign->type);
          }
        } else {
          if (bracket) {
            h.members.push_back(dm);
            h.connectors.push_back(std::nullopt);
          } else {
            h.members.insert(h.members.begin(), dm);
            h.connectors.insert(h.connectors.begin(), d.sign->type);
          }
        }
      }
    }
    headers.push_back(std::move(h));
  }
  return headers;
}

std::string format_header(const PageHeader& h, const GlyphSet& glyphs) {
  std::string out;
  for (std::size_t i = 0; i < h.members.size(); ++i) {
    if (i > 0) {
      const auto& c = i - 1 < h.connectors.size() ? h.connectors[i - 1] : std::nullopt;
      out += c ? " " + glyphs.of(*c) + " " : " ";
    }
    std::string word = text::to_upper(h.members[i].lemma);
    switch (h.members[i].format) {
      case MemberFormat::plain: out += word; break;
      case MemberFormat::parenthesized: out += "(" + word + ")"; break;
      case MemberFormat::bracketed: out += "[" + word + "]"; break;
    }
  }
  if (h.kind == SignType::Diffuse && h.descriptive)
    out += " " + glyphs.of(SignType::Diffuse) + " " + text::capitalize(h.descriptive->text);
  if (h.kind == SignType::Disjunctive) out += " " + glyphs.of(SignType::Disjunctive);
  return out;
}

std::string header_slug(const PageHeader& h) {
  std::string out;
  for (const auto& m : h.members) {
    std::string part = text::transliterate(m.lemma, m.language);
    if (part.empty()) continue;
    if (!out.empty()) out += '-';
    out += part;
  }
  return out.empty() ? "PAGE" : out;
}

}  // namespace sedict
