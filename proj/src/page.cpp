#include "sedict/page.hpp"

#include <algorithm>
#include <set>

#include "json.hpp"

namespace sedict {

namespace {

std::string lemma_of(const std::string& sense_id, const LexiconModel& model) {
  const Sense* s = model.find_sense(sense_id);
  return s ? model.lexeme_of(*s).lemma : std::string();
}

std::optional<std::string> ted_of(const std::string& sense_id, const LexiconModel& model) {
  const Sense* s = model.find_sense(sense_id);
  if (!s || !s->ted) return std::nullopt;
  return ted_display(*s->ted);
}

std::optional<ResultIndex> combined_ir(const std::string& ru, const std::string& bg, const LexiconModel& model) {
  const Sense* r = ru.empty() ? nullptr : model.find_sense(ru);
  const Sense* b = bg.empty() ? nullptr : model.find_sense(bg);
  ResultIndex ir;
  if (r && r->ir) ir.ru_label = r->ir->ru_label.empty() ? r->ir->bg_label : r->ir->ru_label;
  if (b && b->ir) ir.bg_label = b->ir->bg_label.empty() ? b->ir->ru_label : b->ir->bg_label;
  if (ir.ru_label.empty() && ir.bg_label.empty()) return std::nullopt;
  return ir;
}

std::vector<RubricLink> external_links(const Lexeme& lex, const LexiconModel& model) {
  std::vector<RubricLink> out;
  auto it = model.links.find(lex.id);
  if (it == model.links.end()) return out;
  for (Rubric r : kAllRubrics) {
    auto jt = it->second.find(r);
    if (jt == it->second.end()) continue;
    out.push_back({std::string(to_string(r)), lex.language, lex.id, jt->second, {}});
  }
  return out;
}

PageSign make_sign(const BinarySign& b, int level, const LexiconModel& model) {
  PageSign p;
  p.id = b.id;
  p.type = b.type;
  p.direction = b.direction;
  p.level = level;
  p.ru_sense = b.ru;
  p.bg_sense = b.bg;
  p.ru_text = b.ru.empty() ? b.descriptive->text : lemma_of(b.ru, model);
  p.bg_text = b.bg.empty() ? b.descriptive->text : lemma_of(b.bg, model);
  if (!b.ru.empty()) p.ted_ru = ted_of(b.ru, model);
  if (!b.bg.empty()) p.ted_bg = ted_of(b.bg, model);
  p.ir = combined_ir(b.ru, b.bg, model);
  return p;
}

void rubric_links_for(const HeaderMember& m, const LexiconModel& model, std::vector<RubricLink>& out) {
  const Lexeme* lex = model.find_lexeme(m.lexeme);
  const Sense* sense = model.find_sense(m.sense);
  if (!lex || !sense) return;
  auto ext = model.links.count(lex->id) ? model.links.at(lex->id) : std::map<Rubric, std::string>{};

  RubricLink corpus{m.language == Language::ru ? "НКРЯ" : "БНК", m.language, lex->id, "", {}};
  CorpusSource wanted = m.language == Language::ru ? CorpusSource::nkrya : CorpusSource::bnk;
  for (const Sense* s : model.senses_of(*lex)) {
    for (const auto& c : s->citations) {
      if (c.source != wanted) continue;
      corpus.items.push_back(c.annotation ? c.text + " (" + *c.annotation + ")" : c.text);
      if (corpus.target.empty() && c.url) corpus.target = *c.url;
    }
  }
  out.push_back(std::move(corpus));

  for (Rubric r : kAllRubrics) {
    RubricLink link{std::string(to_string(r)), m.language, lex->id, "", {}};
    if (auto it = ext.find(r); it != ext.end()) link.target = it->second;
    if (r == Rubric::fr) link.items = sense->idioms;
    if (r == Rubric::sin) link.items = sense->synonyms;
    if (!link.target.empty() || !link.items.empty()) out.push_back(std::move(link));
  }
}

}  // namespace

std::vector<LegendEntry> reference_base(const GlyphSet& glyphs) {
  std::vector<LegendEntry> out;
  const std::array<std::pair<Ideogram, const char*>, 10> ideograms{{
      {Ideogram::filled_square, "Синхронный гомогенный знак"},
      {Ideogram::open_square, "Синхронный гетерогенный знак"},
      {Ideogram::async_mark, "Асинхронный знак"},
      {Ideogram::disjunctive_mark, "Дизъюнктивный знак"},
      {Ideogram::filled_circle, "Диффузный знак"},
      {Ideogram::false_mark, "Ложный знак"},
      {Ideogram::empty_mark, "Пустой знак"},
      {Ideogram::polarization_start, "Начало поляризации"},
      {Ideogram::polarization_step, "Ступень поляризации"},
      {Ideogram::direction_arrow, "Направление связи"},
  }};
  for (const auto& [i, label] : ideograms) out.push_back({std::string(to_string(i)), glyphs.of(i), label});
  const std::array<std::pair<const char*, const char*>, 10> abbreviations{{
      {"СИН", "Синонимы"},
      {"ФР", "Фразеологизмы"},
      {"АСС", "Ассоциации"},
      {"МОРФ", "Морфологический анализ"},
      {"ПЗ", "Полезно знать"},
      {"НКРЯ", "Национальный корпус русского языка"},
      {"БНК", "Български национален корпус"},
      {"ТЭД", "Тип экспансивного действия"},
      {"СС", "Соположенные слова"},
      {"ИР", "Индекс результата"},
  }};
  for (const auto& [abbr, label] : abbreviations) out.push_back({abbr, abbr, label});
  return out;
}

std::string legend_to_json(const std::vector<LegendEntry>& legend) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& e : legend) arr.push_back({{"key", e.key}, {"glyph", e.glyph}, {"label", e.label}});
  return nlohmann::json{{"legend", arr}}.dump(2) + "\n";
}

Diagnostics assign_colors(Page& page) {
  Diagnostics out;
  page.colors.clear();
  std::size_t groups = 0;
  for (auto& row : page.rows) {
    for (auto& s : row) {
      if (is_warning(s.type)) {
        s.color.clear();
        continue;
      }
      auto it = page.colors.find(s.id);
      if (it == page.colors.end()) {
        it = page.colors.emplace(s.id, "c" + std::to_string(groups % kPaletteSize)).first;
        ++groups;
      }
      s.color = it->second;
    }
  }
  if (groups > kPaletteSize)
    out.push_back(warning("color-reuse", page.slug,
                          std::to_string(groups) + " correspondence groups share " +
                              std::to_string(kPaletteSize) + " colors"));

  std::map<std::string, std::string> sense_color;
  for (const auto& row : page.rows)
    for (const auto& s : row)
      if (!s.color.empty())
        for (const std::string* sid : {&s.ru_sense, &s.bg_sense})
          if (!sid->empty()) sense_color.emplace(*sid, s.color);
  for (auto& p : page.payloads) {
    auto it = sense_color.find(p.sense);
    p.color = it == sense_color.end() ? "" : it->second;
  }
  return out;
}

std::vector<std::string> displayed_senses(const Page& page) {
  std::vector<std::string> out;
  std::set<std::string> seen;
  auto add = [&](const std::string& s) {
    if (!s.empty() && seen.insert(s).second) out.push_back(s);
  };
  for (const auto& m : page.header.members) add(m.sense);
  for (const auto& row : page.rows)
    for (const auto& s : row) {
      add(s.ru_sense);
      add(s.bg_sense);
    }
  return out;
}

std::size_t displayed_word_count(const Page& page) {
  std::set<std::pair<std::string, std::string>> words;
  for (const auto& m : page.header.members) words.emplace(m.lemma, std::string(to_string(m.language)));
  if (page.header.descriptive) words.emplace(page.header.descriptive->text, "descriptive");
  for (const auto& row : page.rows)
    for (const auto& s : row) {
      words.emplace(s.ru_text, "ru");
      words.emplace(s.bg_text, "bg");
    }
  return words.size();
}

std::vector<std::string> missing_payloads(const Page& page) {
  std::set<std::string> have;
  for (const auto& p : page.payloads) have.insert(p.sense);
  std::vector<std::string> out;
  for (const auto& s : displayed_senses(page))
    if (!have.count(s)) out.push_back(s);
  return out;
}

CompileResult compile_page(const PageHeader& header, const SignGraph& graph, const LexiconModel& model,
                           const PageConfig& cfg) {
  CompileResult result;
  Page page;
  page.header = header;
  page.slug = header_slug(header);
  page.title = format_header(header, cfg.glyphs);

  ChainRequest req{header.root_senses(), header.signs, cfg.max_chain_depth};
  ChainSet chains = build_chains(req, graph, model);
  page.chains = chains.chains;
  for (auto& d : chains.diagnostics) d.subject = page.slug + ":" + d.subject;
  result.diagnostics = chains.diagnostics;

  for (const auto& id : header.signs) {
    const BinarySign* b = graph.find(id);
    if (!b) {
      result.diagnostics.push_back(error("missing-sign", page.slug, "header sign " + id + " not in the sign graph"));
      return result;
    }
    page.rows[0].push_back(make_sign(*b, 0, model));
  }

  for (const auto& [id, level] : chains.levels) {
    if (level == 0) continue;
    const BinarySign* b = graph.find(id);
    if (!b) continue;
    std::size_t row = b->type == SignType::Asynchronous ? 1 : is_synchronous(b->type) ? 2 : 3;
    page.rows[row].push_back(make_sign(*b, level, model));
  }
  for (std::size_t r = 1; r <= 3; ++r)
    std::stable_sort(page.rows[r].begin(), page.rows[r].end(), [](const PageSign& a, const PageSign& b) {
      return std::tie(a.level, a.id) < std::tie(b.level, b.id);
    });

  std::set<std::string> header_lexemes;
  for (const auto& m : header.members) header_lexemes.insert(m.lexeme);
  for (const auto& b : graph.signs) {
    if (!is_warning(b.type)) continue;
    bool incident = false;
    std::string outsider;
    for (const std::string* sid : {&b.ru, &b.bg}) {
      const Sense* s = sid->empty() ? nullptr : model.find_sense(*sid);
      if (!s) continue;
      if (header_lexemes.count(s->lexeme))
        incident = true;
      else
        outsider = s->lexeme;
    }
    if (b.host && header_lexemes.count(*b.host)) incident = true;
    if (!incident) continue;
    PageSign ps = make_sign(b, 0, model);
    for (const std::string* sid : {&b.ru, &b.bg}) {
      const Sense* s = sid->empty() ? nullptr : model.find_sense(*sid);
      if (!s) continue;
      const Lexeme& lex = model.lexeme_of(*s);
      if (header_lexemes.count(lex.id) && !outsider.empty()) continue;
      for (auto& l : external_links(lex, model)) ps.links.push_back(std::move(l));
    }
    page.rows[4].push_back(std::move(ps));
  }

  for (const auto& m : header.members) rubric_links_for(m, model, page.rubric_links);
  {
    std::string ru, bg;
    for (const auto& m : header.members) {
      if (m.language == Language::ru && ru.empty()) ru = m.sense;
      if (m.language == Language::bg && bg.empty()) bg = m.sense;
    }
    page.ted = ted_of(ru.empty() ? bg : ru, model);
    if (!page.ted && !bg.empty()) page.ted = ted_of(bg, model);
    page.ir = combined_ir(ru, bg, model);
  }

  for (const auto& sid : displayed_senses(page)) {
    const Sense* s = model.find_sense(sid);
    if (!s) continue;
    const Lexeme& lex = model.lexeme_of(*s);
    page.payloads.push_back({s->id, lex.lemma, lex.language, s->gloss_ru, s->gloss_bg, ""});
  }
  auto color_diags = assign_colors(page);
  result.diagnostics.insert(result.diagnostics.end(), color_diags.begin(), color_diags.end());

  int next = 0;
  auto popup = [&](std::string kind, std::string anchor, std::string title, std::vector<std::string> lines,
                   std::string url) {
    page.popups.push_back(
        {"p" + std::to_string(++next), std::move(kind), std::move(anchor), std::move(title), std::move(lines),
         std::move(url)});
  };
  for (const auto& l : page.rubric_links)
    popup(l.rubric == "НКРЯ" || l.rubric == "БНК" ? "corpus" : "rubric", l.lexeme + ":" + l.rubric, l.rubric, l.items,
          l.target);
  if (page.ted) popup("ted", page.slug, "ТЭД", {*page.ted}, "");
  if (page.ir) popup("ir", page.slug, "ИР", {page.ir->display()}, "");
  for (std::size_t r = 1; r < 5; ++r) {
    for (const auto& s : page.rows[r]) {
      if (s.ted_ru) popup("ted", s.id + ":ru", "ТЭД", {*s.ted_ru}, "");
      if (s.ted_bg) popup("ted", s.id + ":bg", "ТЭД", {*s.ted_bg}, "");
      if (s.ir) popup("ir", s.id, "ИР", {s.ir->display()}, "");
      for (const auto& l : s.links) popup("rubric", s.id + ":" + l.lexeme + ":" + l.rubric, l.rubric, l.items, l.target);
    }
  }

  page.reference_base = reference_base(cfg.glyphs);

  auto missing = missing_payloads(page);
  for (const auto& m : missing)
    result.diagnostics.push_back(error("missing-payload", page.slug, "displayed sense " + m + " has no gloss payload"));
  if (!missing.empty()) return result;
  result.page = std::move(page);
  return result;
}

}  // namespace sedict
