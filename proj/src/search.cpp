#include "sedict/search.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <tuple>

#include "json.hpp"

namespace sedict {

using nlohmann::json;

namespace {

constexpr std::array<std::string_view, 6> kRubricNames = {
    "page", "in_page_text", "corpus_excerpt", "co_positioned_pair", "ted_catalog", "link_catalog"};
constexpr std::array<std::string_view, 4> kKindNames = {"header", "gloss", "citation", "other"};

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

int stratum(PartOfSpeech p) { return static_cast<int>(p); }

void sort_alpha(AlphaIndex& idx) {
  std::stable_sort(idx.entries.begin(), idx.entries.end(), [](const AlphaEntry& a, const AlphaEntry& b) {
    auto ka = text::collation_key(a.lemma);
    auto kb = text::collation_key(b.lemma);
    return std::forward_as_tuple(stratum(a.pos), ka, a.lemma, a.slug, a.lexeme) <
           std::forward_as_tuple(stratum(b.pos), kb, b.lemma, b.slug, b.lexeme);
  });
}

int weight(const SearchWeights& w, DocKind k) {
  switch (k) {
    case DocKind::header: return w.header;
    case DocKind::gloss: return w.gloss;
    case DocKind::citation: return w.citation;
    case DocKind::other: return w.other;
  }
  return w.other;
}

}  // namespace

std::string_view to_string(HitRubric r) { return kRubricNames[static_cast<std::size_t>(r)]; }

std::optional<HitRubric> hit_rubric_from_string(std::string_view s) {
  for (std::size_t i = 0; i < kRubricNames.size(); ++i)
    if (kRubricNames[i] == s) return static_cast<HitRubric>(i);
  return std::nullopt;
}

SearchIndex build_indices(const std::vector<Page>& pages, const LexiconModel& model) {
  SearchIndex idx;
  // lexeme -> (header rank, slug) for header pages; lexeme -> slugs where shown on rows 1-4
  std::map<std::string, std::pair<int, std::string>> header_of;
  std::map<std::string, std::set<std::string>> hosted_on;
  std::set<std::tuple<std::string, Language, std::string, bool>> route_keys;

  auto add_route = [&](const std::string& lexeme_id, const std::string& slug, int rank, bool header) {
    const Lexeme* lex = model.find_lexeme(lexeme_id);
    if (!lex) return;
    std::string folded = text::fold(lex->lemma);
    if (!route_keys.emplace(folded, lex->language, slug, header).second) return;
    idx.routes.push_back({folded, lex->language, slug, rank, header});
  };
  auto lexeme_of_sense = [&](const std::string& sid) -> const Lexeme* {
    const Sense* s = sid.empty() ? nullptr : model.find_sense(sid);
    return s ? &model.lexeme_of(*s) : nullptr;
  };

  for (const auto& page : pages) {
    int rank = header_rank(page.header.kind);
    for (const auto& m : page.header.members) {
      add_route(m.lexeme, page.slug, rank, true);
      auto key = std::make_pair(rank, page.slug);
      auto [it, inserted] = header_of.emplace(m.lexeme, key);
      if (!inserted && key < it->second) it->second = key;
      hosted_on[m.lexeme].insert(page.slug);
      idx.documents.push_back({HitRubric::page, DocKind::header, page.slug, page.title, m.lemma});
    }
    for (std::size_t r = 0; r < 5; ++r) {
      for (const auto& s : page.rows[r]) {
        for (const std::string* sid : {&s.ru_sense, &s.bg_sense}) {
          const Lexeme* lex = lexeme_of_sense(*sid);
          if (!lex) continue;
          add_route(lex->id, page.slug, rank, false);
          if (r < 4) hosted_on[lex->id].insert(page.slug);
        }
        if (r > 0)
          idx.documents.push_back(
              {HitRubric::co_positioned_pair, DocKind::other, page.slug, s.ru_text + " – " + s.bg_text, ""});
        for (const auto* ted : {&s.ted_ru, &s.ted_bg})
          if (*ted)
            idx.documents.push_back(
                {HitRubric::ted_catalog, DocKind::other, page.slug, **ted + ": " + s.ru_text + " / " + s.bg_text, ""});
        for (const auto& l : s.links) {
          const Lexeme* lex = model.find_lexeme(l.lexeme);
          idx.documents.push_back({HitRubric::link_catalog, DocKind::other, page.slug,
                                   l.rubric + " " + (lex ? lex->lemma : l.lexeme) + " " + l.target, ""});
        }
      }
    }
    if (page.ted)
      idx.documents.push_back({HitRubric::ted_catalog, DocKind::other, page.slug, *page.ted + ": " + page.title, ""});
    for (const auto& p : page.payloads)
      idx.documents.push_back({HitRubric::in_page_text, DocKind::gloss, page.slug,
                               p.lemma + ": " + p.gloss_ru + " / " + p.gloss_bg, p.lemma});
    for (const auto& l : page.rubric_links) {
      const Lexeme* lex = model.find_lexeme(l.lexeme);
      std::string lemma = lex ? lex->lemma : l.lexeme;
      if (l.rubric == "НКРЯ" || l.rubric == "БНК") {
        for (const auto& item : l.items)
          idx.documents.push_back({HitRubric::corpus_excerpt, DocKind::citation, page.slug, item, ""});
      } else {
        std::string text = l.rubric + " " + lemma;
        if (!l.target.empty()) text += " " + l.target;
        for (const auto& item : l.items) text += " · " + item;
        idx.documents.push_back({HitRubric::link_catalog, DocKind::other, page.slug, text, ""});
      }
    }
  }

  for (const auto& [lexeme_id, slugs] : hosted_on) {
    const Lexeme* lex = model.find_lexeme(lexeme_id);
    if (!lex || slugs.empty()) continue;
    auto h = header_of.find(lexeme_id);
    std::string slug = h != header_of.end() ? h->second.second : *slugs.begin();
    AlphaIndex& target = lex->language == Language::ru ? idx.ru : idx.bg;
    target.entries.push_back({lex->lemma, lex->pos, slug, lex->id});
  }
  sort_alpha(idx.ru);
  sort_alpha(idx.bg);
  std::sort(idx.routes.begin(), idx.routes.end(), [](const Route& a, const Route& b) {
    return std::tie(a.lemma, a.language, a.header, a.rank, a.slug) <
           std::tie(b.lemma, b.language, b.header, b.rank, b.slug);
  });
  return idx;
}

LookupResult lookup(const SearchIndex& index, std::string_view lemma, Language lang) {
  LookupResult out;
  std::string folded = text::fold(trim(lemma));
  const Route* best = nullptr;
  std::set<std::string> rows;
  for (const auto& r : index.routes) {
    if (r.lemma != folded || r.language != lang) continue;
    if (r.header) {
      if (!best || std::tie(r.rank, r.slug) < std::tie(best->rank, best->slug)) best = &r;
    } else {
      rows.insert(r.slug);
    }
  }
  if (best) {
    out.status = LookupResult::Status::found;
    out.slug = best->slug;
  } else if (!rows.empty()) {
    out.status = LookupResult::Status::only_on_rows;
    out.suggestions.assign(rows.begin(), rows.end());
  }
  return out;
}

std::vector<CombinedHit> combined_search_all(const SearchIndex& index, std::string_view query) {
  std::string q = text::fold(trim(query));
  if (q.empty()) throw std::invalid_argument("empty query");
  std::map<std::tuple<HitRubric, std::string, std::string>, int> best;
  std::map<std::pair<std::string, std::string>, int> page_best;  // page rubric: one hit per slug
  std::map<std::string, std::string> page_snippet;
  for (const auto& d : index.documents) {
    std::string hay = text::fold(d.text);
    if (hay.find(q) == std::string::npos) continue;
    int score = !d.lemma.empty() && text::fold(d.lemma) == q ? index.weights.exact_lemma : weight(index.weights, d.kind);
    if (text::contains_whole_word(hay, q)) score += index.weights.whole_word_bonus;
    auto key = std::make_tuple(d.rubric, d.slug, d.rubric == HitRubric::page ? std::string() : d.text);
    auto [it, inserted] = best.emplace(key, score);
    if (!inserted) it->second = std::max(it->second, score);
    if (d.rubric == HitRubric::page) page_snippet[d.slug] = d.text;
  }
  std::vector<CombinedHit> hits;
  for (const auto& [key, score] : best) {
    const auto& [rubric, slug, snippet] = key;
    hits.push_back({rubric, slug, rubric == HitRubric::page ? page_snippet[slug] : snippet, score});
  }
  std::sort(hits.begin(), hits.end(), [](const CombinedHit& a, const CombinedHit& b) {
    return std::make_tuple(a.rubric, -a.score, a.slug, a.snippet) <
           std::make_tuple(b.rubric, -b.score, b.slug, b.snippet);
  });
  return hits;
}

SearchPage combined_search(const SearchIndex& index, std::string_view query, std::size_t hits_per_page,
                           std::size_t page) {
  if (hits_per_page == 0) throw std::invalid_argument("hits per page must be positive");
  if (page == 0) throw std::invalid_argument("result pages are numbered from 1");
  auto all = combined_search_all(index, query);
  SearchPage out;
  out.total = all.size();
  out.page = page;
  out.pages = (all.size() + hits_per_page - 1) / hits_per_page;
  std::size_t begin = (page - 1) * hits_per_page;
  for (std::size_t i = begin; i < all.size() && i < begin + hits_per_page; ++i) out.hits.push_back(all[i]);
  return out;
}

std::string alpha_to_json(const AlphaIndex& index) {
  json arr = json::array();
  for (const auto& e : index.entries)
    arr.push_back({{"lemma", e.lemma}, {"pos", to_string(e.pos)}, {"slug", e.slug}, {"lexeme", e.lexeme}});
  return json{{"language", to_string(index.language)}, {"entries", arr}}.dump(2) + "\n";
}

std::string combined_to_json(const SearchIndex& index) {
  json docs = json::array();
  for (const auto& d : index.documents)
    docs.push_back({{"rubric", to_string(d.rubric)},
                    {"kind", kKindNames[static_cast<std::size_t>(d.kind)]},
                    {"slug", d.slug},
                    {"text", d.text},
                    {"lemma", d.lemma}});
  json routes = json::array();
  for (const auto& r : index.routes)
    routes.push_back({{"lemma", r.lemma},
                      {"language", to_string(r.language)},
                      {"slug", r.slug},
                      {"rank", r.rank},
                      {"header", r.header}});
  const auto& w = index.weights;
  json weights{{"exact_lemma", w.exact_lemma}, {"header", w.header}, {"gloss", w.gloss},
               {"citation", w.citation},       {"other", w.other},   {"whole_word_bonus", w.whole_word_bonus}};
  return json{{"documents", docs}, {"routes", routes}, {"weights", weights}}.dump(2) + "\n";
}

std::string search_page_to_json(const SearchPage& page) {
  json groups = json::array();
  for (const auto& h : page.hits) {
    if (groups.empty() || groups.back()["rubric"] != to_string(h.rubric))
      groups.push_back({{"rubric", to_string(h.rubric)}, {"hits", json::array()}});
    groups.back()["hits"].push_back({{"slug", h.slug}, {"snippet", h.snippet}, {"score", h.score}});
  }
  return json{{"total", page.total}, {"page", page.page}, {"pages", page.pages}, {"groups", groups}}.dump(2) + "\n";
}

SearchIndex index_from_json(std::string_view alpha_ru, std::string_view alpha_bg, std::string_view combined) {
  SearchIndex idx;
  try {
    for (auto [text_, target] : {std::pair{alpha_ru, &idx.ru}, std::pair{alpha_bg, &idx.bg}}) {
      json js = json::parse(text_);
      target->language = language_from_string(js.at("language").get<std::string>());
      for (const auto& e : js.at("entries")) {
        auto pos = pos_from_string(e.at("pos").get<std::string>());
        if (!pos) throw std::runtime_error("index: bad part of speech");
        target->entries.push_back({e.at("lemma").get<std::string>(), *pos, e.at("slug").get<std::string>(),
                                   e.at("lexeme").get<std::string>()});
      }
    }
    json js = json::parse(combined);
    for (const auto& d : js.at("documents")) {
      auto rubric = hit_rubric_from_string(d.at("rubric").get<std::string>());
      auto kind_name = d.at("kind").get<std::string>();
      auto kind_it = std::find(kKindNames.begin(), kKindNames.end(), kind_name);
      if (!rubric || kind_it == kKindNames.end()) throw std::runtime_error("index: bad document rubric or kind");
      idx.documents.push_back({*rubric, static_cast<DocKind>(kind_it - kKindNames.begin()),
                               d.at("slug").get<std::string>(), d.at("text").get<std::string>(),
                               d.at("lemma").get<std::string>()});
    }
    for (const auto& r : js.at("routes"))
      idx.routes.push_back({r.at("lemma").get<std::string>(), language_from_string(r.at("language").get<std::string>()),
                            r.at("slug").get<std::string>(), r.at("rank").get<int>(), r.at("header").get<bool>()});
    const json& w = js.at("weights");
    idx.weights = {w.at("exact_lemma").get<int>(), w.at("header").get<int>(),   w.at("gloss").get<int>(),
                   w.at("citation").get<int>(),    w.at("other").get<int>(),    w.at("whole_word_bonus").get<int>()};
  } catch (const json::exception& e) {
    throw std::runtime_error(std::string("index: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error(std::string("index: ") + e.what());
  }
  return idx;
}

}  // namespace sedict
