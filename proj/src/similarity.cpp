#include "sedict/similarity.hpp"

#include <algorithm>
#include <stdexcept>

#include "json.hpp"

namespace sedict {

using nlohmann::json;

OrthographyTable default_orthography() {
  OrthographyTable t;
  t.fold = {{"ё", "е"}, {"э", "е"}, {"ѝ", "и"}};
  t.bg_variants = {{"ъ", {"ы", "о"}}, {"щ", {"щ", "шт", "ч"}}, {"я", {"я", "е"}}};
  t.ru_verb_endings = {"ировать", "овать", "евать", "ать", "ять", "ить", "еть", "уть", "ыть", "ть"};
  t.ru_reflexive = {"ся", "сь"};
  t.bg_verb_endings = {"ирам", "увам", "вам", "ам", "ям", "я", "а", "м"};
  t.bg_reflexive = {" се", " си"};
  return t;
}

OrthographyTable parse_orthography(std::string_view json_text) {
  json js;
  try {
    js = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("orthography: ") + e.what());
  }
  OrthographyTable t;
  try {
    t.fold = js.at("fold").get<std::map<std::string, std::string>>();
    t.bg_variants = js.at("bg_variants").get<std::map<std::string, std::vector<std::string>>>();
    t.ru_verb_endings = js.at("ru_verb_endings").get<std::vector<std::string>>();
    t.ru_reflexive = js.at("ru_reflexive").get<std::vector<std::string>>();
    t.bg_verb_endings = js.at("bg_verb_endings").get<std::vector<std::string>>();
    t.bg_reflexive = js.at("bg_reflexive").get<std::vector<std::string>>();
    t.max_variants = js.value("max_variants", std::size_t{64});
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("orthography: ") + e.what());
  }
  for (const auto& [from, to] : t.fold)
    if (text::length(from) != 1 || text::length(to) != 1)
      throw std::invalid_argument("orthography: fold entries map one letter to one letter");
  for (const auto& [from, to] : t.bg_variants)
    if (text::length(from) != 1 || to.empty())
      throw std::invalid_argument("orthography: bg_variants keys are single letters with readings");
  if (t.max_variants == 0) throw std::invalid_argument("orthography: max_variants must be positive");
  return t;
}

std::string orthography_to_json(const OrthographyTable& t) {
  json js{{"fold", t.fold},
          {"bg_variants", t.bg_variants},
          {"ru_verb_endings", t.ru_verb_endings},
          {"ru_reflexive", t.ru_reflexive},
          {"bg_verb_endings", t.bg_verb_endings},
          {"bg_reflexive", t.bg_reflexive},
          {"max_variants", t.max_variants}};
  return js.dump(2) + "\n";
}

std::size_t levenshtein(std::u32string_view a, std::u32string_view b) {
  std::vector<std::size_t> row(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) row[j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    std::size_t diag = row[0];
    row[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      std::size_t up = row[j];
      std::size_t cost = a[i - 1] == b[j - 1] ? 0 : 1;
      row[j] = std::min({row[j] + 1, row[j - 1] + 1, diag + cost});
      diag = up;
    }
  }
  return row[b.size()];
}

double normalized_distance(std::u32string_view a, std::u32string_view b) {
  std::size_t longest = std::max(a.size(), b.size());
  if (longest == 0) return 0.0;
  return static_cast<double>(levenshtein(a, b)) / static_cast<double>(longest);
}

namespace {

bool ends_with(const std::u32string& s, const std::u32string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

// Strips one reflexive marker and then the longest matching ending, keeping a stem of two letters.
std::u32string strip_verb(std::u32string s, const std::vector<std::string>& reflexive,
                          const std::vector<std::string>& endings) {
  for (const auto& r : reflexive) {
    auto suffix = text::decode(r);
    if (ends_with(s, suffix) && s.size() > suffix.size() + 2) {
      s.resize(s.size() - suffix.size());
      break;
    }
  }
  std::u32string best;
  for (const auto& e : endings) {
    auto suffix = text::decode(e);
    if (ends_with(s, suffix) && s.size() >= suffix.size() + 2 && suffix.size() > best.size()) best = suffix;
  }
  s.resize(s.size() - best.size());
  return s;
}

std::u32string folded(std::string_view lemma, const OrthographyTable& t) {
  std::u32string out;
  for (char32_t c : text::decode(lemma)) {
    c = text::to_lower(c);
    auto it = t.fold.find(text::encode(std::u32string(1, c)));
    if (it != t.fold.end()) c = text::decode(it->second).front();
    out.push_back(c);
  }
  return out;
}

std::vector<std::u32string> expand_variants(const std::u32string& s, const OrthographyTable& t) {
  std::vector<std::u32string> acc{U""};
  for (char32_t c : s) {
    auto it = t.bg_variants.find(text::encode(std::u32string(1, c)));
    if (it == t.bg_variants.end()) {
      for (auto& a : acc) a.push_back(c);
      continue;
    }
    std::vector<std::u32string> next;
    for (const auto& a : acc) {
      for (const auto& v : it->second) {
        if (next.size() >= t.max_variants) break;
        next.push_back(a + text::decode(v));
      }
    }
    acc = std::move(next);
  }
  return acc;
}

}  // namespace

double form_distance(const Lexeme& a, const Lexeme& b, const OrthographyTable& t) {
  const Lexeme& ru = a.language == Language::ru ? a : b;
  const Lexeme& bg = a.language == Language::ru ? b : a;
  std::u32string r = folded(ru.lemma, t);
  std::u32string g = folded(bg.lemma, t);
  if (ru.language != bg.language && ru.pos == PartOfSpeech::verb && bg.pos == PartOfSpeech::verb) {
    r = strip_verb(r, t.ru_reflexive, t.ru_verb_endings);
    g = strip_verb(g, t.bg_reflexive, t.bg_verb_endings);
  }
  if (ru.language == bg.language) return normalized_distance(r, g);
  double best = 1.0;
  for (const auto& v : expand_variants(g, t)) best = std::min(best, normalized_distance(r, v));
  return best;
}

bool form_similar(const Lexeme& a, const Lexeme& b, const OrthographyTable& t, double threshold) {
  return form_distance(a, b, t) <= threshold + kSimilarityEpsilon;
}

}  // namespace sedict
