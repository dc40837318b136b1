#include "sedict/lexicon.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <utility>

#include "json.hpp"

namespace sedict {

using nlohmann::json;

// ---- enum names -------------------------------------------------------------

namespace {

template <typename E, std::size_t N>
using NameTable = std::array<std::pair<E, std::string_view>, N>;

template <typename E, std::size_t N>
std::string_view name_of(const NameTable<E, N>& table, E value) {
  for (const auto& [e, name] : table)
    if (e == value) return name;
  return "?";
}

template <typename E, std::size_t N>
std::optional<E> value_of(const NameTable<E, N>& table, std::string_view name) {
  for (const auto& [e, n] : table)
    if (n == name) return e;
  return std::nullopt;
}

constexpr NameTable<SignType, 7> kSignTypeNames{{
    {SignType::SynchronousHomogeneous, "SynchronousHomogeneous"},
    {SignType::SynchronousHeterogeneous, "SynchronousHeterogeneous"},
    {SignType::Asynchronous, "Asynchronous"},
    {SignType::Disjunctive, "Disjunctive"},
    {SignType::Diffuse, "Diffuse"},
    {SignType::False, "False"},
    {SignType::Empty, "Empty"},
}};

constexpr NameTable<Direction, 3> kDirectionNames{{
    {Direction::none, "none"},
    {Direction::left_to_right, "left_to_right"},
    {Direction::right_to_left, "right_to_left"},
}};

constexpr NameTable<PartOfSpeech, 4> kPosNames{{
    {PartOfSpeech::verb, "verb"},
    {PartOfSpeech::noun, "noun"},
    {PartOfSpeech::adjective, "adjective"},
    {PartOfSpeech::adverb, "adverb"},
}};

constexpr NameTable<Register, 6> kRegisterNames{{
    {Register::neutral, "neutral"},
    {Register::colloquial, "colloquial"},
    {Register::dated, "dated"},
    {Register::disapproving, "disapproving"},
    {Register::prostorechie, "prostorechie"},
    {Register::slang, "slang"},
}};

constexpr NameTable<TedTop, 10> kTedNames{{
    {TedTop::liquidating, "liquidating"},
    {TedTop::deforming, "deforming"},
    {TedTop::annexing, "annexing"},
    {TedTop::disorienting, "disorienting"},
    {TedTop::demeaning, "demeaning"},
    {TedTop::blocking, "blocking"},
    {TedTop::interference, "interference"},
    {TedTop::provoking, "provoking"},
    {TedTop::regulating, "regulating"},
    {TedTop::expansive_behavior, "expansive_behavior"},
}};

constexpr NameTable<TedTop, 10> kTedLabels{{
    {TedTop::liquidating, "ликвидирующие действия"},
    {TedTop::deforming, "деформирующие действия"},
    {TedTop::annexing, "аннексирующие действия"},
    {TedTop::disorienting, "дезориентирующие действия"},
    {TedTop::demeaning, "принижающие действия"},
    {TedTop::blocking, "блокирующие действия"},
    {TedTop::interference, "действия вмешательства"},
    {TedTop::provoking, "провоцирующие действия"},
    {TedTop::regulating, "регулирующие действия"},
    {TedTop::expansive_behavior, "экспансивное поведение"},
}};

constexpr NameTable<Rubric, 5> kRubricNames{{
    {Rubric::ass, "АСС"},
    {Rubric::morf, "МОРФ"},
    {Rubric::fr, "ФР"},
    {Rubric::sin, "СИН"},
    {Rubric::pz, "ПЗ"},
}};

constexpr NameTable<CorpusSource, 3> kSourceNames{{
    {CorpusSource::nkrya, "НКРЯ"},
    {CorpusSource::bnk, "БНК"},
    {CorpusSource::other, "other"},
}};

constexpr NameTable<Equivalence, 4> kEquivalenceNames{{
    {Equivalence::full, "full"},
    {Equivalence::ad_hoc, "ad_hoc"},
    {Equivalence::approximate, "approximate"},
    {Equivalence::none, "none"},
}};

constexpr NameTable<Aspect, 3> kAspectNames{{
    {Aspect::imperfective, "imperfective"},
    {Aspect::perfective, "perfective"},
    {Aspect::biaspectual, "biaspectual"},
}};

constexpr NameTable<Borrowing, 3> kBorrowingNames{{
    {Borrowing::from_ru, "ru"},
    {Borrowing::from_bg, "bg"},
    {Borrowing::third, "third"},
}};

}  // namespace

std::string_view to_string(SignType t) { return name_of(kSignTypeNames, t); }
std::optional<SignType> sign_type_from_string(std::string_view s) { return value_of(kSignTypeNames, s); }
std::string_view to_string(Direction d) { return name_of(kDirectionNames, d); }
std::optional<Direction> direction_from_string(std::string_view s) { return value_of(kDirectionNames, s); }
std::string_view to_string(PartOfSpeech p) { return name_of(kPosNames, p); }
std::string_view to_string(Register r) { return name_of(kRegisterNames, r); }
std::string_view to_string(TedTop t) { return name_of(kTedNames, t); }
std::string_view to_string(Rubric r) { return name_of(kRubricNames, r); }
std::string_view to_string(CorpusSource s) { return name_of(kSourceNames, s); }
std::string_view to_string(Equivalence e) { return name_of(kEquivalenceNames, e); }
std::string_view to_string(Aspect a) { return name_of(kAspectNames, a); }
std::string_view to_string(Borrowing b) { return name_of(kBorrowingNames, b); }
std::string_view ted_label(TedTop t) { return name_of(kTedLabels, t); }
std::optional<PartOfSpeech> pos_from_string(std::string_view s) { return value_of(kPosNames, s); }
std::optional<Register> register_from_string(std::string_view s) { return value_of(kRegisterNames, s); }
std::optional<TedTop> ted_from_string(std::string_view s) { return value_of(kTedNames, s); }
std::optional<Rubric> rubric_from_string(std::string_view s) { return value_of(kRubricNames, s); }
std::optional<CorpusSource> source_from_string(std::string_view s) { return value_of(kSourceNames, s); }
std::optional<Equivalence> equivalence_from_string(std::string_view s) {
  return value_of(kEquivalenceNames, s);
}
std::optional<Aspect> aspect_from_string(std::string_view s) { return value_of(kAspectNames, s); }
std::optional<Borrowing> borrowing_from_string(std::string_view s) { return value_of(kBorrowingNames, s); }

std::string ted_display(const TedType& t) {
  std::string out(ted_label(t.top));
  if (t.subtype) out += " (" + *t.subtype + ")";
  return out;
}

std::string_view to_string(Severity s) {
  switch (s) {
    case Severity::error: return "error";
    case Severity::warning: return "warning";
    case Severity::info: return "info";
  }
  return "?";
}

std::string format(const Diagnostic& d) {
  std::string out(to_string(d.severity));
  out += ' ';
  out += d.code;
  out += " [";
  out += d.subject;
  out += "] ";
  out += d.message;
  return out;
}

std::string ResultIndex::display() const {
  if (ru_label.empty()) return bg_label;
  if (bg_label.empty() || bg_label == ru_label) return ru_label;
  return ru_label + "/" + bg_label;
}

bool Lexeme::has_register(Register r) const {
  return std::find(registers.begin(), registers.end(), r) != registers.end();
}

// ---- model lookups ----------------------------------------------------------

void LexiconModel::reindex() {
  lexeme_index_.clear();
  sense_index_.clear();
  pair_index_.clear();
  senses_by_lexeme_.clear();
  pairs_by_sense_.clear();
  for (std::size_t i = 0; i < lexemes.size(); ++i) lexeme_index_.emplace(lexemes[i].id, i);
  for (std::size_t i = 0; i < senses.size(); ++i) {
    sense_index_.emplace(senses[i].id, i);
    senses_by_lexeme_[senses[i].lexeme].push_back(i);
  }
  for (auto& [lex, idx] : senses_by_lexeme_) {
    std::stable_sort(idx.begin(), idx.end(),
                     [&](std::size_t a, std::size_t b) { return senses[a].rank < senses[b].rank; });
  }
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    pair_index_.emplace(pairs[i].id, i);
    pairs_by_sense_[pairs[i].left].push_back(i);
    if (pairs[i].right && *pairs[i].right != pairs[i].left) pairs_by_sense_[*pairs[i].right].push_back(i);
  }
}

const Lexeme* LexiconModel::find_lexeme(std::string_view id) const {
  auto it = lexeme_index_.find(id);
  return it == lexeme_index_.end() ? nullptr : &lexemes[it->second];
}

const Sense* LexiconModel::find_sense(std::string_view id) const {
  auto it = sense_index_.find(id);
  return it == sense_index_.end() ? nullptr : &senses[it->second];
}

const DeclaredPair* LexiconModel::find_pair(std::string_view id) const {
  auto it = pair_index_.find(id);
  return it == pair_index_.end() ? nullptr : &pairs[it->second];
}

const Lexeme& LexiconModel::lexeme_of(const Sense& s) const {
  const Lexeme* lex = find_lexeme(s.lexeme);
  if (!lex) throw std::out_of_range("sense " + s.id + " refers to unknown lexeme " + s.lexeme);
  return *lex;
}

std::vector<const Sense*> LexiconModel::senses_of(const Lexeme& lex) const {
  std::vector<const Sense*> out;
  auto it = senses_by_lexeme_.find(lex.id);
  if (it == senses_by_lexeme_.end()) return out;
  for (std::size_t i : it->second) out.push_back(&senses[i]);
  return out;
}

const DeclaredPair* LexiconModel::pair_between(std::string_view a, std::string_view b) const {
  auto it = pairs_by_sense_.find(a);
  if (it == pairs_by_sense_.end()) return nullptr;
  for (std::size_t i : it->second) {
    const auto& p = pairs[i];
    if (!p.right) continue;
    if ((p.left == a && *p.right == b) || (p.left == b && *p.right == a)) return &p;
  }
  return nullptr;
}

std::vector<const DeclaredPair*> LexiconModel::pairs_of(std::string_view sense_id) const {
  std::vector<const DeclaredPair*> out;
  auto it = pairs_by_sense_.find(sense_id);
  if (it == pairs_by_sense_.end()) return out;
  for (std::size_t i : it->second) out.push_back(&pairs[i]);
  return out;
}

bool LexiconModel::has_ted_sense(const Lexeme& lex) const {
  for (const Sense* s : senses_of(lex))
    if (s->ted) return true;
  return false;
}

// ---- loading ----------------------------------------------------------------

namespace {

// Schema violations are reported through this exception while parsing one document.
struct SchemaError {
  std::string message;
};

const json& require(const json& obj, const char* key, json::value_t kind, const char* what) {
  if (!obj.is_object() || !obj.contains(key)) throw SchemaError{std::string(what) + ": missing field '" + key + "'"};
  const json& v = obj.at(key);
  bool ok = v.type() == kind || (kind == json::value_t::number_integer && v.is_number_integer());
  if (!ok) throw SchemaError{std::string(what) + ": field '" + key + "' has the wrong kind"};
  return v;
}

std::string require_string(const json& obj, const char* key, const char* what) {
  return require(obj, key, json::value_t::string, what).get<std::string>();
}

std::optional<std::string> optional_string(const json& obj, const char* key, const char* what) {
  if (!obj.contains(key) || obj.at(key).is_null()) return std::nullopt;
  if (!obj.at(key).is_string()) throw SchemaError{std::string(what) + ": field '" + key + "' must be a string"};
  return obj.at(key).get<std::string>();
}

bool optional_bool(const json& obj, const char* key, bool fallback, const char* what) {
  if (!obj.contains(key) || obj.at(key).is_null()) return fallback;
  if (!obj.at(key).is_boolean()) throw SchemaError{std::string(what) + ": field '" + key + "' must be a boolean"};
  return obj.at(key).get<bool>();
}

std::vector<std::string> string_list(const json& obj, const char* key, const char* what) {
  const json& arr = require(obj, key, json::value_t::array, what);
  std::vector<std::string> out;
  for (const auto& v : arr) {
    if (!v.is_string()) throw SchemaError{std::string(what) + ": '" + key + "' must contain strings"};
    out.push_back(v.get<std::string>());
  }
  return out;
}

template <typename T, typename F>
T parse_enum(const std::string& s, F from_string, const char* field, const std::string& what) {
  auto v = from_string(s);
  if (!v) throw SchemaError{what + ": unknown " + field + " '" + s + "'"};
  return *v;
}

Sense parse_sense(const json& js, const std::string& lexeme_id) {
  const std::string what = "sense in " + lexeme_id;
  Sense s;
  s.id = require_string(js, "id", what.c_str());
  s.lexeme = lexeme_id;
  s.rank = require(js, "rank", json::value_t::number_integer, what.c_str()).get<int>();
  s.gloss_ru = require_string(js, "gloss_ru", what.c_str());
  s.gloss_bg = require_string(js, "gloss_bg", what.c_str());
  if (js.contains("ted") && !js.at("ted").is_null()) {
    const json& t = require(js, "ted", json::value_t::object, what.c_str());
    TedType ted;
    ted.top = parse_enum<TedTop>(require_string(t, "top", what.c_str()), ted_from_string, "TED type", what);
    ted.subtype = optional_string(t, "subtype", what.c_str());
    s.ted = ted;
  }
  if (js.contains("ir") && !js.at("ir").is_null()) {
    const json& r = require(js, "ir", json::value_t::object, what.c_str());
    ResultIndex ir;
    ir.ru_label = optional_string(r, "ru", what.c_str()).value_or("");
    ir.bg_label = optional_string(r, "bg", what.c_str()).value_or("");
    s.ir = ir;
  }
  if (js.contains("aspect") && !js.at("aspect").is_null()) {
    const json& a = js.at("aspect");
    if (a.is_string()) {
      s.aspect = parse_enum<Aspect>(a.get<std::string>(), aspect_from_string, "aspect", what);
    } else if (a.is_object()) {
      s.aspect = parse_enum<Aspect>(require_string(a, "kind", what.c_str()), aspect_from_string, "aspect", what);
      s.aspect_partner = optional_string(a, "partner", what.c_str());
    } else {
      throw SchemaError{what + ": field 'aspect' has the wrong kind"};
    }
  }
  for (const auto& c : require(js, "citations", json::value_t::array, what.c_str())) {
    CorpusCitation cit;
    cit.text = require_string(c, "text", what.c_str());
    cit.annotation = optional_string(c, "annotation", what.c_str());
    cit.source =
        parse_enum<CorpusSource>(require_string(c, "source", what.c_str()), source_from_string, "source", what);
    cit.url = optional_string(c, "url", what.c_str());
    s.citations.push_back(std::move(cit));
  }
  s.idioms = string_list(js, "idioms", what.c_str());
  s.synonyms = string_list(js, "synonyms", what.c_str());
  s.scheme_neutral = optional_bool(js, "scheme_neutral", !s.ted.has_value(), what.c_str());
  return s;
}

void parse_lexeme_document(const json& js, LexiconModel& model) {
  Lexeme lex;
  lex.id = require_string(js, "id", "lexeme");
  const std::string what = "lexeme " + lex.id;
  lex.lemma = require_string(js, "lemma", what.c_str());
  std::string lang = require_string(js, "language", what.c_str());
  if (lang != "ru" && lang != "bg") throw SchemaError{what + ": language must be \"ru\" or \"bg\""};
  lex.language = language_from_string(lang);
  lex.pos = parse_enum<PartOfSpeech>(require_string(js, "pos", what.c_str()), pos_from_string, "pos", what);
  for (const auto& r : string_list(js, "register", what.c_str()))
    lex.registers.push_back(parse_enum<Register>(r, register_from_string, "register", what));
  std::sort(lex.registers.begin(), lex.registers.end());
  lex.registers.erase(std::unique(lex.registers.begin(), lex.registers.end()), lex.registers.end());
  lex.etymon = optional_string(js, "etymon", what.c_str());
  if (auto b = optional_string(js, "borrowed_from", what.c_str()))
    lex.borrowed_from = parse_enum<Borrowing>(*b, borrowing_from_string, "borrowed_from", what);
  lex.reflex_transparent = optional_bool(js, "reflex_transparent", false, what.c_str());
  lex.pre_registered = optional_bool(js, "pre_registered", false, what.c_str());

  std::vector<Sense> senses;
  for (const auto& sj : require(js, "senses", json::value_t::array, what.c_str()))
    senses.push_back(parse_sense(sj, lex.id));
  std::stable_sort(senses.begin(), senses.end(), [](const Sense& a, const Sense& b) { return a.rank < b.rank; });

  model.lexemes.push_back(std::move(lex));
  for (auto& s : senses) model.senses.push_back(std::move(s));
}

DeclaredPair parse_pair(const json& js) {
  DeclaredPair p;
  p.id = require_string(js, "id", "pair");
  const std::string what = "pair " + p.id;
  p.left = require_string(js, "left", what.c_str());
  p.right = optional_string(js, "right", what.c_str());
  if (js.contains("descriptive") && !js.at("descriptive").is_null()) {
    const json& d = require(js, "descriptive", json::value_t::object, what.c_str());
    DescriptiveEquivalent de;
    std::string lang = require_string(d, "language", what.c_str());
    if (lang != "ru" && lang != "bg") throw SchemaError{what + ": descriptive language must be \"ru\" or \"bg\""};
    de.language = language_from_string(lang);
    de.text = require_string(d, "text", what.c_str());
    de.is_definition_like = optional_bool(d, "is_definition_like", false, what.c_str());
    p.descriptive = std::move(de);
  }
  p.equivalence = parse_enum<Equivalence>(require_string(js, "equivalence", what.c_str()), equivalence_from_string,
                                          "equivalence", what);
  if (auto u = optional_string(js, "unique", what.c_str())) {
    if (*u != "ru" && *u != "bg") throw SchemaError{what + ": unique must be \"ru\" or \"bg\""};
    p.unique = language_from_string(*u);
  }
  if (auto d = optional_string(js, "declared", what.c_str()))
    p.declared = parse_enum<SignType>(*d, sign_type_from_string, "sign type", what);
  if (auto d = optional_string(js, "direction", what.c_str()))
    p.direction = parse_enum<Direction>(*d, direction_from_string, "direction", what);
  p.basis = optional_string(js, "basis", what.c_str());
  p.host = optional_string(js, "host", what.c_str());
  return p;
}

}  // namespace

LoadResult load_lexicon(const DocumentSet& documents) {
  LoadResult result;
  LexiconModel& model = result.model;

  for (const auto& [name, content] : documents) {
    if (name == "orthography.json") continue;
    json js;
    try {
      js = json::parse(content);
    } catch (const json::parse_error& e) {
      result.diagnostics.push_back(error("schema", name, std::string("invalid JSON: ") + e.what()));
      continue;
    }
    try {
      if (name == "pairs.json") {
        const json& arr = require(js, "pairs", json::value_t::array, "pairs.json");
        for (const auto& pj : arr) model.pairs.push_back(parse_pair(pj));
      } else if (name == "links.json") {
        if (!js.is_object()) throw SchemaError{"links.json: expected an object"};
        for (const auto& [lexeme, rubrics] : js.items()) {
          if (!rubrics.is_object()) throw SchemaError{"links.json: entry '" + lexeme + "' must be an object"};
          for (const auto& [rubric, value] : rubrics.items()) {
            auto r = rubric_from_string(rubric);
            if (!r) throw SchemaError{"links.json: unknown rubric '" + rubric + "'"};
            if (!value.is_string()) throw SchemaError{"links.json: value of " + lexeme + "/" + rubric + " must be a string"};
            model.links[lexeme][*r] = value.get<std::string>();
          }
        }
      } else {
        parse_lexeme_document(js, model);
      }
    } catch (const SchemaError& e) {
      result.diagnostics.push_back(error("schema", name, e.message));
    }
  }

  std::stable_sort(model.lexemes.begin(), model.lexemes.end(),
                   [](const Lexeme& a, const Lexeme& b) { return a.id < b.id; });
  std::stable_sort(model.senses.begin(), model.senses.end(), [](const Sense& a, const Sense& b) {
    return std::tie(a.lexeme, a.rank, a.id) < std::tie(b.lexeme, b.rank, b.id);
  });
  model.reindex();

  auto more = validate(model);
  result.diagnostics.insert(result.diagnostics.end(), more.begin(), more.end());
  return result;
}

DocumentSet read_documents(const std::filesystem::path& dir) {
  namespace fs = std::filesystem;
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) throw IoError("lexicon directory not found: " + dir.string());
  DocumentSet docs;
  for (const auto& entry : fs::directory_iterator(dir, ec)) {
    if (!entry.is_regular_file() || entry.path().extension() != ".json") continue;
    std::ifstream in(entry.path(), std::ios::binary);
    if (!in) throw IoError("cannot read " + entry.path().string());
    std::ostringstream ss;
    ss << in.rdbuf();
    docs.emplace(entry.path().filename().string(), ss.str());
  }
  if (ec) throw IoError("cannot list " + dir.string() + ": " + ec.message());
  return docs;
}

LoadResult load_lexicon_dir(const std::filesystem::path& dir) { return load_lexicon(read_documents(dir)); }

// ---- emission ---------------------------------------------------------------

namespace {

json sense_to_json(const Sense& s) {
  json js;
  js["id"] = s.id;
  js["rank"] = s.rank;
  js["gloss_ru"] = s.gloss_ru;
  js["gloss_bg"] = s.gloss_bg;
  if (s.ted) {
    json t{{"top", to_string(s.ted->top)}};
    if (s.ted->subtype) t["subtype"] = *s.ted->subtype;
    js["ted"] = t;
  }
  if (s.ir) js["ir"] = {{"ru", s.ir->ru_label}, {"bg", s.ir->bg_label}};
  if (s.aspect) {
    if (s.aspect_partner)
      js["aspect"] = {{"kind", to_string(*s.aspect)}, {"partner", *s.aspect_partner}};
    else
      js["aspect"] = to_string(*s.aspect);
  }
  js["citations"] = json::array();
  for (const auto& c : s.citations) {
    json cj{{"text", c.text}, {"source", to_string(c.source)}};
    if (c.annotation) cj["annotation"] = *c.annotation;
    if (c.url) cj["url"] = *c.url;
    js["citations"].push_back(cj);
  }
  js["idioms"] = s.idioms;
  js["synonyms"] = s.synonyms;
  js["scheme_neutral"] = s.scheme_neutral;
  return js;
}

}  // namespace

DocumentSet emit_lexicon(const LexiconModel& model) {
  DocumentSet docs;
  for (const auto& lex : model.lexemes) {
    json js;
    js["id"] = lex.id;
    js["lemma"] = lex.lemma;
    js["language"] = to_string(lex.language);
    js["pos"] = to_string(lex.pos);
    js["register"] = json::array();
    for (auto r : lex.registers) js["register"].push_back(to_string(r));
    if (lex.etymon) js["etymon"] = *lex.etymon;
    if (lex.borrowed_from) js["borrowed_from"] = to_string(*lex.borrowed_from);
    js["reflex_transparent"] = lex.reflex_transparent;
    js["pre_registered"] = lex.pre_registered;
    js["senses"] = json::array();
    for (const auto& s : model.senses)
      if (s.lexeme == lex.id) js["senses"].push_back(sense_to_json(s));
    docs.emplace(lex.id + ".json", js.dump(2) + "\n");
  }

  json pairs = json::array();
  for (const auto& p : model.pairs) {
    json pj{{"id", p.id}, {"left", p.left}, {"equivalence", to_string(p.equivalence)}};
    if (p.right) pj["right"] = *p.right;
    if (p.descriptive)
      pj["descriptive"] = {{"language", to_string(p.descriptive->language)},
                           {"text", p.descriptive->text},
                           {"is_definition_like", p.descriptive->is_definition_like}};
    if (p.unique) pj["unique"] = to_string(*p.unique);
    if (p.declared) pj["declared"] = to_string(*p.declared);
    if (p.direction) pj["direction"] = to_string(*p.direction);
    if (p.basis) pj["basis"] = *p.basis;
    if (p.host) pj["host"] = *p.host;
    pairs.push_back(pj);
  }
  docs.emplace("pairs.json", json{{"pairs", pairs}}.dump(2) + "\n");

  json links = json::object();
  for (const auto& [lexeme, rubrics] : model.links)
    for (const auto& [rubric, value] : rubrics) links[lexeme][std::string(to_string(rubric))] = value;
  docs.emplace("links.json", links.dump(2) + "\n");
  return docs;
}

// ---- validation -------------------------------------------------------------

Diagnostics validate(const LexiconModel& model) {
  Diagnostics out;

  std::set<std::string> seen;
  for (const auto& lex : model.lexemes) {
    if (!seen.insert("lexeme:" + lex.id).second)
      out.push_back(error("duplicate-id", lex.id, "lexeme id declared more than once"));
    if (lex.lemma.empty()) out.push_back(error("empty-lemma", lex.id, "lemma is empty"));

    auto senses = model.senses_of(lex);
    if (senses.empty()) out.push_back(error("no-senses", lex.id, "lexeme has no senses"));
    std::set<int> ranks;
    for (const Sense* s : senses) {
      if (s->rank < 1) out.push_back(error("rank-invalid", s->id, "rank must be a positive integer"));
      if (!ranks.insert(s->rank).second)
        out.push_back(error("duplicate-rank", s->id, "rank " + std::to_string(s->rank) + " repeated in " + lex.id));
    }
    int expected = 1;
    for (int r : ranks) {
      if (r < 1) continue;
      if (r != expected) {
        out.push_back(error("rank-gap", lex.id, "sense ranks skip from " + std::to_string(expected - 1) + " to " +
                                                    std::to_string(r)));
        break;
      }
      ++expected;
    }
  }

  for (const auto& s : model.senses) {
    if (!seen.insert("sense:" + s.id).second)
      out.push_back(error("duplicate-id", s.id, "sense id declared more than once"));
    if (!model.find_lexeme(s.lexeme))
      out.push_back(error("dangling-lexeme", s.id, "sense refers to unknown lexeme " + s.lexeme));
    if (s.scheme_neutral == s.ted.has_value())
      out.push_back(error("neutral-ted-mismatch", s.id,
                          s.scheme_neutral ? "scheme-neutral sense carries a TED type"
                                           : "sense is not scheme-neutral but has no TED type"));
    if (s.ir && !s.ted) out.push_back(error("ir-without-ted", s.id, "result index present without a TED type"));
    if (s.ted && s.ted->subtype && s.ted->subtype->empty())
      out.push_back(error("empty-ted-subtype", s.id, "TED subtype is present but empty"));
    if (s.ir && s.ir->ru_label.empty() && s.ir->bg_label.empty())
      out.push_back(error("empty-ir", s.id, "result index has no label"));
    for (const auto& c : s.citations)
      if (c.text.empty()) out.push_back(error("empty-citation", s.id, "corpus citation text is empty"));
    if (s.aspect_partner && !model.find_sense(*s.aspect_partner))
      out.push_back(error("dangling-aspect-partner", s.id, "aspect partner " + *s.aspect_partner + " not found"));
  }

  for (const auto& p : model.pairs) {
    if (!seen.insert("pair:" + p.id).second)
      out.push_back(error("duplicate-id", p.id, "pair id declared more than once"));
    const Sense* left = model.find_sense(p.left);
    if (!left) out.push_back(error("dangling-sense", p.id, "left sense " + p.left + " not found"));
    if (p.right.has_value() == p.descriptive.has_value()) {
      out.push_back(error("pair-shape", p.id, "a pair needs exactly one of 'right' or 'descriptive'"));
      continue;
    }
    const Lexeme* left_lex = left ? model.find_lexeme(left->lexeme) : nullptr;
    if (p.right) {
      const Sense* right = model.find_sense(*p.right);
      if (!right) {
        out.push_back(error("dangling-sense", p.id, "right sense " + *p.right + " not found"));
      } else if (left_lex) {
        const Lexeme* right_lex = model.find_lexeme(right->lexeme);
        if (right_lex && right_lex->language == left_lex->language)
          out.push_back(error("same-language-pair", p.id,
                              "same-language pair: " + left_lex->lemma + " and " + right_lex->lemma + " are both " +
                                  std::string(to_string(left_lex->language))));
      }
    } else {
      const auto& d = *p.descriptive;
      if (left_lex && d.language == left_lex->language)
        out.push_back(error("same-language-pair", p.id, "descriptive equivalent is in the same language"));
      if (d.text.empty() || (!text::contains_space(d.text) && !d.is_definition_like))
        out.push_back(error("descriptive-form", p.id, "descriptive equivalent must be multi-word or definition-like"));
      if (p.declared && *p.declared != SignType::Diffuse)
        out.push_back(error("declared-mismatch", p.id, "a pair with a descriptive side can only be Diffuse"));
    }
    if (p.declared && is_warning(*p.declared) && p.equivalence != Equivalence::none)
      out.push_back(error("declared-equivalent", p.id,
                          std::string(to_string(*p.declared)) + " pair is declared with equivalent glosses"));
    if (p.equivalence == Equivalence::approximate && !p.unique)
      out.push_back(error("missing-unique", p.id, "approximate pair does not name its unique member"));
    if (p.unique && left_lex && p.right) {
      const Sense* right = model.find_sense(*p.right);
      const Lexeme* right_lex = right ? model.find_lexeme(right->lexeme) : nullptr;
      if (right_lex && *p.unique != left_lex->language && *p.unique != right_lex->language)
        out.push_back(error("bad-unique", p.id, "unique side is not a member of the pair"));
    }
    if (p.host && !model.find_lexeme(*p.host))
      out.push_back(error("dangling-host", p.id, "host lexeme " + *p.host + " not found"));
  }

  for (const auto& [lexeme, rubrics] : model.links)
    if (!model.find_lexeme(lexeme))
      out.push_back(error("dangling-link", lexeme, "links.json refers to unknown lexeme"));

  return out;
}

}  // namespace sedict
