#pragma once

#include <array>
#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sedict/diagnostics.hpp"
#include "sedict/sign_types.hpp"
#include "sedict/text.hpp"

namespace sedict {

enum class PartOfSpeech { verb, noun, adjective, adverb };
enum class Register { neutral, colloquial, dated, disapproving, prostorechie, slang };
enum class Borrowing { from_ru, from_bg, third };

// The ten top-level types of expansive action.
enum class TedTop {
  liquidating,
  deforming,
  annexing,
  disorienting,
  demeaning,
  blocking,
  interference,
  provoking,
  regulating,
  expansive_behavior,
};

struct TedType {
  TedTop top = TedTop::liquidating;
  std::optional<std::string> subtype;

  bool operator==(const TedType&) const = default;
};

struct ResultIndex {
  std::string ru_label;
  std::string bg_label;

  // "обманут/излъган", or the single label when the other is empty or identical.
  std::string display() const;
  bool operator==(const ResultIndex&) const = default;
};

enum class CorpusSource { nkrya, bnk, other };

struct CorpusCitation {
  std::string text;
  std::optional<std::string> annotation;
  CorpusSource source = CorpusSource::other;
  std::optional<std::string> url;

  bool operator==(const CorpusCitation&) const = default;
};

enum class Aspect { imperfective, perfective, biaspectual };

struct Lexeme {
  std::string id;
  std::string lemma;
  Language language = Language::ru;
  PartOfSpeech pos = PartOfSpeech::verb;
  std::vector<Register> registers;  // sorted, unique
  std::optional<std::string> etymon;
  std::optional<Borrowing> borrowed_from;
  bool reflex_transparent = false;
  bool pre_registered = false;

  bool has_register(Register r) const;
  bool operator==(const Lexeme&) const = default;
};

struct Sense {
  std::string id;
  std::string lexeme;  // Lexeme id
  int rank = 1;
  std::string gloss_ru;
  std::string gloss_bg;
  std::optional<TedType> ted;
  std::optional<ResultIndex> ir;
  std::optional<Aspect> aspect;
  std::optional<std::string> aspect_partner;  // Sense id
  std::vector<CorpusCitation> citations;
  std::vector<std::string> idioms;
  std::vector<std::string> synonyms;
  bool scheme_neutral = false;

  bool operator==(const Sense&) const = default;
};

struct DescriptiveEquivalent {
  Language language = Language::ru;
  std::string text;
  bool is_definition_like = false;

  bool operator==(const DescriptiveEquivalent&) const = default;
};

// Editorial judgement on how the glosses of a declared pair relate.
enum class Equivalence {
  full,         // same meaning
  ad_hoc,       // equivalent only for this pairing of primary/secondary senses
  approximate,  // one member of an open set approximating a unique word
  none,
};

struct DeclaredPair {
  std::string id;
  std::string left;                               // Sense id
  std::optional<std::string> right;               // Sense id, or
  std::optional<DescriptiveEquivalent> descriptive;  // a multi-word equivalent
  Equivalence equivalence = Equivalence::none;
  std::optional<Language> unique;  // side of the unique member (disjunctive signs)
  std::optional<SignType> declared;
  std::optional<Direction> direction;
  std::optional<std::string> basis;  // e.g. "etymological_reflex", "prefix_analogy"
  std::optional<std::string> host;   // Lexeme id whose page shows this warning sign

  bool operator==(const DeclaredPair&) const = default;
};

enum class Rubric { ass, morf, fr, sin, pz };
inline constexpr std::array<Rubric, 5> kAllRubrics = {Rubric::ass, Rubric::morf, Rubric::fr, Rubric::sin,
                                                      Rubric::pz};

// lexeme id -> rubric -> URL or payload text
using ExternalLinks = std::map<std::string, std::map<Rubric, std::string>>;

class LexiconModel {
 public:
  std::vector<Lexeme> lexemes;
  std::vector<Sense> senses;
  std::vector<DeclaredPair> pairs;
  ExternalLinks links;

  // Rebuilds the id lookups; call after mutating the vectors.
  void reindex();

  const Lexeme* find_lexeme(std::string_view id) const;
  const Sense* find_sense(std::string_view id) const;
  const DeclaredPair* find_pair(std::string_view id) const;
  const Lexeme& lexeme_of(const Sense& s) const;  // throws std::out_of_range
  // Senses of a lexeme ordered by rank.
  std::vector<const Sense*> senses_of(const Lexeme& lex) const;
  // Declared pair connecting two senses in either orientation.
  const DeclaredPair* pair_between(std::string_view sense_a, std::string_view sense_b) const;
  std::vector<const DeclaredPair*> pairs_of(std::string_view sense_id) const;
  bool has_ted_sense(const Lexeme& lex) const;

  bool operator==(const LexiconModel& o) const {
    return lexemes == o.lexemes && senses == o.senses && pairs == o.pairs && links == o.links;
  }

 private:
  std::map<std::string, std::size_t, std::less<>> lexeme_index_;
  std::map<std::string, std::size_t, std::less<>> sense_index_;
  std::map<std::string, std::size_t, std::less<>> pair_index_;
  std::map<std::string, std::vector<std::size_t>, std::less<>> senses_by_lexeme_;
  std::map<std::string, std::vector<std::size_t>, std::less<>> pairs_by_sense_;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Source documents keyed by file name; "pairs.json" and "links.json" are reserved,
// "orthography.json" is ignored here, every other *.json is one lexeme.
using DocumentSet = std::map<std::string, std::string>;

struct LoadResult {
  LexiconModel model;
  Diagnostics diagnostics;

  bool ok() const { return diagnostics.empty(); }
};

LoadResult load_lexicon(const DocumentSet& documents);
// Reads every *.json in `dir`. Throws IoError when the directory or a file cannot be read.
LoadResult load_lexicon_dir(const std::filesystem::path& dir);
DocumentSet read_documents(const std::filesystem::path& dir);

// Inverse of load_lexicon: one document per lexeme plus pairs.json and links.json.
DocumentSet emit_lexicon(const LexiconModel& model);

Diagnostics validate(const LexiconModel& model);

std::string_view to_string(PartOfSpeech p);
std::string_view to_string(Register r);
std::string_view to_string(TedTop t);
std::string_view to_string(Rubric r);
std::string_view to_string(CorpusSource s);
std::string_view to_string(Equivalence e);
std::string_view to_string(Aspect a);
std::string_view to_string(Borrowing b);
// Russian label of the action type, e.g. "дезориентирующие действия".
std::string_view ted_label(TedTop t);
std::string ted_display(const TedType& t);

std::optional<PartOfSpeech> pos_from_string(std::string_view s);
std::optional<Register> register_from_string(std::string_view s);
std::optional<TedTop> ted_from_string(std::string_view s);
std::optional<Rubric> rubric_from_string(std::string_view s);
std::optional<CorpusSource> source_from_string(std::string_view s);
std::optional<Equivalence> equivalence_from_string(std::string_view s);
std::optional<Aspect> aspect_from_string(std::string_view s);
std::optional<Borrowing> borrowing_from_string(std::string_view s);

}  // namespace sedict
