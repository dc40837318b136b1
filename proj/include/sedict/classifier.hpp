#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sedict/lexicon.hpp"
#include "sedict/similarity.hpp"

namespace sedict {

inline constexpr std::array<std::string_view, 5> kHomogeneityKeys = {
    "hom.common_origin_with_reflex", "hom.one_primary_meaning", "hom.untranslatable_identity",
    "hom.autosynonym", "hom.same_fragment_same_ir"};
inline constexpr std::array<std::string_view, 5> kHeterogeneityKeys = {
    "het.distinct_origin_one_primary", "het.one_primary_meaning", "het.equivalent", "het.not_autosynonym",
    "het.same_fragment_same_ir"};

struct CriterionTrace {
  std::array<bool, 5> homogeneity{};
  std::array<bool, 5> heterogeneity{};
  std::string branch;  // stable key of the decision branch that fired
  std::optional<Language> leading;  // asynchronous signs only
  std::vector<std::string> notes;

  bool operator==(const CriterionTrace&) const = default;
};

struct ClassifierConfig {
  bool admit_pre_registered = false;
  double false_threshold = 0.25;
  OrthographyTable orthography = default_orthography();
};

// A typed pairing of a Russian and a Bulgarian member. One member may be a descriptive
// equivalent, in which case its sense id is empty.
struct BinarySign {
  std::string id;  // declared pair id, or "auto:<ru lexeme>~<bg lexeme>" for detected false friends
  std::string ru;  // sense id
  std::string bg;  // sense id
  std::optional<DescriptiveEquivalent> descriptive;
  SignType type = SignType::False;
  Direction direction = Direction::none;
  CriterionTrace trace;
  std::optional<std::string> host;
  bool detected = false;

  const std::string& sense(Language lang) const { return lang == Language::ru ? ru : bg; }
  // The sense on the other side, or empty when that side is descriptive.
  const std::string& partner_of(std::string_view sense_id) const { return sense_id == ru ? bg : ru; }
  bool involves(std::string_view sense_id) const { return !sense_id.empty() && (ru == sense_id || bg == sense_id); }
  bool operator==(const BinarySign&) const = default;
};

struct ClassifyResult {
  std::optional<BinarySign> sign;
  Diagnostics diagnostics;
};

// Equivalence as the classifier sees it after the pre-registration policy.
Equivalence effective_equivalence(const DeclaredPair& pair, const LexiconModel& model, const ClassifierConfig& cfg,
                                  std::vector<std::string>* notes = nullptr);

CriterionTrace homogeneity_check(const Sense& a, const Sense& b, const LexiconModel& model,
                                 const ClassifierConfig& cfg = {});

ClassifyResult classify_pair(const DeclaredPair& pair, const LexiconModel& model, const ClassifierConfig& cfg = {});
// Classifies two senses through their declared pair, or as an undeclared non-equivalent pair.
ClassifyResult classify_senses(std::string_view a, std::string_view b, const LexiconModel& model,
                               const ClassifierConfig& cfg = {});

// Cross-language lemma pairs that look alike but share no equivalent senses, plus pairs declared False.
// Each pair is (Russian lexeme id, Bulgarian lexeme id), sorted.
std::vector<std::pair<std::string, std::string>> detect_false_candidates(const LexiconModel& model,
                                                                         const ClassifierConfig& cfg = {});

std::string pre_registration_policy(const Lexeme& lexeme, const LexiconModel& model, const ClassifierConfig& cfg);

class SignGraph {
 public:
  std::vector<BinarySign> signs;  // ordered by id
  Diagnostics diagnostics;

  void reindex();
  const BinarySign* find(std::string_view id) const;
  std::vector<const BinarySign*> signs_of(std::string_view sense_id) const;

 private:
  std::map<std::string, std::size_t, std::less<>> by_id_;
  std::map<std::string, std::vector<std::size_t>, std::less<>> by_sense_;
};

// Classifies every declared pair and adds detected false friends that were not declared.
SignGraph classify_all(const LexiconModel& model, const ClassifierConfig& cfg = {});

std::string trace_to_json(const SignGraph& graph);

}  // namespace sedict
