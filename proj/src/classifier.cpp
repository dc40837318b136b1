#include "sedict/classifier.hpp"

#include <algorithm>
#include <set>

#include "json.hpp"

namespace sedict {

namespace {

bool synchronized_borrowing(const Lexeme& a, const Lexeme& b) {
  auto from_other = [](const Lexeme& x, const Lexeme& y) {
    if (!x.borrowed_from) return false;
    return (*x.borrowed_from == Borrowing::from_ru && y.language == Language::ru) ||
           (*x.borrowed_from == Borrowing::from_bg && y.language == Language::bg);
  };
  if (from_other(a, b) || from_other(b, a)) return true;
  return a.borrowed_from == Borrowing::third && b.borrowed_from == Borrowing::third;
}

bool common_origin(const Lexeme& a, const Lexeme& b) {
  if (!a.etymon || !b.etymon || *a.etymon != *b.etymon) return false;
  return (a.reflex_transparent && b.reflex_transparent) || synchronized_borrowing(a, b);
}

bool same_fragment(const Sense& a, const Sense& b) {
  if (a.ted.has_value() != b.ted.has_value()) return false;
  return !a.ted || a.ted->top == b.ted->top;
}

bool same_ir(const Sense& a, const Sense& b) { return a.ir == b.ir; }

bool primary_equivalent(const Sense& a, const Sense& b, Equivalence eq) {
  return a.rank == 1 && b.rank == 1 && eq == Equivalence::full;
}

// Criterion (3) goes to the first pair, in id order, that meets (1) and (2) for each of its senses.
bool first_identity_pair(const DeclaredPair& pair, const LexiconModel& model, const ClassifierConfig& cfg) {
  for (const std::string* sid : {&pair.left, &*pair.right}) {
    for (const DeclaredPair* other : model.pairs_of(*sid)) {
      if (other->id >= pair.id || !other->right) continue;
      const Sense* x = model.find_sense(other->left);
      const Sense* y = model.find_sense(*other->right);
      if (!x || !y) continue;
      const Lexeme* lx = model.find_lexeme(x->lexeme);
      const Lexeme* ly = model.find_lexeme(y->lexeme);
      if (!lx || !ly || lx->language == ly->language) continue;
      if (common_origin(*lx, *ly) && primary_equivalent(*x, *y, effective_equivalence(*other, model, cfg)))
        return false;
    }
  }
  return true;
}

DeclaredPair undeclared(std::string_view a, std::string_view b) {
  DeclaredPair p;
  p.id = "auto:" + std::string(a) + "~" + std::string(b);
  p.left = std::string(a);
  p.right = std::string(b);
  p.equivalence = Equivalence::none;
  return p;
}

CriterionTrace evaluate(const Sense& a, const Sense& b, const DeclaredPair& pair, const LexiconModel& model,
                        const ClassifierConfig& cfg) {
  CriterionTrace t;
  const Lexeme& la = model.lexeme_of(a);
  const Lexeme& lb = model.lexeme_of(b);
  Equivalence eq = effective_equivalence(pair, model, cfg, &t.notes);
  bool origin = common_origin(la, lb);
  bool primary = primary_equivalent(a, b, eq);
  bool fragment = same_fragment(a, b);
  bool fragment_ir = fragment && same_ir(a, b);

  t.homogeneity[0] = origin;
  t.homogeneity[1] = primary;
  t.homogeneity[2] = origin && primary && pair.right && first_identity_pair(pair, model, cfg);
  t.homogeneity[3] = origin && fragment;
  t.homogeneity[4] = fragment_ir;

  t.heterogeneity[0] = !origin && primary;
  t.heterogeneity[1] = primary;
  t.heterogeneity[2] = eq == Equivalence::full;
  t.heterogeneity[3] = !t.homogeneity[3];
  t.heterogeneity[4] = fragment_ir;

  if (la.pos == PartOfSpeech::verb && lb.pos == PartOfSpeech::verb && a.aspect && b.aspect && *a.aspect != *b.aspect)
    t.notes.push_back("aspect differs: " + std::string(to_string(*a.aspect)) + " / " +
                      std::string(to_string(*b.aspect)));
  return t;
}

Direction arrow_from(Language unique) {
  return unique == Language::ru ? Direction::left_to_right : Direction::right_to_left;
}

}  // namespace

Equivalence effective_equivalence(const DeclaredPair& pair, const LexiconModel& model, const ClassifierConfig& cfg,
                                  std::vector<std::string>* notes) {
  if (cfg.admit_pre_registered) return pair.equivalence;
  for (const std::string* sid : {&pair.left, pair.right ? &*pair.right : nullptr}) {
    if (!sid) continue;
    const Sense* s = model.find_sense(*sid);
    const Lexeme* lex = s ? model.find_lexeme(s->lexeme) : nullptr;
    if (lex && lex->pre_registered && pair.equivalence != Equivalence::none) {
      if (notes) notes->push_back("pre-registered " + lex->lemma + " not admitted; equivalence ignored");
      return Equivalence::none;
    }
  }
  return pair.equivalence;
}

CriterionTrace homogeneity_check(const Sense& a, const Sense& b, const LexiconModel& model,
                                 const ClassifierConfig& cfg) {
  const DeclaredPair* declared = model.pair_between(a.id, b.id);
  if (declared) return evaluate(a, b, *declared, model, cfg);
  return evaluate(a, b, undeclared(a.id, b.id), model, cfg);
}

ClassifyResult classify_pair(const DeclaredPair& pair, const LexiconModel& model, const ClassifierConfig& cfg) {
  ClassifyResult out;
  auto fail = [&](std::string code, std::string message) {
    out.diagnostics.push_back(error(std::move(code), pair.id, std::move(message)));
    return out;
  };

  const Sense* left = model.find_sense(pair.left);
  if (!left) return fail("dangling-sense", "left sense " + pair.left + " not found");
  const Lexeme& left_lex = model.lexeme_of(*left);

  BinarySign sign;
  sign.id = pair.id;
  sign.host = pair.host;

  // (1) descriptive equivalent: the sense side is the unique word
  if (pair.descriptive) {
    if (pair.descriptive->language == left_lex.language)
      return fail("same-language-pair", "descriptive equivalent is in the language of " + left_lex.lemma);
    (left_lex.language == Language::ru ? sign.ru : sign.bg) = left->id;
    sign.descriptive = pair.descriptive;
    sign.type = SignType::Diffuse;
    sign.direction = arrow_from(left_lex.language);
    sign.trace.branch = "diffuse.descriptive_equivalent";
  } else {
    const Sense* right = pair.right ? model.find_sense(*pair.right) : nullptr;
    if (!right) return fail("dangling-sense", "right sense of the pair not found");
    const Lexeme& right_lex = model.lexeme_of(*right);
    if (right_lex.language == left_lex.language)
      return fail("same-language-pair", "same-language pair: " + left_lex.lemma + " and " + right_lex.lemma);

    const Sense& ru = left_lex.language == Language::ru ? *left : *right;
    const Sense& bg = left_lex.language == Language::ru ? *right : *left;
    sign.ru = ru.id;
    sign.bg = bg.id;
    sign.trace = evaluate(ru, bg, pair, model, cfg);
    Equivalence eq = effective_equivalence(pair, model, cfg);
    bool origin = sign.trace.homogeneity[0];
    bool declared_false = pair.declared == SignType::False;

    if (ru.rank == 1 && bg.rank == 1 && eq == Equivalence::full) {
      // (2), (3)
      sign.type = origin ? SignType::SynchronousHomogeneous : SignType::SynchronousHeterogeneous;
      sign.trace.branch = origin ? "synchronous.common_origin" : "synchronous.distinct_origin";
    } else if (eq == Equivalence::full || eq == Equivalence::ad_hoc) {
      // (4)
      sign.type = SignType::Asynchronous;
      sign.trace.branch = eq == Equivalence::ad_hoc ? "asynchronous.ad_hoc" : "asynchronous.secondary_sense";
      if (ru.rank == bg.rank) {
        sign.trace.leading = Language::ru;
        sign.trace.notes.push_back("leading side: equal ranks, Russian side leads");
      } else {
        sign.trace.leading = ru.rank < bg.rank ? Language::ru : Language::bg;
        sign.trace.notes.push_back("leading side: " + std::string(to_string(*sign.trace.leading)) +
                                   " (lower rank)");
      }
    } else if (eq == Equivalence::approximate && pair.unique) {
      // (5)
      sign.type = SignType::Disjunctive;
      sign.direction = arrow_from(*pair.unique);
      sign.trace.branch = "disjunctive.approximating_set";
    } else if (eq == Equivalence::none && pair.declared == SignType::Empty) {
      sign.type = SignType::Empty;
      sign.trace.branch = "empty.declared";
    } else if (eq == Equivalence::none &&
               (declared_false || form_similar(left_lex, right_lex, cfg.orthography, cfg.false_threshold))) {
      sign.type = SignType::False;
      sign.trace.branch = declared_false ? "false.declared" : "false.form_similar";
      sign.trace.notes.push_back(
          "form distance " + std::to_string(form_distance(left_lex, right_lex, cfg.orthography)));
    } else {
      return fail("unclassifiable", "no classification branch applies to " + left_lex.lemma + " / " +
                                        right_lex.lemma + " (equivalence " + std::string(to_string(eq)) + ")");
    }
  }

  if (pair.declared && *pair.declared != sign.type)
    out.diagnostics.push_back(error("declared-mismatch", pair.id,
                                    "declared " + std::string(to_string(*pair.declared)) + " but classified " +
                                        std::string(to_string(sign.type))));
  if (pair.direction && *pair.direction != sign.direction)
    out.diagnostics.push_back(error("direction-mismatch", pair.id,
                                    "declared direction " + std::string(to_string(*pair.direction)) +
                                        " but computed " + std::string(to_string(sign.direction))));
  out.sign = std::move(sign);
  return out;
}

ClassifyResult classify_senses(std::string_view a, std::string_view b, const LexiconModel& model,
                               const ClassifierConfig& cfg) {
  if (const DeclaredPair* p = model.pair_between(a, b)) return classify_pair(*p, model, cfg);
  return classify_pair(undeclared(a, b), model, cfg);
}

std::vector<std::pair<std::string, std::string>> detect_false_candidates(const LexiconModel& model,
                                                                         const ClassifierConfig& cfg) {
  std::set<std::pair<std::string, std::string>> found;
  for (const auto& p : model.pairs) {
    if (p.declared != SignType::False || !p.right) continue;
    const Sense* a = model.find_sense(p.left);
    const Sense* b = model.find_sense(*p.right);
    if (!a || !b) continue;
    const Lexeme& la = model.lexeme_of(*a);
    const Lexeme& lb = model.lexeme_of(*b);
    if (la.language == lb.language) continue;
    found.emplace(la.language == Language::ru ? la.id : lb.id, la.language == Language::ru ? lb.id : la.id);
  }

  for (const auto& ru : model.lexemes) {
    if (ru.language != Language::ru) continue;
    for (const auto& bg : model.lexemes) {
      if (bg.language != Language::bg) continue;
      if (!form_similar(ru, bg, cfg.orthography, cfg.false_threshold)) continue;
      bool equivalent = false;
      for (const Sense* s : model.senses_of(ru)) {
        for (const DeclaredPair* p : model.pairs_of(s->id)) {
          if (!p->right) continue;
          const std::string& other = p->left == s->id ? *p->right : p->left;
          const Sense* o = model.find_sense(other);
          if (o && o->lexeme == bg.id && effective_equivalence(*p, model, cfg) != Equivalence::none)
            equivalent = true;
        }
      }
      if (!equivalent) found.emplace(ru.id, bg.id);
    }
  }
  return {found.begin(), found.end()};
}

std::string pre_registration_policy(const Lexeme& lexeme, const LexiconModel& model, const ClassifierConfig& cfg) {
  if (!lexeme.pre_registered) return "policy not applicable";
  if (cfg.admit_pre_registered) return "admitted: " + lexeme.lemma + " takes part in synchronous classification";
  std::string note = "not admitted: equivalences of " + lexeme.lemma + " are ignored";
  std::set<std::string> fallbacks;
  for (const Sense* s : model.senses_of(lexeme)) {
    for (const DeclaredPair* p : model.pairs_of(s->id)) {
      if (!p->right || p->equivalence != Equivalence::full) continue;
      const Sense* partner = model.find_sense(p->left == s->id ? *p->right : p->left);
      if (!partner) continue;
      for (const DeclaredPair* q : model.pairs_of(partner->id)) {
        if (q == p || !q->right || q->equivalence != Equivalence::full) continue;
        const Sense* alt = model.find_sense(q->left == partner->id ? *q->right : q->left);
        if (alt && model.lexeme_of(*alt).language == lexeme.language && !model.lexeme_of(*alt).pre_registered)
          fallbacks.insert(model.lexeme_of(*alt).lemma + " / " + model.lexeme_of(*partner).lemma);
      }
    }
  }
  for (const auto& f : fallbacks) note += "; falls back to " + f;
  return note;
}

void SignGraph::reindex() {
  by_id_.clear();
  by_sense_.clear();
  for (std::size_t i = 0; i < signs.size(); ++i) {
    by_id_.emplace(signs[i].id, i);
    if (!signs[i].ru.empty()) by_sense_[signs[i].ru].push_back(i);
    if (!signs[i].bg.empty()) by_sense_[signs[i].bg].push_back(i);
  }
}

const BinarySign* SignGraph::find(std::string_view id) const {
  auto it = by_id_.find(id);
  return it == by_id_.end() ? nullptr : &signs[it->second];
}

std::vector<const BinarySign*> SignGraph::signs_of(std::string_view sense_id) const {
  std::vector<const BinarySign*> out;
  auto it = by_sense_.find(sense_id);
  if (it == by_sense_.end()) return out;
  for (std::size_t i : it->second) out.push_back(&signs[i]);
  return out;
}

SignGraph classify_all(const LexiconModel& model, const ClassifierConfig& cfg) {
  SignGraph graph;
  std::set<std::pair<std::string, std::string>> paired_lexemes;
  for (const auto& p : model.pairs) {
    auto r = classify_pair(p, model, cfg);
    graph.diagnostics.insert(graph.diagnostics.end(), r.diagnostics.begin(), r.diagnostics.end());
    if (!r.sign) continue;
    if (!r.sign->ru.empty() && !r.sign->bg.empty())
      paired_lexemes.emplace(model.find_sense(r.sign->ru)->lexeme, model.find_sense(r.sign->bg)->lexeme);
    graph.signs.push_back(std::move(*r.sign));
  }

  for (const auto& [ru_id, bg_id] : detect_false_candidates(model, cfg)) {
    if (paired_lexemes.count({ru_id, bg_id})) continue;
    const Lexeme* ru = model.find_lexeme(ru_id);
    const Lexeme* bg = model.find_lexeme(bg_id);
    auto rs = model.senses_of(*ru);
    auto bs = model.senses_of(*bg);
    if (rs.empty() || bs.empty()) continue;
    auto r = classify_pair(undeclared(rs.front()->id, bs.front()->id), model, cfg);
    if (!r.sign) continue;
    r.sign->id = "auto:" + ru_id + "~" + bg_id;
    r.sign->detected = true;
    r.sign->trace.notes.push_back("detected false friend, not declared");
    graph.signs.push_back(std::move(*r.sign));
  }

  std::sort(graph.signs.begin(), graph.signs.end(),
            [](const BinarySign& a, const BinarySign& b) { return a.id < b.id; });
  graph.reindex();
  return graph;
}

std::string trace_to_json(const SignGraph& graph) {
  nlohmann::json out = nlohmann::json::object();
  for (const auto& s : graph.signs) {
    nlohmann::json js;
    js["sign_type"] = to_string(s.type);
    js["direction"] = to_string(s.direction);
    js["branch"] = s.trace.branch;
    for (std::size_t i = 0; i < 5; ++i) {
      js["criteria"][std::string(kHomogeneityKeys[i])] = s.trace.homogeneity[i];
      js["criteria"][std::string(kHeterogeneityKeys[i])] = s.trace.heterogeneity[i];
    }
    if (s.trace.leading) js["leading"] = to_string(*s.trace.leading);
    js["notes"] = s.trace.notes;
    out[s.id] = js;
  }
  return out.dump(2) + "\n";
}

}  // namespace sedict
