#pragma once

#include <unistd.h>

#include <filesystem>
#include <string>
#include <vector>

#include "sedict/build.hpp"
#include "sedict/lexicon.hpp"

namespace fixtures {

using namespace sedict;

inline const LexiconModel& seed() {
  static const LexiconModel model = [] {
    auto r = load_lexicon_dir(SEDICT_SEED_DIR);
    if (!r.ok()) throw std::runtime_error("seed does not load: " + format(r.diagnostics.front()));
    return r.model;
  }();
  return model;
}

inline const BuildResult& seed_build() {
  static const BuildResult result = run_build(seed(), BuildConfig{});
  return result;
}

inline const Page& seed_page(const std::string& slug) {
  for (const auto& p : seed_build().pages)
    if (p.slug == slug) return p;
  throw std::runtime_error("no page " + slug);
}

// A small hand-made model; senses are "<lexeme>.<rank>".
struct ModelBuilder {
  LexiconModel model;

  Lexeme& lexeme(const std::string& id, const std::string& lemma, Language lang,
                 std::optional<std::string> etymon = std::nullopt, bool transparent = true) {
    Lexeme l;
    l.id = id;
    l.lemma = lemma;
    l.language = lang;
    l.etymon = std::move(etymon);
    l.reflex_transparent = transparent;
    model.lexemes.push_back(l);
    return model.lexemes.back();
  }

  Sense& sense(const std::string& lexeme, int rank, std::optional<TedTop> ted = TedTop::disorienting) {
    Sense s;
    s.id = lexeme + "." + std::to_string(rank);
    s.lexeme = lexeme;
    s.rank = rank;
    s.gloss_ru = "толкование " + s.id;
    s.gloss_bg = "тълкуване " + s.id;
    if (ted) s.ted = TedType{*ted, std::nullopt};
    s.scheme_neutral = !ted;
    model.senses.push_back(s);
    return model.senses.back();
  }

  DeclaredPair& pair(const std::string& id, const std::string& left, const std::string& right,
                     Equivalence eq = Equivalence::full) {
    DeclaredPair p;
    p.id = id;
    p.left = left;
    p.right = right;
    p.equivalence = eq;
    model.pairs.push_back(p);
    return model.pairs.back();
  }

  DeclaredPair& descriptive(const std::string& id, const std::string& left, Language lang, const std::string& text) {
    DeclaredPair p;
    p.id = id;
    p.left = left;
    p.descriptive = DescriptiveEquivalent{lang, text, false};
    p.equivalence = Equivalence::full;
    model.pairs.push_back(p);
    return model.pairs.back();
  }

  const LexiconModel& done() {
    model.reindex();
    return model;
  }
};

inline std::filesystem::path temp_dir(const std::string& name) {
  auto p = std::filesystem::temp_directory_path() / ("sedict-test-" + name + "-" + std::to_string(::getpid()));
  std::filesystem::remove_all(p);
  std::filesystem::create_directories(p);
  return p;
}

}  // namespace fixtures
