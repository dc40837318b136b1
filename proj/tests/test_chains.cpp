#include "doctest.h"
#include "fixtures.hpp"
#include "sedict/chains.hpp"

using namespace sedict;

namespace {

Language language_of(const LexiconModel& m, const std::string& sense) {
  return m.lexeme_of(*m.find_sense(sense)).language;
}

void check_chain_shape(const ImplicativeChain& c, const LexiconModel& m) {
  REQUIRE_FALSE(c.signs.empty());
  CHECK(c.links.size() >= c.signs.size());
  CHECK(c.links.size() <= c.signs.size() + 1);
  for (std::size_t i = 0; i + 1 < c.links.size(); ++i)
    CHECK(language_of(m, c.links[i]) != language_of(m, c.links[i + 1]));
}

// ru A, C and bg B, D; A.1 ■ B.1 heads; secondary senses loop back to B.
fixtures::ModelBuilder cyclic() {
  fixtures::ModelBuilder b;
  b.lexeme("A", "ага", Language::ru, "*a");
  b.lexeme("B", "ага", Language::bg, "*a");
  b.lexeme("C", "вот", Language::ru, "*c");
  b.lexeme("D", "дим", Language::bg, "*d");
  for (auto id : {"A", "B", "C", "D"}) {
    b.sense(id, 1);
    b.sense(id, 2);
  }
  b.pair("1-head", "A.1", "B.1");
  b.pair("2-ad", "A.2", "D.2");
  b.pair("3-dc", "C.2", "D.1");
  b.pair("4-cb", "C.1", "B.2");
  b.pair("5-cd", "C.2", "D.2", Equivalence::ad_hoc);
  return b;
}

}  // namespace

TEST_CASE("chain building halts on a cyclic graph") {
  auto b = cyclic();
  const auto& m = b.done();
  auto graph = classify_all(m);
  REQUIRE(graph.diagnostics.empty());
  ChainRequest req{{"A.1", "B.1"}, {"1-head"}, 10};
  auto set = build_chains(req, graph, m);
  REQUIRE_FALSE(set.chains.empty());
  bool saw_cycle = false;
  for (const auto& c : set.chains) {
    check_chain_shape(c, m);
    CHECK(c.signs.size() <= 10);
    if (c.cut_reason == CutReason::cycle) saw_cycle = true;
    CHECK(std::find(c.signs.begin(), c.signs.end(), "1-head") == c.signs.end());
  }
  CHECK(saw_cycle);
  CHECK(set.levels.at("1-head") == 0);
  for (const auto& d : set.diagnostics) CHECK(d.code == "chain-cut");
}

TEST_CASE("depth limit cuts long chains") {
  auto b = cyclic();
  const auto& m = b.done();
  auto graph = classify_all(m);
  auto set = build_chains({{"A.1", "B.1"}, {"1-head"}, 1}, graph, m);
  bool saw_depth = false;
  for (const auto& c : set.chains) {
    CHECK(c.signs.size() <= 1);
    saw_depth = saw_depth || c.cut_reason == CutReason::depth;
  }
  CHECK(saw_depth);
}

TEST_CASE("levels are the minimum step count") {
  std::vector<ImplicativeChain> chains = {
      {{"x", "y", "z"}, {"s1", "s2"}, ChainTerminal::synchronous_pair, CutReason::none},
      {{"y", "z"}, {"s2"}, ChainTerminal::synchronous_pair, CutReason::none},
  };
  auto levels = assign_polarization(chains, {"h"});
  CHECK(levels.at("h") == 0);
  CHECK(levels.at("s1") == 1);
  CHECK(levels.at("s2") == 1);
}

TEST_CASE("seed chains alternate languages and step one level at a time") {
  const auto& m = fixtures::seed();
  for (const auto& page : fixtures::seed_build().pages) {
    CAPTURE(page.slug);
    auto levels = assign_polarization(page.chains, page.header.signs);
    for (const auto& c : page.chains) {
      check_chain_shape(c, m);
      for (std::size_t i = 0; i < c.signs.size(); ++i) CHECK(levels.at(c.signs[i]) <= static_cast<int>(i) + 1);
      CHECK(levels.at(c.signs.front()) == 1);
    }
  }
}

TEST_CASE("the infidelity chain stops at the neutral sense of изменям") {
  const auto& page = fixtures::seed_page("OBMANYVAT-MAMYA");
  bool reached = false;
  for (const auto& c : page.chains) {
    auto it = std::find(c.signs.begin(), c.signs.end(), "izmenyat-izneveryavam");
    if (it == c.signs.end()) continue;
    reached = true;
    CHECK(std::find(c.links.begin(), c.links.end(), "bg.izmenyam.1") == c.links.end());
    CHECK(std::find(c.signs.begin(), c.signs.end(), "izmenyat-izmenyam") == c.signs.end());
    CHECK(c.terminal == ChainTerminal::cut_by_neutral);
  }
  CHECK(reached);
}

TEST_CASE("terminal and cut names round trip") {
  for (auto t : {ChainTerminal::synchronous_pair, ChainTerminal::diffuse_leaf, ChainTerminal::disjunctive_leaf,
                 ChainTerminal::cut_by_neutral})
    CHECK(chain_terminal_from_string(to_string(t)) == t);
  for (auto r : {CutReason::none, CutReason::neutral, CutReason::cycle, CutReason::depth, CutReason::dead_end})
    CHECK(cut_reason_from_string(to_string(r)) == r);
}
