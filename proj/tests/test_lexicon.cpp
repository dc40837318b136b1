#include <algorithm>

#include "doctest.h"
#include "fixtures.hpp"
#include "json.hpp"

using namespace sedict;
using nlohmann::json;

namespace {

std::vector<std::string> codes(const Diagnostics& ds) {
  std::vector<std::string> out;
  for (const auto& d : ds) out.push_back(d.code);
  return out;
}

DocumentSet seed_docs() { return read_documents(SEDICT_SEED_DIR); }

json doc(const DocumentSet& docs, const std::string& name) { return json::parse(docs.at(name)); }

}  // namespace

TEST_CASE("seed lexicon validates without diagnostics") {
  auto r = load_lexicon_dir(SEDICT_SEED_DIR);
  for (const auto& d : r.diagnostics) INFO(format(d));
  CHECK(r.ok());
  CHECK(r.model.lexemes.size() > 60);
  CHECK(r.model.find_sense("ru.lgat.2")->ir->display() == "опозорен/опорочен");
}

TEST_CASE("emit then load reproduces the model") {
  const auto& m = fixtures::seed();
  auto again = load_lexicon(emit_lexicon(m));
  CHECK(again.ok());
  CHECK(again.model == m);
  CHECK(emit_lexicon(again.model) == emit_lexicon(m));
}

TEST_CASE("model lookups") {
  const auto& m = fixtures::seed();
  const Lexeme* lgat = m.find_lexeme("ru.lgat");
  REQUIRE(lgat);
  auto senses = m.senses_of(*lgat);
  REQUIRE(senses.size() == 2);
  CHECK(senses[0]->rank == 1);
  CHECK(m.has_ted_sense(*lgat));
  CHECK(m.pair_between("bg.lazha.1", "ru.lgat.1")->id == "lgat-lazha");
  CHECK(m.pairs_of("bg.lazha.1").size() == 4);
  CHECK_THROWS_AS(m.lexeme_of(Sense{}), std::out_of_range);
}

TEST_CASE("same-language pair is one diagnostic") {
  auto docs = seed_docs();
  json pairs = doc(docs, "pairs.json");
  pairs["pairs"].push_back({{"id", "zz-bad"}, {"left", "ru.lgat.1"}, {"right", "ru.vrat.1"}, {"equivalence", "full"}});
  docs["pairs.json"] = pairs.dump();
  auto r = load_lexicon(docs);
  CHECK(codes(r.diagnostics) == std::vector<std::string>{"same-language-pair"});
  CHECK(r.diagnostics[0].subject == "zz-bad");
}

TEST_CASE("sense rank rules") {
  auto docs = seed_docs();
  json lex = doc(docs, "ru.lgat.json");
  SUBCASE("duplicate rank") {
    lex["senses"][1]["rank"] = 1;
    docs["ru.lgat.json"] = lex.dump();
    auto c = codes(load_lexicon(docs).diagnostics);
    CHECK(std::count(c.begin(), c.end(), "duplicate-rank") == 1);
  }
  SUBCASE("gap") {
    lex["senses"][1]["rank"] = 3;
    docs["ru.lgat.json"] = lex.dump();
    auto c = codes(load_lexicon(docs).diagnostics);
    CHECK(std::count(c.begin(), c.end(), "rank-gap") == 1);
  }
  SUBCASE("no senses") {
    lex["senses"] = json::array();
    docs["ru.lgat.json"] = lex.dump();
    auto c = codes(load_lexicon(docs).diagnostics);
    CHECK(std::count(c.begin(), c.end(), "no-senses") == 1);
  }
}

TEST_CASE("dangling references") {
  auto docs = seed_docs();
  json pairs = doc(docs, "pairs.json");
  pairs["pairs"].push_back({{"id", "zz-dangling"}, {"left", "ru.lgat.9"}, {"right", "bg.lazha.1"}, {"equivalence", "full"}});
  docs["pairs.json"] = pairs.dump();
  json links = doc(docs, "links.json");
  links["ru.nobody"] = {{"МОРФ", "https://example.org"}};
  docs["links.json"] = links.dump();
  auto c = codes(load_lexicon(docs).diagnostics);
  CHECK(std::count(c.begin(), c.end(), "dangling-sense") == 1);
  CHECK(std::count(c.begin(), c.end(), "dangling-link") == 1);
}

TEST_CASE("TED and scheme-neutral must agree") {
  auto docs = seed_docs();
  json lex = doc(docs, "bg.vesya.json");
  lex["senses"][0]["scheme_neutral"] = false;
  docs["bg.vesya.json"] = lex.dump();
  CHECK(codes(load_lexicon(docs).diagnostics) == std::vector<std::string>{"neutral-ted-mismatch"});
}

TEST_CASE("descriptive equivalents must be multi-word") {
  auto docs = seed_docs();
  json pairs = doc(docs, "pairs.json");
  for (auto& p : pairs["pairs"])
    if (p["id"] == "udit") p["descriptive"]["text"] = "въдя";
  docs["pairs.json"] = pairs.dump();
  CHECK(codes(load_lexicon(docs).diagnostics) == std::vector<std::string>{"descriptive-form"});
}

TEST_CASE("approximate pairs name the unique side") {
  auto docs = seed_docs();
  json pairs = doc(docs, "pairs.json");
  for (auto& p : pairs["pairs"])
    if (p["id"] == "branit-hokam") p.erase("unique");
  docs["pairs.json"] = pairs.dump();
  CHECK(codes(load_lexicon(docs).diagnostics) == std::vector<std::string>{"missing-unique"});
}

TEST_CASE("warning types cannot carry equivalence") {
  auto docs = seed_docs();
  json pairs = doc(docs, "pairs.json");
  for (auto& p : pairs["pairs"])
    if (p["id"] == "lazha-lazha") p["equivalence"] = "full";
  docs["pairs.json"] = pairs.dump();
  CHECK(codes(load_lexicon(docs).diagnostics) == std::vector<std::string>{"declared-equivalent"});
}

TEST_CASE("schema errors are reported per file") {
  auto docs = seed_docs();
  docs["ru.broken.json"] = "{ not json";
  json lex = doc(docs, "ru.vrat.json");
  lex["pos"] = "particle";
  docs["ru.vrat.json"] = lex.dump();
  auto r = load_lexicon(docs);
  auto c = codes(r.diagnostics);
  CHECK(std::count(c.begin(), c.end(), "schema") == 2);
}

TEST_CASE("reading a missing directory is an I/O error") {
  CHECK_THROWS_AS(read_documents("/nonexistent/sedict"), IoError);
}

TEST_CASE("result index display") {
  CHECK(ResultIndex{"обманут", "излъган"}.display() == "обманут/излъган");
  CHECK(ResultIndex{"не правда", "не правда"}.display() == "не правда");
  CHECK(ResultIndex{"", "излъган"}.display() == "излъган");
}

TEST_CASE("enum names round trip") {
  for (auto t : kAllSignTypes) CHECK(sign_type_from_string(to_string(t)) == t);
  CHECK(rubric_from_string("ФР") == Rubric::fr);
  CHECK(ted_label(TedTop::disorienting) == "дезориентирующие действия");
}
