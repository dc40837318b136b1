#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "json.hpp"
#include "sedict/page.hpp"

using namespace sedict;

namespace {

std::vector<std::string> ids(const std::vector<PageSign>& row) {
  std::vector<std::string> out;
  for (const auto& s : row) out.push_back(s.id);
  return out;
}

}  // namespace

TEST_CASE("ЛГАТЬ-ЛЪЖА rows") {
  const Page& p = fixtures::seed_page("LGAT-LAZHA");
  CHECK(p.title == "ЛГАТЬ ■ ЛЪЖА");
  CHECK(ids(p.row(1)) == std::vector<std::string>{"lgat-lazha"});
  CHECK(ids(p.row(2)) == std::vector<std::string>{"lgat-kleveta", "obmanyvat-lazha"});
  CHECK(ids(p.row(3)) == std::vector<std::string>{"klevetat-kleveta", "obmanyvat-mamya"});
  CHECK(ids(p.row(4)) == std::vector<std::string>{"lazha-zabluzhdenie"});
  CHECK(ids(p.row(5)) == std::vector<std::string>{"lazha-lazha", "lyzha-lazha"});
  CHECK(p.ir->display() == "не правда");
  CHECK(p.row(2)[0].ir->display() == "опозорен/опорочен");
  CHECK(p.row(2)[1].ir->display() == "обманут/излъган");
  CHECK(p.row(2)[0].ted_ru == "принижающие действия");
  CHECK(*p.ted == "дезориентирующие действия");
  for (const auto& s : p.row(2)) CHECK(s.level == 1);
  for (const auto& s : p.row(3)) CHECK(s.level == 2);
}

TEST_CASE("row 1 carries corpus and link rubrics") {
  const Page& p = fixtures::seed_page("LGAT-LAZHA");
  std::set<std::string> rubrics;
  for (const auto& l : p.rubric_links) rubrics.insert(l.rubric + ":" + std::string(to_string(l.side)));
  for (auto r : {"НКРЯ:ru", "БНК:bg", "АСС:ru", "МОРФ:ru", "ФР:ru", "СИН:ru", "ПЗ:bg", "ФР:bg", "СИН:bg"})
    CHECK(rubrics.count(r) == 1);
  for (const auto& l : p.rubric_links)
    if (l.rubric == "НКРЯ") CHECK(l.items.size() == 3);
}

TEST_CASE("row 5 warnings link to outside references") {
  const Page& p = fixtures::seed_page("LGAT-LAZHA");
  const auto& lazha = p.row(5)[0];
  REQUIRE(lazha.links.size() == 1);
  CHECK(lazha.links[0].rubric == "МОРФ");
  CHECK(lazha.links[0].target.find("лажа") != std::string::npos);
  CHECK(lazha.color.empty());
}

TEST_CASE("hosted warnings appear on the host page") {
  const Page& p = fixtures::seed_page("ZAKLYUCHIT-ZATVARYAM");
  auto row5 = ids(p.row(5));
  CHECK(std::find(row5.begin(), row5.end(), "naposledok-naposledak") != row5.end());
  CHECK(std::find(row5.begin(), row5.end(), "zaklyuchit-zaklyucha") != row5.end());
}

TEST_CASE("every seed page is self-sufficient") {
  for (const auto& p : fixtures::seed_build().pages) {
    CAPTURE(p.slug);
    CHECK(missing_payloads(p).empty());
    CHECK(p.popup_count() >= displayed_word_count(p));
    std::set<std::string> colors;
    for (const auto& [sign, c] : p.colors) colors.insert(c);
    CHECK(colors.size() <= kPaletteSize);
    CHECK(p.reference_base.size() == 20);
  }
}

TEST_CASE("missing payloads are detected") {
  Page p = fixtures::seed_page("LGAT-LAZHA");
  std::string dropped = p.payloads.front().sense;
  p.payloads.erase(p.payloads.begin());
  CHECK(missing_payloads(p) == std::vector<std::string>{dropped});
}

TEST_CASE("thirteen colour groups wrap the palette") {
  Page p;
  p.slug = "FIXTURE";
  for (int i = 0; i < 13; ++i) {
    PageSign s;
    s.id = "s" + std::to_string(100 + i);
    s.type = i % 2 ? SignType::Asynchronous : SignType::SynchronousHomogeneous;
    s.ru_sense = "ru." + std::to_string(i);
    s.bg_sense = "bg." + std::to_string(i);
    p.rows[i % 2 ? 1 : 2].push_back(s);
    p.payloads.push_back({s.ru_sense, "w", Language::ru, "", "", ""});
  }
  PageSign warn;
  warn.id = "w";
  warn.type = SignType::False;
  p.rows[4].push_back(warn);
  auto ds = assign_colors(p);
  REQUIRE(ds.size() == 1);
  CHECK(ds[0].code == "color-reuse");
  CHECK(ds[0].severity == Severity::warning);
  // row order: row 2 holds the odd signs, row 3 the even ones
  std::vector<std::string> order;
  for (const auto& row : p.rows)
    for (const auto& s : row)
      if (!is_warning(s.type)) order.push_back(s.id);
  for (std::size_t k = 0; k < order.size(); ++k) CHECK(p.colors.at(order[k]) == "c" + std::to_string(k % 12));
  CHECK(p.colors.count("w") == 0);
  for (const auto& pl : p.payloads) CHECK_FALSE(pl.color.empty());
}

TEST_CASE("reference base lists ideograms then abbreviations") {
  auto legend = reference_base(GlyphSet::defaults());
  REQUIRE(legend.size() == 20);
  CHECK(legend[0].glyph == "■");
  std::set<std::string> keys;
  for (const auto& e : legend) keys.insert(e.key);
  for (auto k : {"НКРЯ", "БНК", "СИН", "ФР", "АСС", "МОРФ", "ПЗ", "ТЭД", "СС", "ИР"}) CHECK(keys.count(k) == 1);
  auto js = nlohmann::json::parse(legend_to_json(legend));
  CHECK(js["legend"].size() == 20);
}

TEST_CASE("disjunctive pages put the open set on row 4") {
  const Page& p = fixtures::seed_page("GROZYA");
  CHECK(p.row(1).empty());
  CHECK(p.row(4).size() == 3);
  for (const auto& s : p.row(4)) {
    CHECK(s.type == SignType::Disjunctive);
    CHECK(s.direction == Direction::right_to_left);
  }
  auto row5 = ids(p.row(5));
  CHECK(row5 == std::vector<std::string>{"auto:ru.grozit~bg.grozya2"});
}
