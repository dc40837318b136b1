#include <stdexcept>

#include "doctest.h"
#include "sedict/text.hpp"

using namespace sedict;

TEST_CASE("utf-8 decode and encode round trip") {
  std::string s = "лъжа – ёж ѝ";
  CHECK(text::encode(text::decode(s)) == s);
  CHECK(text::length("лъжа") == 4);
  CHECK(text::decode("\xff")[0] == U'�');
}

TEST_CASE("case mapping covers both alphabets") {
  CHECK(text::to_upper("лгать ёлка ѝ") == "ЛГАТЬ ЁЛКА Ѝ");
  CHECK(text::to_lower("ЪЩЭ") == "ъщэ");
  CHECK(text::capitalize("вводить в заблуждение") == "Вводить в заблуждение");
}

TEST_CASE("fold lowers and merges ё, ѝ") {
  CHECK(text::fold("Ёлка") == "елка");
  CHECK(text::fold("ѝ") == "и");
  CHECK(text::fold("ЛЪЖА") == "лъжа");
}

TEST_CASE("transliteration differs per language") {
  CHECK(text::transliterate("ЛЪЖА", Language::bg) == "LAZHA");
  CHECK(text::transliterate("ЛГАТЬ", Language::ru) == "LGAT");
  CHECK(text::transliterate("ЩИТ", Language::bg) == "SHTIT");
  CHECK(text::transliterate("ЩИТ", Language::ru) == "SHCHIT");
  CHECK(text::transliterate("покушавам се", Language::bg) == "POKUSHAVAM-SE");
}

TEST_CASE("collation puts ё right after е") {
  CHECK(text::collate("ель", "ёж") < 0);
  CHECK(text::collate("ёж", "жук") < 0);
  CHECK(text::collate("Арест", "арест") == 0);
  CHECK(text::collate("баба", "бабка") < 0);
}

TEST_CASE("whole word containment") {
  CHECK(text::contains_whole_word("лгать и врать", "врать"));
  CHECK_FALSE(text::contains_whole_word("завирать", "врать"));
  CHECK(text::contains_whole_word("лъжа", "лъжа"));
  CHECK(text::contains_space("ловя с въдица"));
}

TEST_CASE("language tags") {
  CHECK(language_from_string("bg") == Language::bg);
  CHECK(to_string(opposite(Language::ru)) == "bg");
  CHECK_THROWS_AS(language_from_string("de"), std::invalid_argument);
}
