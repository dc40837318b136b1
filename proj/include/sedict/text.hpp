#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace sedict {

enum class Language { ru, bg };

inline constexpr Language opposite(Language lang) {
  return lang == Language::ru ? Language::bg : Language::ru;
}

std::string_view to_string(Language lang);
Language language_from_string(std::string_view s);  // throws std::invalid_argument

namespace text {

// Decodes UTF-8 into code points. Malformed bytes decode to U+FFFD.
std::u32string decode(std::string_view utf8);
std::string encode(std::u32string_view cps);
std::size_t length(std::string_view utf8);

char32_t to_lower(char32_t c);
char32_t to_upper(char32_t c);
std::string to_lower(std::string_view utf8);
std::string to_upper(std::string_view utf8);

// Upper-cases the first code point only ("вводить в заблуждение" -> "Вводить в заблуждение").
std::string capitalize(std::string_view utf8);

// Lower-cases and folds ѝ to и and ё to е; the form used for lemma lookup.
std::string fold(std::string_view utf8);

// ASCII transliteration in upper case, per-language tables (BG: ъ->A, щ->SHT; RU: щ->SHCH, ъ/ь dropped).
// Characters outside the tables are dropped, whitespace becomes '-'.
std::string transliterate(std::string_view utf8, Language lang);

// Collation key: code-point order except ё sorts immediately after е and ѝ folds to и.
// Case-insensitive; ties are broken by the caller.
std::vector<std::uint32_t> collation_key(std::string_view utf8);
int collate(std::string_view a, std::string_view b);

bool contains_space(std::string_view utf8);

// True when `needle` occurs in `hay` delimited by non-letters on both sides.
bool contains_whole_word(std::string_view hay, std::string_view needle);

}  // namespace text
}  // namespace sedict
