#include "sedict/text.hpp"

#include <stdexcept>

namespace sedict {

std::string_view to_string(Language lang) { return lang == Language::ru ? "ru" : "bg"; }

Language language_from_string(std::string_view s) {
  if (s == "ru") return Language::ru;
  if (s == "bg") return Language::bg;
  throw std::invalid_argument("unknown language tag '" + std::string(s) + "'");
}

namespace text {

std::u32string decode(std::string_view s) {
  std::u32string out;
  out.reserve(s.size());
  std::size_t i = 0;
  while (i < s.size()) {
    auto b0 = static_cast<unsigned char>(s[i]);
    char32_t cp = 0;
    int extra = 0;
    if (b0 < 0x80) {
      cp = b0;
    } else if ((b0 & 0xE0) == 0xC0) {
      cp = b0 & 0x1F;
      extra = 1;
    } else if ((b0 & 0xF0) == 0xE0) {
      cp = b0 & 0x0F;
      extra = 2;
    } else if ((b0 & 0xF8) == 0xF0) {
      cp = b0 & 0x07;
      extra = 3;
    } else {
      out.push_back(U'�');
      ++i;
      continue;
    }
    bool ok = true;
    for (int k = 1; k <= extra; ++k) {
      if (i + k >= s.size()) {
        ok = false;
        break;
      }
      auto b = static_cast<unsigned char>(s[i + k]);
      if ((b & 0xC0) != 0x80) {
        ok = false;
        break;
      }
      cp = (cp << 6) | (b & 0x3F);
    }
    if (!ok) {
      out.push_back(U'�');
      ++i;
      continue;
    }
    out.push_back(cp);
    i += extra + 1;
  }
  return out;
}

std::string encode(std::u32string_view cps) {
  std::string out;
  out.reserve(cps.size() * 2);
  for (char32_t c : cps) {
    if (c < 0x80) {
      out.push_back(static_cast<char>(c));
    } else if (c < 0x800) {
      out.push_back(static_cast<char>(0xC0 | (c >> 6)));
      out.push_back(static_cast<char>(0x80 | (c & 0x3F)));
    } else if (c < 0x10000) {
      out.push_back(static_cast<char>(0xE0 | (c >> 12)));
      out.push_back(static_cast<char>(0x80 | ((c >> 6) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | (c & 0x3F)));
    } else {
      out.push_back(static_cast<char>(0xF0 | (c >> 18)));
      out.push_back(static_cast<char>(0x80 | ((c >> 12) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | ((c >> 6) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | (c & 0x3F)));
    }
  }
  return out;
}

std::size_t length(std::string_view utf8) { return decode(utf8).size(); }

char32_t to_lower(char32_t c) {
  if (c >= U'A' && c <= U'Z') return c + 32;
  if (c >= 0x0410 && c <= 0x042F) return c + 0x20;
  if (c >= 0x0400 && c <= 0x040F) return c + 0x50;
  if (c >= 0x0460 && c <= 0x0481 && c % 2 == 0) return c + 1;
  return c;
}

char32_t to_upper(char32_t c) {
  if (c >= U'a' && c <= U'z') return c - 32;
  if (c >= 0x0430 && c <= 0x044F) return c - 0x20;
  if (c >= 0x0450 && c <= 0x045F) return c - 0x50;
  if (c >= 0x0461 && c <= 0x0481 && c % 2 == 1) return c - 1;
  return c;
}

std::string to_lower(std::string_view utf8) {
  auto cps = decode(utf8);
  for (auto& c : cps) c = to_lower(c);
  return encode(cps);
}

std::string to_upper(std::string_view utf8) {
  auto cps = decode(utf8);
  for (auto& c : cps) c = to_upper(c);
  return encode(cps);
}

std::string capitalize(std::string_view utf8) {
  auto cps = decode(utf8);
  if (!cps.empty()) cps[0] = to_upper(cps[0]);
  return encode(cps);
}

std::string fold(std::string_view utf8) {
  auto cps = decode(utf8);
  for (auto& c : cps) {
    c = to_lower(c);
    if (c == U'ѝ') c = U'и';
    if (c == U'ё') c = U'е';
  }
  return encode(cps);
}

namespace {

const char* translit_common(char32_t c) {
  switch (c) {
    case U'а': return "A";
    case U'б': return "B";
    case U'в': return "V";
    case U'г': return "G";
    case U'д': return "D";
    case U'е': return "E";
    case U'ё': return "E";
    case U'ж': return "ZH";
    case U'з': return "Z";
    case U'и': return "I";
    case U'ѝ': return "I";
    case U'й': return "Y";
    case U'к': return "K";
    case U'л': return "L";
    case U'м': return "M";
    case U'н': return "N";
    case U'о': return "O";
    case U'п': return "P";
    case U'р': return "R";
    case U'с': return "S";
    case U'т': return "T";
    case U'у': return "U";
    case U'ф': return "F";
    case U'ц': return "TS";
    case U'ч': return "CH";
    case U'ш': return "SH";
    case U'ы': return "Y";
    case U'э': return "E";
    case U'ю': return "YU";
    case U'я': return "YA";
    case U'ѣ': return "E";
    default: return nullptr;
  }
}

bool is_letter(char32_t c) {
  return (c >= U'a' && c <= U'z') || (c >= U'A' && c <= U'Z') || (c >= U'0' && c <= U'9') ||
         (c >= 0x0400 && c <= 0x04FF);
}

}  // namespace

std::string transliterate(std::string_view utf8, Language lang) {
  std::string out;
  for (char32_t c : decode(utf8)) {
    c = to_lower(c);
    if (c == U' ' || c == U'-') {
      if (!out.empty() && out.back() != '-') out.push_back('-');
      continue;
    }
    if (c < 0x80) {
      if ((c >= U'a' && c <= U'z') || (c >= U'0' && c <= U'9'))
        out.push_back(static_cast<char>(to_upper(c)));
      continue;
    }
    if (lang == Language::bg) {
      if (c == U'х') { out += "H"; continue; }
      if (c == U'щ') { out += "SHT"; continue; }
      if (c == U'ъ') { out += "A"; continue; }
      if (c == U'ь') { out += "Y"; continue; }
    } else {
      if (c == U'х') { out += "KH"; continue; }
      if (c == U'щ') { out += "SHCH"; continue; }
      if (c == U'ъ' || c == U'ь') continue;
    }
    if (const char* t = translit_common(c)) out += t;
  }
  while (!out.empty() && out.back() == '-') out.pop_back();
  return out;
}

std::vector<std::uint32_t> collation_key(std::string_view utf8) {
  std::vector<std::uint32_t> key;
  for (char32_t c : decode(utf8)) {
    c = to_lower(c);
    if (c == U'ѝ') c = U'и';
    if (c == U'ё') {
      key.push_back(static_cast<std::uint32_t>(U'е') * 2 + 1);
      continue;
    }
    key.push_back(static_cast<std::uint32_t>(c) * 2);
  }
  return key;
}

int collate(std::string_view a, std::string_view b) {
  auto ka = collation_key(a);
  auto kb = collation_key(b);
  if (ka < kb) return -1;
  if (kb < ka) return 1;
  return 0;
}

bool contains_space(std::string_view utf8) { return utf8.find(' ') != std::string_view::npos; }

bool contains_whole_word(std::string_view hay, std::string_view needle) {
  if (needle.empty()) return false;
  auto h = decode(hay);
  auto n = decode(needle);
  for (std::size_t pos = h.find(n); pos != std::u32string::npos; pos = h.find(n, pos + 1)) {
    bool left = pos == 0 || !is_letter(h[pos - 1]);
    std::size_t end = pos + n.size();
    bool right = end == h.size() || !is_letter(h[end]);
    if (left && right) return true;
  }
  return false;
}

}  // namespace text
}  // namespace sedict
