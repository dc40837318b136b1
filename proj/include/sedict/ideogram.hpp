#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "sedict/sign_types.hpp"

namespace sedict {

enum class Ideogram {
  filled_square,
  open_square,
  async_mark,
  disjunctive_mark,
  filled_circle,
  false_mark,
  empty_mark,
  polarization_start,
  polarization_step,
  direction_arrow,
};

inline constexpr std::array<Ideogram, 10> kAllIdeograms = {
    Ideogram::filled_square,      Ideogram::open_square,       Ideogram::async_mark,
    Ideogram::disjunctive_mark,   Ideogram::filled_circle,     Ideogram::false_mark,
    Ideogram::empty_mark,         Ideogram::polarization_start, Ideogram::polarization_step,
    Ideogram::direction_arrow,
};

Ideogram ideogram_for(SignType t);
std::string_view to_string(Ideogram i);
std::optional<Ideogram> ideogram_from_string(std::string_view s);

// Display glyph per ideogram. The defaults for the asynchronous, false and empty marks are placeholders.
class GlyphSet {
 public:
  static GlyphSet defaults();

  const std::string& of(Ideogram i) const { return glyphs_.at(i); }
  const std::string& of(SignType t) const { return of(ideogram_for(t)); }
  void set(Ideogram i, std::string glyph) { glyphs_[i] = std::move(glyph); }
  // True when no two sign types share a glyph.
  bool sign_glyphs_distinct() const;

  bool operator==(const GlyphSet&) const = default;

 private:
  std::map<Ideogram, std::string> glyphs_;
};

}  // namespace sedict
