#pragma once

#include <array>
#include <optional>
#include <string_view>

namespace sedict {

enum class SignType {
  SynchronousHomogeneous,
  SynchronousHeterogeneous,
  Asynchronous,
  Disjunctive,
  Diffuse,
  False,
  Empty,
};

inline constexpr std::array<SignType, 7> kAllSignTypes = {
    SignType::SynchronousHomogeneous, SignType::SynchronousHeterogeneous, SignType::Asynchronous,
    SignType::Disjunctive,            SignType::Diffuse,                  SignType::False,
    SignType::Empty,
};

// Arrow from the unique member outward; left is always the Russian side.
enum class Direction { none, left_to_right, right_to_left };

std::string_view to_string(SignType t);
std::optional<SignType> sign_type_from_string(std::string_view s);
std::string_view to_string(Direction d);
std::optional<Direction> direction_from_string(std::string_view s);

inline constexpr bool is_synchronous(SignType t) {
  return t == SignType::SynchronousHomogeneous || t == SignType::SynchronousHeterogeneous;
}
inline constexpr bool is_leaf(SignType t) { return t == SignType::Diffuse || t == SignType::Disjunctive; }
inline constexpr bool is_warning(SignType t) { return t == SignType::False || t == SignType::Empty; }

}  // namespace sedict
