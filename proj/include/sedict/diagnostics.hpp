#pragma once

#include <string>
#include <vector>

namespace sedict {

enum class Severity { error, warning, info };

struct Diagnostic {
  Severity severity = Severity::error;
  std::string code;     // stable key, e.g. "same-language-pair"
  std::string subject;  // id of the offending lexeme, sense, pair or page
  std::string message;

  bool operator==(const Diagnostic&) const = default;
};

using Diagnostics = std::vector<Diagnostic>;

inline Diagnostic error(std::string code, std::string subject, std::string message) {
  return {Severity::error, std::move(code), std::move(subject), std::move(message)};
}
inline Diagnostic warning(std::string code, std::string subject, std::string message) {
  return {Severity::warning, std::move(code), std::move(subject), std::move(message)};
}
inline Diagnostic info(std::string code, std::string subject, std::string message) {
  return {Severity::info, std::move(code), std::move(subject), std::move(message)};
}

std::string_view to_string(Severity s);

// "<severity> <code> [<subject>] <message>", one line per diagnostic.
std::string format(const Diagnostic& d);

inline bool has_errors(const Diagnostics& ds) {
  for (const auto& d : ds)
    if (d.severity == Severity::error) return true;
  return false;
}

}  // namespace sedict
