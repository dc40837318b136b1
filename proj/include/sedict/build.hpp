#pragma once

#include <array>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "sedict/classifier.hpp"
#include "sedict/page.hpp"
#include "sedict/search.hpp"

namespace sedict {

struct BuildConfig {
  std::filesystem::path input = "data/seed";
  std::filesystem::path out = "out";
  bool admit_pre_registered = false;
  int max_chain_depth = 4;
  double false_threshold = 0.25;
  std::size_t hits_per_page = 10;
  int port = 8080;
};

// Range checks: threshold in (0, 1], depth >= 1, hits per page >= 1, port in 1..65535.
Diagnostics check_config(const BuildConfig& cfg);
// Overlays keys present in a JSON config file. Throws IoError when unreadable,
// std::invalid_argument on malformed content or unknown keys.
void apply_config_file(BuildConfig& cfg, const std::filesystem::path& file);

struct PageSummary {
  std::string slug;
  std::string title;
  std::size_t popups = 0;
  std::size_t payloads = 0;
  std::size_t displayed_words = 0;
};

struct BuildReport {
  std::vector<PageSummary> pages;
  std::array<std::size_t, 7> sign_counts{};  // indexed like kAllSignTypes
  std::size_t detected_false = 0;
  std::optional<std::size_t> reference_page_popups;  // ЛГАТЬ-ЛЪЖА, when built
  Diagnostics diagnostics;
};

inline constexpr std::size_t kReferencePopupMagnitude = 64;
inline constexpr const char* kReferencePageSlug = "LGAT-LAZHA";

struct BuildResult {
  SignGraph graph;
  std::vector<Page> pages;
  SearchIndex index;
  BuildReport report;

  bool ok() const { return !has_errors(report.diagnostics); }
};

// Reads orthography.json from the input directory when present, the defaults otherwise.
OrthographyTable load_orthography(const std::filesystem::path& input);

// In-memory pipeline: classify, select headers, compile pages, build indices.
BuildResult run_build(const LexiconModel& model, const BuildConfig& cfg,
                      const OrthographyTable& orthography = default_orthography());

// Output tree as relative path -> file content.
std::map<std::string, std::string> render_output(const BuildResult& result);
// Writes the tree into a sibling temp directory and renames it over `out`. Throws IoError.
void write_output(const std::map<std::string, std::string>& files, const std::filesystem::path& out);

std::string report_to_json(const BuildReport& report);
std::string report_to_text(const BuildReport& report);

}  // namespace sedict
