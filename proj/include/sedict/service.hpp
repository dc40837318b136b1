#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "sedict/build.hpp"
#include "sedict/search.hpp"

namespace sedict {

struct ApiResponse {
  int status = 200;
  std::string body;
  std::string content_type = "application/json";
};

// Read-only view of a built output tree, answering the JSON API.
class ApiService {
 public:
  // Throws IoError when the index files are missing or unreadable.
  explicit ApiService(std::filesystem::path out_dir, std::size_t default_hits_per_page = 10);

  ApiResponse page(std::string_view slug) const;
  ApiResponse lookup(std::string_view lemma, std::string_view lang) const;
  // Empty n/page strings take the defaults.
  ApiResponse search(std::string_view q, std::string_view n, std::string_view page) const;
  ApiResponse index(std::string_view lang) const;
  ApiResponse legend() const;

  const SearchIndex& search_index() const { return index_; }
  const std::filesystem::path& root() const { return root_; }

 private:
  std::filesystem::path root_;
  std::size_t hits_per_page_;
  SearchIndex index_;
  std::string alpha_ru_, alpha_bg_, legend_;
};

std::string lookup_to_json(const LookupResult& r);

// Blocks serving `cfg.out` on `cfg.port` until the process is stopped.
// Returns false when the port cannot be bound.
bool serve(const BuildConfig& cfg, const std::string& host = "127.0.0.1");

}  // namespace sedict
