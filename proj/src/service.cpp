#include "sedict/service.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "sedict/http.hpp"

namespace sedict {

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw IoError("cannot read " + p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ApiResponse fail(int status, std::string_view message) {
  return {status, json{{"error", message}}.dump() + "\n"};
}

bool valid_slug(std::string_view slug) {
  if (slug.empty()) return false;
  for (char c : slug)
    if (!((c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '-')) return false;
  return true;
}

std::optional<std::size_t> parse_count(std::string_view s) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

}  // namespace

ApiService::ApiService(fs::path out_dir, std::size_t default_hits_per_page)
    : root_(std::move(out_dir)), hits_per_page_(default_hits_per_page) {
  alpha_ru_ = slurp(root_ / "index" / "alpha_ru.json");
  alpha_bg_ = slurp(root_ / "index" / "alpha_bg.json");
  legend_ = slurp(root_ / "assets" / "legend.json");
  try {
    index_ = index_from_json(alpha_ru_, alpha_bg_, slurp(root_ / "index" / "combined.json"));
  } catch (const std::runtime_error& e) {
    throw IoError(e.what());
  }
}

ApiResponse ApiService::page(std::string_view slug) const {
  if (!valid_slug(slug)) return fail(404, "no such page");
  fs::path p = root_ / "pages" / (std::string(slug) + ".json");
  std::ifstream in(p, std::ios::binary);
  if (!in) return fail(404, "no such page");
  std::ostringstream ss;
  ss << in.rdbuf();
  return {200, ss.str()};
}

std::string lookup_to_json(const LookupResult& r) {
  json js;
  switch (r.status) {
    case LookupResult::Status::found: js["status"] = "found"; break;
    case LookupResult::Status::only_on_rows: js["status"] = "only_on_rows"; break;
    case LookupResult::Status::not_found: js["status"] = "not_found"; break;
  }
  js["slug"] = r.status == LookupResult::Status::found ? json(r.slug) : json(nullptr);
  js["suggestions"] = r.suggestions;
  return js.dump() + "\n";
}

ApiResponse ApiService::lookup(std::string_view lemma, std::string_view lang) const {
  if (lemma.empty()) return fail(400, "empty lemma");
  Language l;
  try {
    l = language_from_string(lang);
  } catch (const std::invalid_argument&) {
    return fail(400, "lang must be ru or bg");
  }
  LookupResult r = sedict::lookup(index_, lemma, l);
  return {r.status == LookupResult::Status::not_found ? 404 : 200, lookup_to_json(r)};
}

ApiResponse ApiService::search(std::string_view q, std::string_view n, std::string_view page) const {
  std::size_t hits = hits_per_page_, number = 1;
  if (!n.empty()) {
    auto v = parse_count(n);
    if (!v) return fail(400, "n must be a positive integer");
    hits = *v;
  }
  if (!page.empty()) {
    auto v = parse_count(page);
    if (!v) return fail(400, "page must be a positive integer");
    number = *v;
  }
  try {
    return {200, search_page_to_json(combined_search(index_, q, hits, number))};
  } catch (const std::invalid_argument& e) {
    return fail(400, e.what());
  }
}

ApiResponse ApiService::index(std::string_view lang) const {
  if (lang == "ru") return {200, alpha_ru_};
  if (lang == "bg") return {200, alpha_bg_};
  return fail(404, "no such index");
}

ApiResponse ApiService::legend() const { return {200, legend_}; }

void mount(httplib::Server& server, const ApiService& api) {
  auto reply = [](httplib::Response& res, const ApiResponse& r) {
    res.status = r.status;
    res.set_content(r.body, r.content_type + "; charset=utf-8");
  };
  server.Get(R"(/api/page/([^/]+))", [&api, reply](const httplib::Request& req, httplib::Response& res) {
    reply(res, api.page(req.matches[1].str()));
  });
  server.Get("/api/lookup", [&api, reply](const httplib::Request& req, httplib::Response& res) {
    reply(res, api.lookup(req.get_param_value("lemma"), req.get_param_value("lang")));
  });
  server.Get("/api/search", [&api, reply](const httplib::Request& req, httplib::Response& res) {
    reply(res, api.search(req.get_param_value("q"), req.get_param_value("n"), req.get_param_value("page")));
  });
  server.Get(R"(/api/index/([^/]+))", [&api, reply](const httplib::Request& req, httplib::Response& res) {
    reply(res, api.index(req.matches[1].str()));
  });
  server.Get("/api/legend", [&api, reply](const httplib::Request&, httplib::Response& res) { reply(res, api.legend()); });
  server.set_mount_point("/", api.root().string());
}

bool serve(const BuildConfig& cfg, const std::string& host) {
  ApiService api(cfg.out, cfg.hits_per_page);
  httplib::Server server;
  mount(server, api);
  return server.listen(host, cfg.port);
}

}  // namespace sedict
