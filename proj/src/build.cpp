#include "sedict/build.hpp"

#include <fstream>
#include <future>
#include <set>
#include <sstream>
#include <unistd.h>

#include "json.hpp"
#include "sedict/emit.hpp"

namespace sedict {

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

constexpr std::string_view kStylesheet = R"(body { font-family: serif; margin: 1em auto; max-width: 62em; }
.sed-header h1 { font-size: 1.4em; text-align: center; }
.sed-row { display: flex; flex-wrap: wrap; gap: .4em 1.2em; margin: .5em 0; }
.sed-nodal { justify-content: space-between; }
.sed-sign { white-space: nowrap; }
.sed-word, .sed-rubric, .sed-ted, .sed-ir { cursor: pointer; }
.sed-word[data-color="c0"] { color: #b2182b; }
.sed-word[data-color="c1"] { color: #2166ac; }
.sed-word[data-color="c2"] { color: #1b7837; }
.sed-word[data-color="c3"] { color: #762a83; }
.sed-word[data-color="c4"] { color: #e08214; }
.sed-word[data-color="c5"] { color: #01665e; }
.sed-word[data-color="c6"] { color: #8c510a; }
.sed-word[data-color="c7"] { color: #c51b7d; }
.sed-word[data-color="c8"] { color: #4d9221; }
.sed-word[data-color="c9"] { color: #542788; }
.sed-word[data-color="c10"] { color: #d6604d; }
.sed-word[data-color="c11"] { color: #4393c3; }
.sed-divider { text-align: center; color: #666; }
.sed-rule { margin-top: 2em; }
.sed-reference-base table { font-size: .85em; }
)";

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw IoError("cannot read " + p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::size_t type_index(SignType t) {
  for (std::size_t i = 0; i < kAllSignTypes.size(); ++i)
    if (kAllSignTypes[i] == t) return i;
  return 0;
}

}  // namespace

Diagnostics check_config(const BuildConfig& cfg) {
  Diagnostics out;
  if (!(cfg.false_threshold > 0.0 && cfg.false_threshold <= 1.0))
    out.push_back(error("config-range", "false_threshold", "must lie in (0, 1]"));
  if (cfg.max_chain_depth < 1) out.push_back(error("config-range", "max_chain_depth", "must be at least 1"));
  if (cfg.hits_per_page < 1) out.push_back(error("config-range", "hits_per_page", "must be at least 1"));
  if (cfg.port < 1 || cfg.port > 65535) out.push_back(error("config-range", "port", "must lie in 1..65535"));
  return out;
}

void apply_config_file(BuildConfig& cfg, const fs::path& file) {
  std::string text = read_file(file);
  json js;
  try {
    js = json::parse(text);
  } catch (const json::exception& e) {
    throw std::invalid_argument(file.string() + ": " + e.what());
  }
  if (!js.is_object()) throw std::invalid_argument(file.string() + ": expected an object");
  try {
    for (const auto& [key, value] : js.items()) {
      if (key == "input") cfg.input = value.get<std::string>();
      else if (key == "out") cfg.out = value.get<std::string>();
      else if (key == "admit_pre_registered") cfg.admit_pre_registered = value.get<bool>();
      else if (key == "max_chain_depth") cfg.max_chain_depth = value.get<int>();
      else if (key == "false_threshold") cfg.false_threshold = value.get<double>();
      else if (key == "hits_per_page") cfg.hits_per_page = value.get<std::size_t>();
      else if (key == "port") cfg.port = value.get<int>();
      else throw std::invalid_argument(file.string() + ": unknown key " + key);
    }
  } catch (const json::exception& e) {
    throw std::invalid_argument(file.string() + ": " + e.what());
  }
}

OrthographyTable load_orthography(const fs::path& input) {
  fs::path p = input / "orthography.json";
  if (!fs::exists(p)) return default_orthography();
  return parse_orthography(read_file(p));
}

BuildResult run_build(const LexiconModel& model, const BuildConfig& cfg, const OrthographyTable& orthography) {
  BuildResult result;
  auto& report = result.report;
  report.diagnostics = check_config(cfg);
  if (has_errors(report.diagnostics)) return result;

  ClassifierConfig ccfg;
  ccfg.admit_pre_registered = cfg.admit_pre_registered;
  ccfg.false_threshold = cfg.false_threshold;
  ccfg.orthography = orthography;
  result.graph = classify_all(model, ccfg);
  report.diagnostics.insert(report.diagnostics.end(), result.graph.diagnostics.begin(),
                            result.graph.diagnostics.end());
  for (const auto& s : result.graph.signs) {
    ++report.sign_counts[type_index(s.type)];
    if (s.detected) ++report.detected_false;
  }
  if (has_errors(report.diagnostics)) return result;

  auto headers = select_headers(model, result.graph, &report.diagnostics);
  PageConfig pcfg;
  pcfg.max_chain_depth = cfg.max_chain_depth;
  std::vector<std::future<CompileResult>> jobs;
  jobs.reserve(headers.size());
  for (const auto& h : headers)
    jobs.push_back(std::async(std::launch::async | std::launch::deferred,
                              [&, h] { return compile_page(h, result.graph, model, pcfg); }));

  std::set<std::string> slugs;
  for (auto& job : jobs) {
    CompileResult cr = job.get();
    report.diagnostics.insert(report.diagnostics.end(), cr.diagnostics.begin(), cr.diagnostics.end());
    if (!cr.page) continue;
    Page page = std::move(*cr.page);
    std::string base = page.slug;
    for (int n = 2; !slugs.insert(page.slug).second; ++n) page.slug = base + "-" + std::to_string(n);
    if (page.slug != base)
      report.diagnostics.push_back(info("slug-renamed", base, "duplicate slug emitted as " + page.slug));
    result.pages.push_back(std::move(page));
  }
  if (has_errors(report.diagnostics)) {
    result.pages.clear();
    return result;
  }

  for (const auto& p : result.pages) {
    report.pages.push_back({p.slug, p.title, p.popup_count(), p.payloads.size(), displayed_word_count(p)});
    if (p.slug == kReferencePageSlug) report.reference_page_popups = p.popup_count();
  }
  result.index = build_indices(result.pages, model);
  return result;
}

std::map<std::string, std::string> render_output(const BuildResult& result) {
  std::map<std::string, std::string> files;
  GlyphSet glyphs = GlyphSet::defaults();
  for (const auto& p : result.pages) {
    files["pages/" + p.slug + ".html"] = emit_html(p, glyphs);
    files["pages/" + p.slug + ".xml"] = emit_xml(p);
    files["pages/" + p.slug + ".json"] = page_to_json(p);
  }
  files["index/alpha_ru.json"] = alpha_to_json(result.index.ru);
  files["index/alpha_bg.json"] = alpha_to_json(result.index.bg);
  files["index/combined.json"] = combined_to_json(result.index);
  files["assets/legend.json"] = legend_to_json(reference_base(glyphs));
  files["assets/sedict.css"] = std::string(kStylesheet);
  files["trace.json"] = trace_to_json(result.graph);
  files["report.json"] = report_to_json(result.report);
  files["report.txt"] = report_to_text(result.report);
  return files;
}

void write_output(const std::map<std::string, std::string>& files, const fs::path& out) {
  fs::path target = fs::absolute(out).lexically_normal();
  if (target.filename().empty()) target = target.parent_path();
  fs::path tmp = target.parent_path() / (target.filename().string() + ".tmp-" + std::to_string(::getpid()));
  std::error_code ec;
  try {
    fs::create_directories(target.parent_path());
    fs::remove_all(tmp);
    for (const auto& [rel, content] : files) {
      fs::path p = tmp / rel;
      fs::create_directories(p.parent_path());
      std::ofstream os(p, std::ios::binary);
      os << content;
      if (!os) throw IoError("cannot write " + p.string());
    }
    fs::remove_all(target);
    fs::rename(tmp, target);
  } catch (const fs::filesystem_error& e) {
    fs::remove_all(tmp, ec);
    throw IoError(e.what());
  } catch (...) {
    fs::remove_all(tmp, ec);
    throw;
  }
}

std::string report_to_json(const BuildReport& report) {
  json counts = json::object();
  for (std::size_t i = 0; i < kAllSignTypes.size(); ++i) counts[std::string(to_string(kAllSignTypes[i]))] = report.sign_counts[i];
  json pages = json::array();
  for (const auto& p : report.pages)
    pages.push_back({{"slug", p.slug},
                     {"title", p.title},
                     {"popups", p.popups},
                     {"payloads", p.payloads},
                     {"displayed_words", p.displayed_words}});
  json diags = json::array();
  for (const auto& d : report.diagnostics)
    diags.push_back({{"severity", to_string(d.severity)}, {"code", d.code}, {"subject", d.subject}, {"message", d.message}});
  json ref = json::object();
  ref["slug"] = kReferencePageSlug;
  ref["popups"] = report.reference_page_popups ? json(*report.reference_page_popups) : json(nullptr);
  ref["reference_magnitude"] = kReferencePopupMagnitude;
  return json{{"page_count", report.pages.size()},
              {"pages", pages},
              {"sign_counts", counts},
              {"detected_false", report.detected_false},
              {"reference_page", ref},
              {"diagnostics", diags}}
             .dump(2) +
         "\n";
}

std::string report_to_text(const BuildReport& report) {
  std::ostringstream os;
  os << "pages: " << report.pages.size() << "\n";
  for (const auto& p : report.pages)
    os << "  " << p.slug << "  " << p.title << "  popups=" << p.popups << " words=" << p.displayed_words << "\n";
  os << "signs:\n";
  for (std::size_t i = 0; i < kAllSignTypes.size(); ++i)
    os << "  " << to_string(kAllSignTypes[i]) << ": " << report.sign_counts[i] << "\n";
  os << "detected false friends: " << report.detected_false << "\n";
  os << kReferencePageSlug << " popups: ";
  if (report.reference_page_popups) os << *report.reference_page_popups;
  else os << "n/a";
  os << " (reference " << kReferencePopupMagnitude << ")\n";
  os << "diagnostics: " << report.diagnostics.size() << "\n";
  for (const auto& d : report.diagnostics) os << "  " << format(d) << "\n";
  return os.str();
}

}  // namespace sedict
