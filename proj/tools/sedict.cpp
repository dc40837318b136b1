#include <cstdlib>
#include <iostream>

#include "CLI11.hpp"
#include "sedict/build.hpp"
#include "sedict/service.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kInvalid = 1;
constexpr int kIo = 2;

void print(const sedict::Diagnostics& ds, std::ostream& os) {
  for (const auto& d : ds) os << sedict::format(d) << "\n";
}

int load(const sedict::BuildConfig& cfg, sedict::LoadResult& out) {
  out = sedict::load_lexicon_dir(cfg.input);
  if (!out.ok()) {
    print(out.diagnostics, std::cerr);
    return kInvalid;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Russian-Bulgarian comparative dictionary compiler"};
  app.require_subcommand(1);
  app.fallthrough();

  sedict::BuildConfig cfg;
  std::string input = cfg.input.string(), out = cfg.out.string();
  app.add_option("--input", input, "lexicon source directory");
  app.add_option("--out", out, "output directory");
  app.add_option("--port", cfg.port, "serve port");
  app.add_option("--hits-per-page", cfg.hits_per_page, "default search page size");
  app.add_flag("--admit-pre-registered", cfg.admit_pre_registered, "treat pre-registered borrowings as equivalents");
  app.add_option("--max-chain-depth", cfg.max_chain_depth, "longest implicative chain");
  app.add_option("--false-threshold", cfg.false_threshold, "normalized edit distance for false friends");

  auto* validate = app.add_subcommand("validate", "check the lexicon and list diagnostics");
  auto* build = app.add_subcommand("build", "compile pages and indices into the output directory");
  auto* serve = app.add_subcommand("serve", "serve a built output directory with the JSON API");
  auto* report = app.add_subcommand("report", "print the build report without writing output");
  bool as_json = false, trace = false;
  report->add_flag("--json", as_json, "report as JSON");
  report->add_flag("--trace", trace, "print the classifier evidence trace instead");

  CLI11_PARSE(app, argc, argv);
  cfg.input = input;
  cfg.out = out;

  try {
    if (const char* path = std::getenv("SED_CONFIG"); path && *path) sedict::apply_config_file(cfg, path);
    if (auto ds = sedict::check_config(cfg); !ds.empty()) {
      print(ds, std::cerr);
      return kInvalid;
    }

    if (*serve) {
      std::cout << "serving " << cfg.out.string() << " on http://127.0.0.1:" << cfg.port << "/" << std::endl;
      if (!sedict::serve(cfg)) {
        std::cerr << "cannot listen on port " << cfg.port << "\n";
        return kIo;
      }
      return kOk;
    }

    sedict::LoadResult loaded;
    if (int rc = load(cfg, loaded); rc != kOk) return rc;
    if (*validate) {
      std::cout << "ok: " << loaded.model.lexemes.size() << " lexemes, " << loaded.model.senses.size() << " senses, "
                << loaded.model.pairs.size() << " pairs\n";
      return kOk;
    }

    auto result = sedict::run_build(loaded.model, cfg, sedict::load_orthography(cfg.input));
    if (*report) {
      if (trace) std::cout << sedict::trace_to_json(result.graph);
      else std::cout << (as_json ? sedict::report_to_json(result.report) : sedict::report_to_text(result.report));
      return result.ok() ? kOk : kInvalid;
    }
    if (*build) {
      if (!result.ok()) {
        print(result.report.diagnostics, std::cerr);
        return kInvalid;
      }
      sedict::write_output(sedict::render_output(result), cfg.out);
      std::cout << sedict::report_to_text(result.report);
      return kOk;
    }
  } catch (const sedict::IoError& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return kIo;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid: " << e.what() << "\n";
    return kInvalid;
  }
  return kOk;
}
