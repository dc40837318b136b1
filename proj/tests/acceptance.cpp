#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "fixtures.hpp"
#include "sedict/chains.hpp"
#include "sedict/emit.hpp"
#include "sedict/headers.hpp"
#include "sedict/search.hpp"

using namespace sedict;

namespace {

constexpr double kClassifyBudgetSeconds = 1.0;
constexpr int kRandomPairs = 1000;
constexpr std::size_t kMinPages = 20;

// Collects failures for one criterion; the first few end up on the result line.
struct Check {
  std::vector<std::string> failures;
  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

int failed = 0;

void report(const std::string& name, const Check& c, const std::string& detail) {
  bool ok = c.failures.empty();
  if (!ok) ++failed;
  std::cout << (ok ? "PASS " : "FAIL ") << name << ": " << detail;
  for (std::size_t i = 0; i < c.failures.size() && i < 5; ++i) std::cout << (i ? "; " : " | ") << c.failures[i];
  if (c.failures.size() > 5) std::cout << "; +" << c.failures.size() - 5 << " more";
  std::cout << "\n";
}

void guarded(const std::string& name, const std::function<std::string(Check&)>& body) {
  Check c;
  std::string detail;
  try {
    detail = body(c);
  } catch (const std::exception& e) {
    c.failures.push_back(std::string("exception: ") + e.what());
  }
  report(name, c, detail);
}

std::vector<std::string> ids(const std::vector<PageSign>& row) {
  std::vector<std::string> out;
  for (const auto& s : row) out.push_back(s.id);
  return out;
}

const Page* page_by_slug(const std::string& slug) {
  for (const auto& p : fixtures::seed_build().pages)
    if (p.slug == slug) return &p;
  return nullptr;
}

bool has_chain(const Page& p, const std::vector<std::string>& signs, const std::vector<std::string>& links) {
  for (const auto& c : p.chains)
    if (c.signs == signs && c.links == links) return true;
  return false;
}

std::string golden_classification(Check& c) {
  struct Golden {
    const char* pair;
    SignType type;
    bool admit = false;
  };
  const std::vector<Golden> golden = {
      {"lgat-lazha", SignType::SynchronousHomogeneous},
      {"vrat-lazha", SignType::SynchronousHeterogeneous},
      {"ubivat-ubivam", SignType::SynchronousHomogeneous},
      {"grozit-grozya", SignType::SynchronousHomogeneous},
      {"falshivit-falshivya", SignType::SynchronousHeterogeneous},
      {"veshat-besya", SignType::SynchronousHeterogeneous},
      {"kaznit-ekzekutiram", SignType::SynchronousHeterogeneous},
      {"ekzekutirovat-ekzekutiram", SignType::SynchronousHomogeneous, true},
      {"lgat-kleveta", SignType::Asynchronous},
      {"obmanyvat-lazha", SignType::Asynchronous},
      {"portit-razvalyam", SignType::Asynchronous},
      {"grozya-urodovat", SignType::Disjunctive},
      {"grozya-portit", SignType::Disjunctive},
      {"grozya-obezobrazivat", SignType::Disjunctive},
      {"zabluzhdavam", SignType::Diffuse},
      {"lazha-zabluzhdenie", SignType::Diffuse},
      {"udit", SignType::Diffuse},
      {"lazha-lazha", SignType::False},
      {"lyzha-lazha", SignType::False},
      {"branit-branya", SignType::False},
      {"zaballotirovat-balotiram", SignType::False},
      {"naposledok-naposledak", SignType::Empty},
      {"zaklyuchit-zaklyucha", SignType::Empty},
      {"posyagat-posyagam", SignType::Empty},
      {"svalivat-svalyam", SignType::Empty},
  };
  const auto& m = fixtures::seed();
  ClassifierConfig off, on;
  on.admit_pre_registered = true;
  int correct = 0;
  auto start = std::chrono::steady_clock::now();
  for (const auto& g : golden) {
    const DeclaredPair* p = m.find_pair(g.pair);
    if (!p) {
      c.expect(false, std::string("missing pair ") + g.pair);
      continue;
    }
    auto r = classify_pair(*p, m, g.admit ? on : off);
    bool ok = r.sign && r.sign->type == g.type;
    c.expect(ok, std::string(g.pair) + " got " + (r.sign ? std::string(to_string(r.sign->type)) : "none"));
    correct += ok;
  }
  // flag-off, the borrowed verb gets no homogeneous sign
  auto gated = classify_pair(*m.find_pair("ekzekutirovat-ekzekutiram"), m, off);
  c.expect(!gated.sign || gated.sign->type != SignType::SynchronousHomogeneous,
           "ekzekutirovat-ekzekutiram homogeneous with the flag off");
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  c.expect(secs < kClassifyBudgetSeconds, "runtime " + std::to_string(secs) + " s");
  std::ostringstream out;
  out << correct << "/" << golden.size() << " pairs, " << secs << " s (budget " << kClassifyBudgetSeconds << " s)";
  return out.str();
}

std::string lgat_page(Check& c) {
  const Page* p = page_by_slug("LGAT-LAZHA");
  if (!p) {
    c.expect(false, "no LGAT-LAZHA page");
    return "";
  }
  using V = std::vector<std::string>;
  c.expect(p->title == "ЛГАТЬ ■ ЛЪЖА", "title " + p->title);
  c.expect(ids(p->row(1)) == V{"lgat-lazha"}, "row 1");
  c.expect(ids(p->row(2)) == V{"lgat-kleveta", "obmanyvat-lazha"}, "row 2");
  c.expect(ids(p->row(3)) == V{"klevetat-kleveta", "obmanyvat-mamya"}, "row 3");
  c.expect(ids(p->row(4)) == V{"lazha-zabluzhdenie"}, "row 4");
  c.expect(ids(p->row(5)) == V{"lazha-lazha", "lyzha-lazha"}, "row 5");
  c.expect(p->ir && p->ir->display() == "не правда", "header IR");
  if (p->row(2).size() == 2) {
    c.expect(p->row(2)[0].ir && p->row(2)[0].ir->display() == "опозорен/опорочен", "IR of лгать-клеветя");
    c.expect(p->row(2)[1].ir && p->row(2)[1].ir->display() == "обманут/излъган", "IR of лъжа-обманывать");
  }
  c.expect(has_chain(*p, {"lgat-kleveta", "klevetat-kleveta"}, {"ru.lgat.2", "bg.kleveta.1", "ru.klevetat.1"}),
           "chain лгать-клеветя-клеветать");
  c.expect(has_chain(*p, {"obmanyvat-lazha", "obmanyvat-mamya"}, {"bg.lazha.2", "ru.obmanyvat.1", "bg.mamya.1"}),
           "chain лъжа-обманывать-мамя");
  c.expect(has_chain(*p, {"lazha-zabluzhdenie"}, {"bg.lazha.2"}), "diffuse leaf лъжа-вводить в заблуждение");
  c.expect(p->chains.size() == 3, "chain count " + std::to_string(p->chains.size()));

  // the infidelity chain stops before the neutral sense of изменям
  int through = 0;
  for (const auto& page : fixtures::seed_build().pages)
    for (const auto& ch : page.chains) {
      if (std::find(ch.signs.begin(), ch.signs.end(), "izmenyat-izneveryavam") == ch.signs.end()) continue;
      ++through;
      c.expect(std::find(ch.links.begin(), ch.links.end(), "bg.izmenyam.1") == ch.links.end(),
               page.slug + ": chain reaches изменям 'правя друг'");
      c.expect(std::find(ch.signs.begin(), ch.signs.end(), "izmenyat-izmenyam") == ch.signs.end(),
               page.slug + ": chain takes the neutral izmenyat-izmenyam sign");
    }
  c.expect(through > 0, "no chain through изневерявам");
  return "rows 1-5, 3 IR shifts, 2 chains plus the row 4 leaf, " + std::to_string(through) + " infidelity chain(s) stop before изменям 'правя друг'";
}

std::string routing(Check& c) {
  struct Route {
    const char* lemma;
    Language lang;
    const char* slug;
    const char* title;
  };
  const std::vector<Route> routes = {
      {"арестовать", Language::ru, "ARESTOVAT-ARESTUVAM", "АРЕСТОВАТЬ ■ АРЕСТУВАМ"},
      {"вешать", Language::ru, "VESHAT-BESYA", "ВЕШАТЬ □ БЕСЯ"},
      {"артобстрел", Language::ru, "ARTOBSTREL", "АРТОБСТРЕЛ ● Артиллерийски обстрел"},
      {"артачиться", Language::ru, "ARTACHITSYA", "АРТАЧИТЬСЯ ■■"},
      {"портить", Language::ru, "PORTIT-IZPORTVAM", "ПОРТИТЬ ■ ИЗПОРТВАМ"},
      {"ангажирам", Language::bg, "ANGAZHIROVAT-ANGAZHIRAM", "АНГАЖИРОВАТЬ ■ АНГАЖИРАМ"},
  };
  const auto& index = fixtures::seed_build().index;
  int ok = 0;
  for (const auto& r : routes) {
    auto res = lookup(index, r.lemma, r.lang);
    const Page* p = page_by_slug(res.slug);
    bool good = res.status == LookupResult::Status::found && res.slug == r.slug && p && p->title == r.title;
    c.expect(good, std::string(r.lemma) + " -> " + res.slug + (p ? " \"" + p->title + "\"" : ""));
    ok += good;
  }
  return std::to_string(ok) + "/" + std::to_string(routes.size()) + " lemmas routed";
}

std::string header_format(Check& c) {
  const auto& m = fixtures::seed();
  auto headers = select_headers(m, classify_all(m));
  const std::vector<std::pair<std::string, std::string>> golden = {
      {"ahnut-ahna", "АХНУТЬ ■ (АХНА)"},
      {"obremenyat-obremenyavam", "[БРЕМЕНИТЬ] ОБРЕМЕНЯТЬ ■ ОБРЕМЕНЯВАМ"},
      {"blyudoliz-blyudolizets", "БЛЮДОЛИЗ ■ БЛЮДОЛИЗЕЦ □ ЛИЗОБЛЮД"},
  };
  int ok = 0;
  for (const auto& [key, want] : golden) {
    auto it = std::find_if(headers.begin(), headers.end(), [&](const PageHeader& h) { return h.key == key; });
    std::string got = it == headers.end() ? std::string("<missing>") : format_header(*it);
    c.expect(got == want, key + " -> " + got);
    ok += got == want;
  }
  return std::to_string(ok) + "/" + std::to_string(golden.size()) + " byte-exact with default glyphs";
}

// (a) determinism and exclusivity of the decision branches
void random_pairs(Check& c) {
  std::mt19937 rng(7);
  auto coin = [&] { return std::uniform_int_distribution<int>(0, 1)(rng) == 1; };
  const std::array<Equivalence, 4> eqs = {Equivalence::full, Equivalence::ad_hoc, Equivalence::approximate,
                                          Equivalence::none};
  const std::array<std::pair<const char*, const char*>, 3> lemmas = {
      {{"лажа", "лъжа"}, {"врать", "мамя"}, {"грозить", "грозя"}}};
  const std::vector<std::string> families = {"synchronous.", "asynchronous.", "disjunctive.", "diffuse.", "false.",
                                             "empty."};
  for (int i = 0; i < kRandomPairs; ++i) {
    auto [ru, bg] = lemmas[std::uniform_int_distribution<std::size_t>(0, 2)(rng)];
    fixtures::ModelBuilder b;
    b.lexeme("r", ru, Language::ru, std::string("*root"), coin()).pos =
        coin() ? PartOfSpeech::noun : PartOfSpeech::verb;
    auto& g = b.lexeme("g", bg, Language::bg, std::string(coin() ? "*root" : "*other"), coin());
    g.pos = coin() ? PartOfSpeech::noun : PartOfSpeech::verb;
    g.pre_registered = std::uniform_int_distribution<int>(0, 5)(rng) == 0;
    int rr = std::uniform_int_distribution<int>(1, 3)(rng), gr = std::uniform_int_distribution<int>(1, 3)(rng);
    for (int k = 1; k <= rr; ++k) b.sense("r", k, coin() ? std::optional<TedTop>(TedTop::disorienting) : std::nullopt);
    for (int k = 1; k <= gr; ++k) b.sense("g", k);
    auto& p = b.pair("p", "r." + std::to_string(rr), "g." + std::to_string(gr),
                     eqs[std::uniform_int_distribution<std::size_t>(0, 3)(rng)]);
    if (p.equivalence == Equivalence::approximate && coin()) p.unique = coin() ? Language::ru : Language::bg;
    if (p.equivalence == Equivalence::none && coin()) p.declared = coin() ? SignType::Empty : SignType::False;
    const auto& m = b.done();
    ClassifierConfig cfg;
    cfg.admit_pre_registered = coin();
    auto x = classify_pair(m.pairs[0], m, cfg);
    auto y = classify_pair(m.pairs[0], m, cfg);
    c.expect(x.sign.has_value() == y.sign.has_value() && (!x.sign || *x.sign == *y.sign) &&
                 x.diagnostics == y.diagnostics,
             "draw " + std::to_string(i) + " not deterministic");
    if (!x.sign) {
      c.expect(!x.diagnostics.empty(), "draw " + std::to_string(i) + " unclassified without a diagnostic");
      continue;
    }
    int matching = 0;
    for (const auto& f : families) matching += x.sign->trace.branch.rfind(f, 0) == 0;
    c.expect(matching == 1, "draw " + std::to_string(i) + " branch " + x.sign->trace.branch);
  }
}

// (b) alternation, level monotonicity, halting on a cycle
void chain_shape(Check& c) {
  fixtures::ModelBuilder b;
  b.lexeme("A", "ага", Language::ru, "*a");
  b.lexeme("B", "ага", Language::bg, "*a");
  b.lexeme("C", "вот", Language::ru, "*c");
  b.lexeme("D", "дим", Language::bg, "*d");
  for (auto id : {"A", "B", "C", "D"}) {
    b.sense(id, 1);
    b.sense(id, 2);
  }
  b.pair("1-head", "A.1", "B.1");
  b.pair("2-ad", "A.2", "D.2");
  b.pair("3-dc", "C.2", "D.1");
  b.pair("4-cb", "C.1", "B.2");
  b.pair("5-cd", "C.2", "D.2", Equivalence::ad_hoc);
  const auto& cyclic = b.done();
  auto set = build_chains({{"A.1", "B.1"}, {"1-head"}, 10}, classify_all(cyclic), cyclic);
  bool cut = std::any_of(set.chains.begin(), set.chains.end(),
                         [](const ImplicativeChain& ch) { return ch.cut_reason == CutReason::cycle; });
  c.expect(!set.chains.empty() && cut, "cyclic fixture did not report a cycle cut");

  auto check = [&](const std::vector<ImplicativeChain>& chains, const std::vector<std::string>& head,
                   const LexiconModel& m, const std::string& where) {
    auto levels = assign_polarization(chains, head);
    for (const auto& ch : chains) {
      c.expect(!ch.signs.empty() && ch.links.size() >= ch.signs.size() && ch.links.size() <= ch.signs.size() + 1,
               where + ": malformed chain");
      for (std::size_t i = 0; i + 1 < ch.links.size(); ++i)
        c.expect(m.lexeme_of(*m.find_sense(ch.links[i])).language !=
                     m.lexeme_of(*m.find_sense(ch.links[i + 1])).language,
                 where + ": languages do not alternate");
      for (std::size_t i = 0; i < ch.signs.size(); ++i) {
        int lv = levels.at(ch.signs[i]);
        c.expect(lv >= 1 && lv <= static_cast<int>(i) + 1, where + ": level jumps at " + ch.signs[i]);
        if (i > 0) c.expect(lv <= levels.at(ch.signs[i - 1]) + 1, where + ": level skips at " + ch.signs[i]);
      }
    }
  };
  check(set.chains, {"1-head"}, cyclic, "cyclic");
  for (const auto& p : fixtures::seed_build().pages) check(p.chains, p.header.signs, fixtures::seed(), p.slug);
}

std::string properties(Check& c) {
  const auto& build = fixtures::seed_build();
  std::vector<std::string> done;
  auto part = [&](const std::string& tag, const std::function<void(Check&)>& f) {
    Check sub;
    f(sub);
    for (auto& s : sub.failures) c.failures.push_back("(" + tag + ") " + s);
    done.push_back("(" + tag + ")" + (sub.failures.empty() ? " ok" : " FAIL"));
  };
  part("a", random_pairs);
  part("b", chain_shape);
  part("c", [&](Check& s) {
    for (const auto& p : build.pages) {
      auto missing = missing_payloads(p);
      s.expect(missing.empty(), p.slug + " lacks payload " + (missing.empty() ? "" : missing.front()));
    }
  });
  part("d", [&](Check& s) {
    for (const auto& p : build.pages) {
      std::string xml = emit_xml(p);
      Page back = parse_xml(xml);
      s.expect(back == p && emit_xml(back) == xml, p.slug + " XML round trip differs");
    }
  });
  part("e", [&](Check& s) {
    auto has = [](const AlphaIndex& a, const std::string& lemma) {
      return std::any_of(a.entries.begin(), a.entries.end(), [&](const AlphaEntry& e) { return e.lemma == lemma; });
    };
    for (auto w : {"лажа", "лыжа", "напоследок"}) s.expect(!has(build.index.ru, w), w);
    for (auto w : {"браня", "напоследък", "посягам", "свалям", "заключа"}) s.expect(!has(build.index.bg, w), w);
    for (auto w : {"лгать", "клеветать", "обманывать"}) s.expect(has(build.index.ru, w), std::string("no ") + w);
    for (auto w : {"лъжа", "клеветя", "мамя"}) s.expect(has(build.index.bg, w), std::string("no ") + w);
  });
  part("f", [&](Check& s) {
    auto a = render_output(run_build(fixtures::seed(), BuildConfig{}));
    auto b = render_output(run_build(fixtures::seed(), BuildConfig{}));
    s.expect(a == b, "rebuild output differs");
    auto dir = fixtures::temp_dir("acceptance-rebuild");
    write_output(a, dir / "out");
    std::size_t same = 0;
    for (const auto& [rel, body] : a) {
      std::ifstream in(dir / "out" / rel, std::ios::binary);
      std::stringstream ss;
      ss << in.rdbuf();
      same += ss.str() == body;
    }
    s.expect(same == a.size(), "written tree differs from rendered files");
  });
  std::ostringstream out;
  for (std::size_t i = 0; i < done.size(); ++i) out << (i ? " " : "") << done[i];
  out << " over " << build.pages.size() << " pages, " << kRandomPairs << " random pairs";
  return out.str();
}

std::string build_report(Check& c) {
  const auto& build = fixtures::seed_build();
  c.expect(build.ok(), "build has errors");
  c.expect(build.pages.size() >= kMinPages, "only " + std::to_string(build.pages.size()) + " pages");
  for (const auto& p : build.report.pages)
    c.expect(p.popups >= p.displayed_words,
             p.slug + ": " + std::to_string(p.popups) + " popups < " + std::to_string(p.displayed_words) + " words");
  std::ostringstream out;
  out << build.pages.size() << " pages (min " << kMinPages << "), popups >= displayed words on every page; "
      << kReferencePageSlug << " popups "
      << (build.report.reference_page_popups ? std::to_string(*build.report.reference_page_popups) : "n/a")
      << " vs reference magnitude " << kReferencePopupMagnitude << " (informational)";
  return out.str();
}

}  // namespace

int main() {
  guarded("golden classification", golden_classification);
  guarded("LGAT-LAZHA page", lgat_page);
  guarded("routing table", routing);
  guarded("header formatting", header_format);
  guarded("property suites", properties);
  guarded("build report", build_report);
  return failed == 0 ? 0 : 1;
}
