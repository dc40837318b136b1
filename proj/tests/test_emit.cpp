#include "doctest.h"
#include "fixtures.hpp"
#include "json.hpp"
#include "sedict/emit.hpp"

using namespace sedict;

TEST_CASE("XML round trip over every seed page") {
  for (const auto& p : fixtures::seed_build().pages) {
    CAPTURE(p.slug);
    std::string xml = emit_xml(p);
    Page back = parse_xml(xml);
    CHECK(back == p);
    CHECK(emit_xml(back) == xml);
  }
}

TEST_CASE("JSON round trip over every seed page") {
  for (const auto& p : fixtures::seed_build().pages) {
    CAPTURE(p.slug);
    CHECK(page_from_json(page_to_json(p)) == p);
  }
}

TEST_CASE("XML keeps awkward characters") {
  Page p = fixtures::seed_page("LGAT-LAZHA");
  p.title = "a <b> & \"c\" 'd'\nline\ttab";
  p.popups.front().lines.push_back("  leading and trailing  ");
  p.ted.reset();
  Page back = parse_xml(emit_xml(p));
  CHECK(back == p);
}

TEST_CASE("malformed XML is rejected") {
  CHECK_THROWS_AS(parse_xml("<page"), std::runtime_error);
  CHECK_THROWS_AS(parse_xml("<other/>"), std::runtime_error);
}

TEST_CASE("HTML carries data attributes and inline payloads") {
  const Page& p = fixtures::seed_page("LGAT-LAZHA");
  std::string html = emit_html(p);
  CHECK(html.rfind("<!DOCTYPE html>", 0) == 0);
  CHECK(html.find("data-slug=\"LGAT-LAZHA\"") != std::string::npos);
  CHECK(html.find("data-sign-type=\"Asynchronous\"") != std::string::npos);
  CHECK(html.find("data-color=\"c0\"") != std::string::npos);
  for (const auto& sense : displayed_senses(p))
    CHECK(html.find("data-popup=\"gloss:" + sense + "\"") != std::string::npos);
  CHECK(html.find("class=\"sed-rule\"") < html.find("sed-reference-base"));

  auto start = html.find("<script type=\"application/json\" id=\"sed-payloads\">");
  REQUIRE(start != std::string::npos);
  start = html.find('>', start) + 1;
  auto end = html.find("</script>", start);
  auto js = nlohmann::json::parse(html.substr(start, end - start));
  CHECK(js["glosses"].size() == p.payloads.size());
  CHECK(js["popups"].size() == p.popups.size());
  CHECK(emit_html(p) == html);
}

TEST_CASE("HTML rows appear in order") {
  std::string html = emit_html(fixtures::seed_page("LGAT-LAZHA"));
  std::size_t last = 0;
  for (int n = 1; n <= 5; ++n) {
    auto at = html.find("data-row=\"" + std::to_string(n) + "\"");
    REQUIRE(at != std::string::npos);
    CHECK(at > last);
    last = at;
  }
}

TEST_CASE("html escaping") {
  CHECK(html_escape("<a href=\"x\">&'") == "&lt;a href=&quot;x&quot;&gt;&amp;&#39;");
}
