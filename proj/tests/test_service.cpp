#include <thread>

#include "doctest.h"
#include "fixtures.hpp"
#include "json.hpp"
#include "sedict/emit.hpp"
#include "sedict/http.hpp"

using namespace sedict;
using nlohmann::json;

namespace {

std::filesystem::path built() {
  static const std::filesystem::path dir = [] {
    auto d = fixtures::temp_dir("service") / "out";
    write_output(render_output(fixtures::seed_build()), d);
    return d;
  }();
  return dir;
}

}  // namespace

TEST_CASE("api answers from the output tree") {
  ApiService api(built());
  auto page = api.page("LGAT-LAZHA");
  CHECK(page.status == 200);
  CHECK(page.body == page_to_json(fixtures::seed_page("LGAT-LAZHA")));
  CHECK(api.page("unknown").status == 404);
  CHECK(api.page("../report").status == 404);

  auto look = api.lookup("вешать", "ru");
  CHECK(look.status == 200);
  CHECK(json::parse(look.body)["slug"] == "VESHAT-BESYA");
  CHECK(api.lookup("вешать", "de").status == 400);
  CHECK(api.lookup("самолёт", "ru").status == 404);

  CHECK(api.search("", "", "").status == 400);
  CHECK(api.search("лгать", "x", "").status == 400);
  auto s = api.search("лгать", "10", "");
  CHECK(s.status == 200);
  CHECK(s.body == search_page_to_json(combined_search(fixtures::seed_build().index, "лгать", 10)));

  CHECK(api.index("ru").body == alpha_to_json(fixtures::seed_build().index.ru));
  CHECK(api.index("xx").status == 404);
  CHECK(json::parse(api.legend().body)["legend"].size() == 20);
}

TEST_CASE("missing output tree is an I/O error") {
  CHECK_THROWS_AS(ApiService("/nonexistent/sedict"), IoError);
}

TEST_CASE("http routes on localhost") {
  ApiService api(built());
  httplib::Server server;
  mount(server, api);
  int port = server.bind_to_any_port("127.0.0.1");
  REQUIRE(port > 0);
  std::thread worker([&] { server.listen_after_bind(); });
  server.wait_until_ready();

  httplib::Client client("127.0.0.1", port);
  auto lookup = client.Get("/api/lookup?lemma=%D0%B2%D0%B5%D1%88%D0%B0%D1%82%D1%8C&lang=ru");
  REQUIRE(lookup);
  CHECK(lookup->status == 200);
  CHECK(json::parse(lookup->body)["slug"] == "VESHAT-BESYA");

  auto missing = client.Get("/api/page/unknown");
  REQUIRE(missing);
  CHECK(missing->status == 404);

  auto empty = client.Get("/api/search?q=");
  REQUIRE(empty);
  CHECK(empty->status == 400);

  auto search = client.Get("/api/search?q=%D0%BB%D0%B3%D0%B0%D1%82%D1%8C&n=10");
  REQUIRE(search);
  CHECK(search->status == 200);
  CHECK(search->body == api.search("лгать", "10", "").body);

  auto page = client.Get("/api/page/LGAT-LAZHA");
  REQUIRE(page);
  CHECK(page->body == api.page("LGAT-LAZHA").body);

  auto html = client.Get("/pages/LGAT-LAZHA.html");
  REQUIRE(html);
  CHECK(html->status == 200);
  CHECK(html->body.find("sed-payloads") != std::string::npos);

  auto idx = client.Get("/api/index/bg");
  REQUIRE(idx);
  CHECK(idx->body == api.index("bg").body);

  server.stop();
  worker.join();
}
