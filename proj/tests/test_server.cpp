#include "brauer/server.hpp"

#include <random>
#include <thread>

#include "brauer/cartan.hpp"
#include "brauer/io.hpp"
#include "doctest.h"
#include "fixtures.hpp"
#include "httplib.h"

using namespace brauer;
using fixtures::p3;
using fixtures::s3e;
using nlohmann::json;

namespace {

BrauerTree tree_of(const json& body) { return BrauerTree::from_vertices(io::vertices_from_json(body.at("tree"))); }

}  // namespace

TEST_SUITE("server") {
  TEST_CASE("mutate and undo") {
    Api api(p3());
    const auto first = api.handle("GET", "/api/tree", "");
    CHECK(first.status == 200);
    CHECK(first.body.at("revision") == 0);

    const auto m = api.handle("POST", "/api/mutate", R"({"edge":1})");
    CHECK(m.status == 200);
    CHECK(m.body.at("revision") == 1);
    CHECK(tree_of(m.body) == mutate(p3(), 1));
    CHECK(m.body.at("is_star") == true);
    CHECK(m.body.at("cartan") == io::matrix_to_json(cartan_formula(mutate(p3(), 1))));

    const auto h = api.handle("GET", "/api/history", "");
    CHECK(h.body.at("entries").size() == 1);
    CHECK(h.body.at("entries")[0].at("edge") == 1);

    const auto u = api.handle("POST", "/api/undo", "");
    CHECK(u.status == 200);
    CHECK(u.body.at("revision") == 2);
    CHECK(tree_of(u.body) == p3());

    const auto again = api.handle("POST", "/api/undo", "");
    CHECK(again.status == 409);
    CHECK(again.body.at("revision") == 2);
  }

  TEST_CASE("bad requests") {
    Api api(p3());
    CHECK(api.handle("POST", "/api/mutate", R"({"edge":4})").status == 400);
    CHECK(api.handle("POST", "/api/mutate", R"({"edge":"1"})").status == 400);
    CHECK(api.handle("POST", "/api/mutate", "not json").status == 400);
    CHECK(api.handle("POST", "/api/to-star", R"({"vertex":"nope"})").status == 400);
    CHECK(api.handle("POST", "/api/to-star", R"({"vertex":3})").status == 400);
    CHECK(api.handle("GET", "/api/nothing", "").status == 404);
    CHECK(api.snapshot().revision() == 0);
  }

  TEST_CASE("read-only endpoints") {
    Api api(s3e());
    CHECK(api.handle("GET", "/api/cartan", "").body.at("cartan") == json::parse("[[3,2,2],[2,3,2],[2,2,3]]"));
    CHECK(api.handle("GET", "/api/ext", "").body.at("ext") == io::matrix_to_json(ext_formula(s3e())));
    Api path(p3());
    const auto s = path.handle("POST", "/api/to-star", R"({"vertex":"v0"})");
    CHECK(s.status == 200);
    CHECK(s.body.at("sequence") == json::array({2, 3}));
    CHECK(s.body.at("already_star") == false);
    CHECK(path.snapshot().current() == p3());
  }

  TEST_CASE("replaying the history reproduces the current tree") {
    std::mt19937 rng(7);
    Api api(s3e());
    std::uint64_t last = 0;
    for (int step = 0; step < 200; ++step) {
      const bool undo = rng() % 3 == 0;
      const auto r = undo ? api.handle("POST", "/api/undo", "")
                          : api.handle("POST", "/api/mutate", json{{"edge", 1 + rng() % 3}}.dump());
      const auto rev = r.body.at("revision").get<std::uint64_t>();
      if (r.status == 200) {
        CHECK(rev == last + 1);
      } else {
        CHECK(r.status == 409);
        CHECK(rev == last);
      }
      last = rev;
      const auto s = api.snapshot();
      CHECK(s.replay() == s.current());
    }
  }

  TEST_CASE("over http") {
    Api api(p3());
    httplib::Server server;
    install_routes(server, api, std::nullopt);
    const int port = server.bind_to_any_port("127.0.0.1");
    REQUIRE(port > 0);
    std::thread worker([&] { server.listen_after_bind(); });
    server.wait_until_ready();

    httplib::Client client("127.0.0.1", port);
    auto index = client.Get("/");
    REQUIRE(index);
    CHECK(index->status == 200);
    CHECK(index->body.find("/api/tree") != std::string::npos);

    auto m = client.Post("/api/mutate", R"({"edge":1})", "application/json");
    REQUIRE(m);
    CHECK(m->status == 200);
    const auto body = json::parse(m->body);
    CHECK(tree_of(body) == mutate(p3(), 1));
    const auto star = json::parse(client.Get("/api/tree")->body);
    CHECK(star.at("tree") == body.at("tree"));
    CHECK(star.at("tree").at("vertices")[1].at("cyclic") == json::array({1, 3, 2}));

    CHECK(client.Post("/api/mutate", R"({"edge":7})", "application/json")->status == 400);
    CHECK(client.Post("/api/undo", "", "application/json")->status == 200);
    CHECK(client.Post("/api/undo", "", "application/json")->status == 409);
    CHECK(tree_of(json::parse(client.Get("/api/tree")->body)) == p3());

    server.stop();
    worker.join();
  }

  TEST_CASE("serves a ui directory") {
    const auto dir = fixtures::temp_dir("ui");
    io::write_text_file((dir / "index.html").string(), "<p>explorer</p>");
    Api api(p3());
    httplib::Server server;
    install_routes(server, api, dir.string());
    const int port = server.bind_to_any_port("127.0.0.1");
    std::thread worker([&] { server.listen_after_bind(); });
    server.wait_until_ready();
    httplib::Client client("127.0.0.1", port);
    auto r = client.Get("/index.html");
    REQUIRE(r);
    CHECK(r->body == "<p>explorer</p>");
    CHECK(client.Get("/api/tree")->status == 200);
    server.stop();
    worker.join();
  }
}
