#include "brauer/io.hpp"

#include "brauer/enumerate.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace brauer;
using fixtures::p3;
using fixtures::s3e;

TEST_SUITE("io") {
  TEST_CASE("canonical printing") {
    const auto t = BrauerTree::from_vertices({{"v3", 1, {3}}, {"v2", 1, {3, 2}}, {"v1", 1, {2, 1}}, {"v0", 1, {1}}});
    const auto j = io::tree_to_json(t);
    CHECK(j.at("vertices")[0].at("id") == "v0");
    CHECK(j.at("vertices")[1].at("cyclic") == nlohmann::json::array({1, 2}));
    CHECK(j.at("vertices")[2].at("cyclic") == nlohmann::json::array({2, 3}));
    CHECK(io::print_tree(t) == io::print_tree(p3()));
  }

  TEST_CASE("parse and print round-trip on every small tree") {
    for (int n = 1; n <= 6; ++n) {
      for (std::optional<int> m : {std::optional<int>{}, std::optional<int>{2}}) {
        for (const auto& t : all_trees(n, m, IsoMode::Unlabeled).members) {
          const auto text = io::print_tree(t);
          const auto back = io::parse_tree(text);
          REQUIRE(back.ok());
          CHECK(*back.tree == t);
          CHECK(io::print_tree(*back.tree) == text);
        }
      }
    }
  }

  TEST_CASE("defaults for id and multiplicity") {
    const auto r = io::parse_tree(R"({"vertices":[{"cyclic":[1]},{"cyclic":[1]}]})");
    REQUIRE(r.ok());
    CHECK(r.tree->vertex(0).id == "v0");
    CHECK(r.tree->multiplicity(1) == 1);
  }

  TEST_CASE("malformed input") {
    CHECK_THROWS_AS((void)io::parse_tree("{"), BrauerError);
    CHECK_THROWS_AS((void)io::parse_tree(R"({"nodes":[]})"), BrauerError);
    CHECK_THROWS_AS((void)io::parse_tree(R"({"vertices":[{"cyclic":["a"]}]})"), BrauerError);
    const auto r = io::parse_tree(R"({"vertices":[{"id":"a","cyclic":[1,2]},{"id":"b","cyclic":[1]}]})");
    CHECK(r.has(TreeIssueKind::EdgeCountMismatch));
  }

  TEST_CASE("files") {
    const auto dir = fixtures::temp_dir("io");
    const auto path = (dir / "t.json").string();
    io::write_text_file(path, io::print_tree(s3e()));
    CHECK(io::read_tree_file(path) == s3e());
    io::write_text_file(path, R"({"vertices":[{"id":"a","cyclic":[1]}]})");
    CHECK_THROWS_AS((void)io::read_tree_file(path), BrauerError);
    CHECK_THROWS_AS((void)io::read_tree_file((dir / "missing.json").string()), BrauerError);

    io::write_text_file(path, "[[2,1],[1,2]]");
    CHECK(io::read_matrix_file(path) == IntMatrix::from_rows({{2, 1}, {1, 2}}));
    io::write_text_file(path, "[[2,1],[1]]");
    CHECK_THROWS_AS((void)io::read_matrix_file(path), std::exception);
  }

  TEST_CASE("dot export") {
    const auto dot = io::to_dot(s3e());
    CHECK(dot.find("doublecircle") != std::string::npos);
    CHECK(dot.find("m=2") != std::string::npos);
    CHECK(dot.find("// c cyclic: 1 2 3") != std::string::npos);
    CHECK(dot.find("[label=\"3\"]") != std::string::npos);
  }
}
