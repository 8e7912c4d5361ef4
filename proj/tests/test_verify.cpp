#include "brauer/verify.hpp"

#include "doctest.h"
#include "fixtures.hpp"

using namespace brauer;
using fixtures::p3;
using fixtures::s3;
using fixtures::s3e;
using fixtures::t1;

namespace {

TreeFamily family_of(const BrauerTree& t) {
  TreeFamily f;
  f.edge_count = t.edge_count();
  f.members = {t};
  f.codes = {canonical_code(t, IsoMode::Labeled)};
  return f;
}

}  // namespace

TEST_SUITE("verify") {
  TEST_CASE("end algebra matches the mutated tree") {
    for (const auto& [t, i] : std::vector<std::pair<BrauerTree, EdgeId>>{{p3(), 2}, {t1(), 1}, {s3e(), 1}, {p3(), 1}}) {
      const auto r = verify_main(t, i);
      CHECK_MESSAGE(r.passed, to_json(r).dump());
      CHECK(r.evidence.at("labeled_match").get<bool>());
      CHECK(r.evidence.at("cartan_end") == r.evidence.at("cartan_mutated_tree"));
    }
  }

  TEST_CASE("cartan instances") {
    CHECK(verify_cartan(p3()).passed);
    CHECK(verify_cartan(s3e()).passed);
  }

  TEST_CASE("braid examples") {
    const auto r = verify_braid(family_of(p3()));
    CHECK(r.passed);
    CHECK(r.evidence.at("checked").at("commute").get<int>() == 2);
    CHECK(r.evidence.at("checked").at("braid").get<int>() == 4);

    const auto s = verify_braid(family_of(s3()));
    CHECK(s.passed);
    CHECK(s.evidence.at("checked").at("absorb").get<int>() == 3);
  }

  TEST_CASE("the absorbing relation on the star") {
    // j = 2 follows i = 1 at the centre and 1 does not follow 2
    const auto lhs = mutate(mutate(mutate(s3(), 1), 2), 1);
    const auto rhs = mutate(mutate(s3(), 2), 1);
    CHECK(isomorphic(lhs, rhs, IsoMode::Unlabeled).has_value());
  }

  TEST_CASE("disjoint edges commute with the identity witness") {
    const auto a = mutate(mutate(p3(), 1), 3);
    const auto b = mutate(mutate(p3(), 3), 1);
    CHECK(isomorphic(a, b, IsoMode::Labeled).has_value());
  }

  TEST_CASE("to-star instances") {
    const auto r = verify_to_star(p3(), *p3().find_vertex("v0"));
    CHECK(r.passed);
    CHECK(r.evidence.at("sequence").size() == 2);
    CHECK(verify_to_star(s3(), *s3().find_vertex("c")).evidence.at("sequence").empty());
    CHECK(verify_to_star(s3e(), *s3e().find_vertex("l1")).passed);
  }

  TEST_CASE("counts") {
    CHECK(verify_counts(4, std::nullopt).evidence.at("count") == 3);
    CHECK(verify_counts(5, std::nullopt).evidence.at("count") == 6);
    CHECK(verify_counts(3, 2).evidence.at("count") == 4);
    CHECK(verify_counts(6, 3).passed);
    CHECK(expected_tree_count(7, std::nullopt) == 34u);
    CHECK_FALSE(expected_tree_count(9, std::nullopt).has_value());
  }

  TEST_CASE("reconstruction instances") {
    CHECK(verify_reconstruct(p3()).passed);
    CHECK(verify_reconstruct(s3e()).passed);
  }

  TEST_CASE("small sweeps pass and report totals") {
    const auto m = sweep_main(3, 2);
    CHECK(m.passed());
    CHECK(m.instances == 2 + 6 + 18);
    CHECK(sweep_cartan(4, 2).passed());
    CHECK(sweep_braid(4, 2).passed());
    CHECK(sweep_to_star(4, 2).passed());
    CHECK(sweep_counts(6, 2).passed());
    CHECK(sweep_reconstruct(4, 2, IsoMode::Labeled).passed());
    const auto j = to_json(m);
    CHECK(j.at("status") == "pass");
    CHECK(j.at("failures").empty());
  }

  TEST_CASE("an empty sweep does not pass") {
    CHECK_FALSE(SweepSummary{}.passed());
  }

  TEST_CASE("derived invariants are constant along mutation orbits") {
    for (const auto& t : all_trees(5, 3, IsoMode::Unlabeled).members) {
      const auto sum = [](const BrauerTree& g) {
        int s = 0;
        for (const auto& v : g.vertices()) s += v.multiplicity;
        return s;
      };
      for (EdgeId i = 1; i <= 5; ++i) {
        BrauerTree cur = t;
        for (int k = 0; k < orbit_order(t, i); ++k) {
          cur = mutate(cur, i);
          CHECK(cur.edge_count() == t.edge_count());
          CHECK(sum(cur) == sum(t));
          CHECK(cur.exceptional_vertex().has_value() == t.exceptional_vertex().has_value());
        }
      }
    }
  }
}
