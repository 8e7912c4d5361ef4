#include "brauer/algebra.hpp"

#include "brauer/enumerate.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace brauer;
using fixtures::p3;
using fixtures::s3;
using fixtures::s3e;
using fixtures::t1;

namespace {

int total(const IntMatrix& m) {
  int s = 0;
  for (EdgeId i = 1; i <= m.size(); ++i)
    for (EdgeId j = 1; j <= m.size(); ++j) s += m(i, j);
  return s;
}

BasisElement step(EdgeId i, VertexIndex v, int t) { return {BasisElement::Kind::Step, i, v, t}; }
BasisElement socle(EdgeId i) { return {BasisElement::Kind::Socle, i, 0, 0}; }
BasisElement idem(EdgeId i) { return {BasisElement::Kind::Idempotent, i, 0, 0}; }

}  // namespace

TEST_SUITE("algebra") {
  TEST_CASE("dimensions") {
    CHECK(build_algebra(t1()).algebra.dimension() == 2);
    CHECK(build_algebra(p3()).algebra.dimension() == 10);
    CHECK(build_algebra(s3()).algebra.dimension() == 12);
    for (int n = 1; n <= 5; ++n) {
      for (const auto& t : all_trees(n, 3, IsoMode::Unlabeled).members) {
        CHECK(build_algebra(t).algebra.dimension() == static_cast<std::size_t>(total(cartan_formula(t))));
      }
    }
  }

  TEST_CASE("multiplication examples") {
    const auto a = build_algebra(p3());
    const VertexIndex v1 = *a.tree.find_vertex("v1");
    const VertexIndex v2 = *a.tree.find_vertex("v2");
    const auto x = a.index_of(step(1, v1, 1));
    const auto y = a.index_of(step(2, v1, 1));
    const auto z = a.index_of(step(2, v2, 1));
    const auto s = a.index_of(socle(1));
    CHECK(a.algebra.product(x, y) == SparseVector{{s, Rational(1)}});
    CHECK(a.algebra.product(x, z).empty());
    const auto e1 = a.index_of(idem(1));
    CHECK(a.algebra.product(e1, e1) == SparseVector{{e1, Rational(1)}});
    CHECK(a.algebra.label(x).left == 1);
    CHECK(a.algebra.label(x).right == 2);
    CHECK(a.target(step(1, v1, 1)) == 2);
  }

  TEST_CASE("structure checks pass on small trees") {
    for (int n = 1; n <= 4; ++n) {
      for (std::optional<int> m : {std::optional<int>{}, std::optional<int>{2}, std::optional<int>{3}}) {
        for (const auto& t : all_trees(n, m, IsoMode::Unlabeled).members) {
          const auto errors = build_algebra(t).algebra.structure_errors();
          CHECK_MESSAGE(errors.empty(), (errors.empty() ? "" : errors.front()));
        }
      }
    }
  }

  TEST_CASE("structure checks catch a broken table") {
    auto a = build_algebra(p3()).algebra;
    const auto e1 = a.idempotent(1);
    a.set_product(e1, e1, {});
    CHECK_FALSE(a.structure_errors().empty());
  }

  TEST_CASE("cartan counts") {
    CHECK(cartan_count(build_algebra(p3()).algebra) == IntMatrix::from_rows({{2, 1, 0}, {1, 2, 1}, {0, 1, 2}}));
    CHECK(cartan_count(build_algebra(t1()).algebra) == IntMatrix::from_rows({{2}}));
    CHECK(cartan_count(build_algebra(s3e()).algebra) == IntMatrix::from_rows({{3, 2, 2}, {2, 3, 2}, {2, 2, 3}}));
  }

  TEST_CASE("radical") {
    const auto a = build_algebra(t1());
    const auto r = radical(a.algebra);
    CHECK(r.dim() == 1);
    CHECK(r.contains(a.algebra.unit_vector(a.index_of(socle(1)))));
    CHECK(radical(build_algebra(p3()).algebra).dim() == 7);
  }

  TEST_CASE("quiver") {
    CHECK(quiver(build_algebra(p3()).algebra) == ext_formula(p3()));
    CHECK(quiver(build_algebra(t1()).algebra) == IntMatrix::from_rows({{1}}));
    IntMatrix expected(3);
    expected(1, 2) = expected(2, 3) = expected(3, 1) = 1;
    CHECK(quiver(build_algebra(s3e()).algebra) == expected);
  }

  TEST_CASE("three routes agree on every tree with up to six edges") {
    for (int n = 1; n <= 6; ++n) {
      for (std::optional<int> m : {std::optional<int>{}, std::optional<int>{2}, std::optional<int>{3}}) {
        for (const auto& t : all_trees(n, m, IsoMode::Unlabeled).members) {
          const auto a = build_algebra(t);
          const auto c = cartan_count(a.algebra);
          CHECK(c == cartan_formula(t));
          CHECK(c.symmetric());
          CHECK(quiver(a.algebra) == ext_formula(t));
          CHECK(radical(a.algebra).dim() + static_cast<std::size_t>(n) == a.algebra.dimension());
        }
      }
    }
  }

  TEST_CASE("corner algebras are local") {
    const auto a = build_algebra(s3e()).algebra;
    for (EdgeId i = 1; i <= 3; ++i) {
      const auto c = corner_algebra(a, i);
      CHECK(c.idempotent_count() == 1);
      CHECK(c.dimension() == 3);
      CHECK(radical(c).dim() == 2);
    }
  }
}
