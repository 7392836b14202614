#include <set>
#include <tuple>

#include "doctest.h"
#include "ssfem/dofs.hpp"
#include "ssfem/errors.hpp"

using namespace ssfem;

namespace {

std::vector<Count> counts(std::initializer_list<int> values) {
  std::vector<Count> out;
  for (int v : values) out.push_back(v);
  return out;
}

}  // namespace

TEST_CASE("vertex counts") {
  auto c = count_vertex_dofs(family_profile(5, 1));
  CHECK(c.per_face_total == 20349);
  CHECK(c.total == 122094);
  c = count_vertex_dofs(family_profile(2, 1));
  CHECK(c.per_face_total == 6);
  CHECK(c.total == 18);
  c = count_vertex_dofs(family_profile(3, 1));
  CHECK(c.per_face_total == 35);
  CHECK(c.total == 140);
}

TEST_CASE("edge counts") {
  auto c = count_edge_dofs(family_profile(5, 1));
  CHECK(c.per_face_total == 3168);
  CHECK(c.total == 47520);
  CHECK(c.per_face_by_order.back() == 1320);
  c = count_edge_dofs(family_profile(2, 1));
  CHECK(c.per_face_total == 1);
  CHECK(c.total == 3);
  CHECK_THROWS_AS(count_edge_dofs(family_profile(1, 1)), InvalidArgument);
}

TEST_CASE("triangle counts for the 5D element") {
  const auto c = count_triangle_dofs(family_profile(5, 1));
  CHECK(c.per_face_by_order == counts({28, 135, 378, 820, 1530}));
  CHECK(c.total == 57820);
  CHECK(c.per_face_by_order[0] * 20 == 560);
  CHECK(c.per_face_by_order[2] * 20 == 7560);
  CHECK(c.per_face_by_order[4] * 20 == 30600);
  // directions times points
  CHECK(c.per_face_by_order[1] == 3 * 45);
  CHECK(c.per_face_by_order[2] == 6 * 63);
  CHECK(c.per_face_by_order[3] == 10 * 82);
  CHECK(c.per_face_by_order[4] == 15 * 102);
}

TEST_CASE("tetrahedron counts for the 5D element") {
  const auto c = count_tet_dofs(family_profile(5, 1));
  CHECK(c.per_face_by_order == counts({544, 1778, 3804}));
  CHECK(c.per_face_by_order[0] * 15 == 8160);
  CHECK(c.per_face_by_order[1] * 15 == 26670);
  CHECK(c.per_face_by_order[1] == 2 * 889);
  CHECK(c.per_face_by_order[2] == 3 * (4 * 123 + 776));
  CHECK(c.total == 91890);
}

TEST_CASE("4-face counts for the 5D element") {
  const auto c = count_4face_dofs(family_profile(5, 1));
  CHECK(c.counts.per_face_by_order == counts({6965, 12990}));
  CHECK(c.counts.per_face_by_order[0] * 6 == 41790);
  CHECK(c.counts.total == 119730);
  CHECK(c.order1_layers == counts({1682, 1640, 1547, 1400, 1250, 1100, 4371}));
}

TEST_CASE("interior counts") {
  auto c = count_interior_dofs(family_profile(5, 1));
  CHECK(c.total == 62888);
  CHECK(c.residual == 62888);
  CHECK(c.first_layer == Count(11520));
  CHECK(count_interior_dofs(family_profile(2, 1)).total == 0);
  CHECK(count_interior_dofs(family_profile(2, 2)).total == 1);
  CHECK(count_interior_dofs(family_profile(3, 1)).total == 4);
  CHECK_THROWS_AS(count_interior_dofs(family_profile(3, 1), partition(family_profile(3, 2))),
                  InvalidArgument);
}

TEST_CASE("constructive counts agree with the partition for all family members") {
  for (int n = 1; n <= 5; ++n) {
    for (int m = 1; m <= 2; ++m) {
      const auto p = family_profile(n, m);
      const auto report = partition(p);
      Count total = 0;
      for (int d = 0; d < n; ++d) {
        const auto c = count_face_dofs(p, d);
        const auto generic = constructive_face_count(p, d);
        CHECK(c.per_face_by_order == generic.per_face_by_order);
        CHECK(c.per_face_by_order ==
              report.face_counts_by_order(faces(n, d).front(), p.order(d)));
        CHECK(c.total == report.per_dim_totals[d]);
        total += c.total;
      }
      total += count_interior_dofs(p, report).total;
      CHECK(total == poly_dim(n, p.degree()));
    }
  }
}

TEST_CASE("count operations need a family profile") {
  const SmoothnessProfile odd(2, {2, 1}, 7);
  CHECK_THROWS_AS(count_vertex_dofs(odd), Unsupported);
  CHECK_THROWS_AS(count_edge_dofs(odd), Unsupported);
  CHECK_THROWS_AS(count_interior_dofs(odd), Unsupported);
  CHECK_THROWS_AS(count_face_dofs(family_profile(2, 1), 2), InvalidArgument);
  CHECK_THROWS_AS(count_triangle_dofs(family_profile(2, 1)), InvalidArgument);
}

TEST_CASE("element layouts") {
  auto e = build_element(1, 1);
  REQUIRE(e.functionals.size() == 4);
  // cubic Hermite: value and slope at each end
  CHECK(e.functionals[0].owner == Face(1, {0}));
  CHECK(e.functionals[0].order == 0);
  CHECK(e.functionals[1].order == 1);
  CHECK(e.functionals[2].owner == Face(1, {1}));
  CHECK(e.functionals[3].direction_multiorder == std::vector<int>{1});

  e = build_element(2, 1);
  REQUIRE(e.functionals.size() == 21);
  std::map<int, int> per_dim;
  for (const auto& f : e.functionals) ++per_dim[f.owner.dim()];
  CHECK(per_dim[0] == 18);
  CHECK(per_dim[1] == 3);
  CHECK(per_dim.count(2) == 0);
  // each edge: one first normal derivative at the midpoint
  for (const auto& f : e.functionals) {
    if (f.owner.dim() != 1) continue;
    CHECK(f.order == 1);
    for (int v : f.owner.vertices()) CHECK(f.point.coords[v] == Rational(1, 2));
  }

  CHECK(build_element(3, 1).functionals.size() == 220);
  CHECK(build_element(2, 2).functionals.size() == 55);
  CHECK_THROWS_AS(build_element(3, 1, 100), SizeError);
}

TEST_CASE("functionals are distinct and sit on their owners") {
  for (auto [n, m] : std::vector<std::pair<int, int>>{{1, 2}, {2, 1}, {2, 2}, {3, 1}, {3, 2}}) {
    const auto e = build_element(n, m);
    CHECK(Count(static_cast<unsigned long>(e.functionals.size())) == poly_dim(n, e.profile.degree()));
    std::set<std::tuple<Face, std::vector<int>, std::vector<Rational>>> seen;
    for (const auto& f : e.functionals) {
      CHECK(seen.emplace(f.owner, f.direction_multiorder, f.point.coords).second);
      int sum = 0;
      for (int x : f.direction_multiorder) sum += x;
      CHECK(sum == f.order);
      CHECK(f.direction_multiorder.size() == static_cast<std::size_t>(n - f.owner.dim()));
      if (!f.owner.is_full()) CHECK(f.order <= e.profile.order(f.owner.dim()));
      for (int i = 0; i <= n; ++i) CHECK((f.point.coords[i] > 0) == f.owner.contains(i));
    }
  }
}

TEST_CASE("functional for one index") {
  const auto p = family_profile(5, 1);
  const BernsteinIndex alpha({1, 0, 0, 0, 16, 16});
  const auto f = functional_for_index(alpha, classify(alpha, p));
  CHECK(f.owner == Face(5, {4, 5}));
  CHECK(f.order == 1);
  CHECK(f.direction_multiorder == std::vector<int>{1, 0, 0, 0});
  CHECK(f.point.coords ==
        std::vector<Rational>{0, 0, 0, 0, Rational(1, 2), Rational(1, 2)});
}
