#include <cstdint>
#include <string>

#include "doctest.h"
#include "ssfem/errors.hpp"
#include "ssfem/verify.hpp"

using namespace ssfem;

TEST_CASE("count comparison for the 5D element") {
  const auto cmp = verify_counts(5, 1);
  CHECK(cmp.pass());
  CHECK(cmp.mismatches.empty());
  CHECK(cmp.partition.grand_total == 501942);
  CHECK(cmp.partition.per_dim_totals ==
        std::vector<Count>{122094, 47520, 57820, 91890, 119730, 62888});
  int published = 0;
  for (const auto& c : cmp.checks) {
    if (c.label.rfind("published", 0) == 0) ++published;
  }
  // each published number is checked against both computations
  CHECK(published == 2 * (1 + 1 + 5 + 3 + 2 + 1 + 6 + 1 + 7 + 1));
}

TEST_CASE("count comparison across the family") {
  for (int n = 1; n <= 5; ++n) {
    for (int m = 1; m <= 2; ++m) {
      const auto cmp = verify_counts(n, m);
      CHECK_MESSAGE(cmp.pass(), "n=" << n << " m=" << m);
      CHECK(cmp.partition.grand_total == poly_dim(n, (1 << n) * m + 1));
    }
  }
  CHECK(verify_counts(2, 1).partition.grand_total == 21);
  CHECK(verify_counts(4, 1).partition.grand_total == 5985);
  CHECK(verify_counts(5, 2).partition.grand_total == poly_dim(5, 65));
}

TEST_CASE("a failed check is reported as a mismatch") {
  CountComparison cmp = verify_counts(2, 1);
  CHECK(cmp.pass());
  CountCheck bad{"forced", 1, 2};
  CHECK_FALSE(bad.ok());
}

TEST_CASE("layer grouping") {
  std::map<int, Count> layers{{2, 10}, {3, 9}, {4, 8}, {5, 1}, {9, 2}};
  CHECK(group_layers(layers, 2) == std::vector<Count>{10, 9, 11});
  CHECK(group_layers(layers, 6) == std::vector<Count>{10, 9, 8, 1, 2, 0});
}

TEST_CASE("unisolvence at desk scale") {
  auto r = verify_unisolvence(1, 1);
  CHECK(r.pass);
  CHECK(r.rank == 4);
  r = verify_unisolvence(1, 3);
  CHECK(r.pass);
  CHECK(r.rank == 8);
  r = verify_unisolvence(2, 1);
  CHECK(r.pass);
  CHECK(r.rank == 21);
  r = verify_unisolvence(2, 2);
  CHECK(r.pass);
  CHECK(r.rank == 55);
}

TEST_CASE("5D unisolvence is refused with a size error") {
  try {
    verify_unisolvence(5, 1);
    FAIL("expected a size error");
  } catch (const SizeError& e) {
    CHECK(std::string(e.what()).find("5D") != std::string::npos);
  }
  CHECK_THROWS_AS(verify_unisolvence(3, 1, 219), SizeError);
}

TEST_CASE("generator is the documented LCG") {
  Lcg g(42);
  std::uint64_t s = 42;
  for (int i = 0; i < 5; ++i) {
    s = s * 6364136223846793005ULL + 1442695040888963407ULL;
    CHECK(g.next() == s);
  }
  Lcg a(9), b(9);
  for (int i = 0; i < 200; ++i) {
    const Rational v = a.dof_value();
    CHECK(v == b.dof_value());
    CHECK(abs(v) <= 100);
    CHECK(v.get_den() <= 10);
    const int u = a.uniform(-3, 3);
    CHECK(u == b.uniform(-3, 3));
    CHECK(u >= -3);
    CHECK(u <= 3);
  }
}

TEST_CASE("random face points") {
  Lcg g(5);
  for (int n = 1; n <= 3; ++n) {
    for (int d = 0; d <= n; ++d) {
      for (const auto& f : faces(n, d)) {
        const BaryPoint p = g.face_point(f);
        Rational sum = 0;
        for (int i = 0; i <= n; ++i) {
          sum += p.coords[i];
          CHECK((p.coords[i] > 0) == f.contains(i));
          CHECK(p.coords[i].get_den() <= 100);
        }
        CHECK(sum == 1);
      }
    }
  }
}

TEST_CASE("affine simplex maps") {
  const AffineSimplex t({{Rational(1, 2), 1}, {3, 1}, {1, 4}});
  const std::vector<Rational> x{Rational(3, 2), 2};
  const BaryPoint l = t.barycentric(x);
  CHECK(t.cartesian(l) == x);
  Rational sum = 0;
  for (const auto& c : l.coords) sum += c;
  CHECK(sum == 1);
  const std::vector<Rational> u{1, -2};
  const auto delta = t.barycentric_direction(u);
  CHECK(t.cartesian_direction(delta) == u);
  CHECK(delta[0] + delta[1] + delta[2] == 0);
  CHECK_THROWS(AffineSimplex({{0, 0}, {1, 1}, {2, 2}}));
}

TEST_CASE("two-element mesh numbering") {
  const auto mesh = build_two_element_mesh(2, 1);
  CHECK(mesh.elements[0].functionals.size() == 21);
  CHECK(mesh.elements[1].functionals.size() == 21);
  CHECK(mesh.shared_functionals == 13);  // two vertices of 6 and one edge DOF
  CHECK(mesh.num_global == 29);
  std::vector<int> used(mesh.num_global, 0);
  for (const auto& el : mesh.elements)
    for (auto id : el.global_ids) ++used[id];
  int twice = 0;
  for (int u : used) {
    CHECK(u >= 1);
    twice += u == 2;
  }
  CHECK(twice == 13);
  CHECK_THROWS_AS(build_two_element_mesh(4, 1), Unsupported);
}

TEST_CASE("continuity jumps vanish exactly") {
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    const auto r = verify_continuity(2, 1, seed, 20);
    CHECK(r.max_jump == 0);
    CHECK(r.evaluations == 2 * 6 + 20 * 3);
  }
  CHECK(verify_continuity(1, 1, 4, 5).max_jump == 0);
  CHECK(verify_continuity(1, 2, 4, 5).max_jump == 0);
  CHECK(verify_continuity(2, 2, 4, 5).max_jump == 0);
}

TEST_CASE("constant data gives a continuous constant") {
  const auto mesh = build_two_element_mesh(2, 1);
  std::vector<Rational> values;
  for (int order : mesh.global_orders) values.push_back(order == 0 ? 1 : 0);
  Lcg g(8);
  CHECK(measure_continuity(mesh, values, g, 10).max_jump == 0);
}

TEST_CASE("breaking the shared numbering produces jumps") {
  // Give the second element its own copy of every shared functional: the
  // two sides no longer agree, so some jump must appear.
  auto mesh = build_two_element_mesh(2, 1);
  auto& b = mesh.elements[1];
  for (std::size_t i = 0; i < b.global_ids.size(); ++i) {
    if (b.global_ids[i] < mesh.elements[0].global_ids.size()) b.global_ids[i] = mesh.num_global++;
  }
  Lcg g(3);
  std::vector<Rational> values;
  for (std::size_t i = 0; i < mesh.num_global; ++i) values.push_back(g.dof_value());
  CHECK(measure_continuity(mesh, values, g, 5).max_jump > 0);
  CHECK_THROWS_AS(measure_continuity(mesh, std::vector<Rational>(3), g, 5), InvalidArgument);
}
