#include <algorithm>
#include <set>
#include <vector>

#include "doctest.h"
#include "ssfem/combinatorics.hpp"
#include "ssfem/errors.hpp"
#include "ssfem/simplex.hpp"

using namespace ssfem;

namespace {

// Plain Gauss-Jordan over Q, written out here so the tests do not lean on
// the library's own elimination.
std::size_t rank_oracle(std::vector<std::vector<Rational>> rows) {
  std::size_t rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t p = rank;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[rank]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c] == 0) continue;
      const Rational f = rows[r][c] / rows[rank][c];
      for (std::size_t j = c; j < cols; ++j) rows[r][j] -= f * rows[rank][j];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

TEST_CASE("face counts") {
  const std::vector<int> expected{6, 15, 20, 15, 6, 1};
  for (int d = 0; d <= 5; ++d) CHECK(faces(5, d).size() == static_cast<std::size_t>(expected[d]));
  for (int n = 1; n <= 5; ++n) {
    for (int d = 0; d <= n; ++d) CHECK(Count(static_cast<unsigned long>(faces(n, d).size())) == binomial(n + 1, d + 1));
    CHECK(faces(n, n).front() == Face::full(n));
  }
}

TEST_CASE("faces are sorted lexicographically and distinct") {
  for (int n = 1; n <= 5; ++n) {
    for (int d = 0; d <= n; ++d) {
      const auto list = faces(n, d);
      for (std::size_t i = 1; i < list.size(); ++i) CHECK(list[i - 1].vertices() < list[i].vertices());
      for (const auto& f : list) {
        CHECK(f.dim() == d);
        CHECK(Face::from_mask(n, f.mask()) == f);
      }
    }
  }
}

TEST_CASE("lattice closure: facets of d-faces are (d-1)-faces") {
  for (int n = 1; n <= 5; ++n) {
    for (int d = 1; d <= n; ++d) {
      const auto lower = faces(n, d - 1);
      const std::set<Face> known(lower.begin(), lower.end());
      for (const auto& f : faces(n, d)) {
        const auto fs = f.facets();
        CHECK(fs.size() == static_cast<std::size_t>(d + 1));
        for (const auto& g : fs) {
          CHECK(known.count(g) == 1);
          CHECK(g.is_subface_of(f));
          CHECK_FALSE(f.is_subface_of(g));
        }
      }
    }
  }
}

TEST_CASE("face construction is validated") {
  CHECK_THROWS_AS(Face(3, {}), InvalidArgument);
  CHECK_THROWS_AS(Face(3, {2, 1}), InvalidArgument);
  CHECK_THROWS_AS(Face(3, {1, 1}), InvalidArgument);
  CHECK_THROWS_AS(Face(3, {0, 4}), InvalidArgument);
  const Face e(5, {4, 5});
  CHECK(e.dim() == 1);
  CHECK(e.off_face_vertices() == std::vector<int>{0, 1, 2, 3});
  CHECK(e.contains(4));
  CHECK_FALSE(e.contains(0));
  CHECK(lattice_less(Face(5, {5}), e));
  CHECK(lattice_less(Face(5, {0, 5}), e));
}

TEST_CASE("normal directions") {
  CHECK(normal_directions(Face(5, {4, 5}), 5).size() == 4);
  CHECK(normal_directions(Face(2, {0, 1}), 2).size() == 1);
  CHECK(normal_directions(Face(3, {0}), 3).size() == 3);
  CHECK_THROWS_AS(normal_directions(Face::full(3), 3), InvalidArgument);

  // normals plus face edges span R^n
  for (int n = 1; n <= 5; ++n) {
    for (int d = 0; d < n; ++d) {
      for (const auto& f : faces(n, d)) {
        std::vector<std::vector<Rational>> rows;
        const auto normals = normal_directions(f, n);
        CHECK(normals.size() == static_cast<std::size_t>(n - d));
        for (const auto& u : normals) {
          rows.emplace_back(u.cartesian.begin(), u.cartesian.end());
          // barycentric form sums to zero and maps back to the Cartesian one
          const auto delta = u.barycentric(n);
          std::vector<Rational> x(rows.back());
          CHECK(reference_barycentric_direction(x) == delta);
        }
        const auto& v = f.vertices();
        for (std::size_t i = 1; i < v.size(); ++i) {
          std::vector<Rational> e(n, Rational(0));
          if (v[i] > 0) e[v[i] - 1] += 1;
          if (v[0] > 0) e[v[0] - 1] -= 1;
          rows.push_back(e);
        }
        CHECK(rank_oracle(rows) == static_cast<std::size_t>(n));
      }
    }
  }
}

TEST_CASE("domain points") {
  const std::vector<int> mid{1, 1};
  auto p = domain_point(mid, Face(3, {0, 1}), 2);
  CHECK(p.coords == std::vector<Rational>{Rational(1, 2), Rational(1, 2), 0, 0});

  const std::vector<int> centroid{1, 1, 1};
  p = domain_point(centroid, Face(2, {0, 1, 2}), 3);
  CHECK(p.coords == std::vector<Rational>{Rational(1, 3), Rational(1, 3), Rational(1, 3)});

  const std::vector<int> two_one{2, 1};
  p = domain_point(two_one, Face(4, {0, 1}), 3);
  CHECK(p.coords == std::vector<Rational>{Rational(2, 3), Rational(1, 3), 0, 0, 0});
  CHECK(p.cartesian() == std::vector<Rational>{Rational(1, 3), 0, 0, 0});

  const std::vector<int> with_zero{0, 3};
  CHECK_THROWS_AS(domain_point(with_zero, Face(2, {1, 2}), 3), InvalidArgument);
  CHECK_THROWS_AS(domain_point(two_one, Face(2, {1, 2}), 4), InvalidArgument);
}

TEST_CASE("domain points are positive on the face and sum to one") {
  for (int n = 1; n <= 4; ++n) {
    for (int d = 0; d <= n; ++d) {
      for (const auto& f : faces(n, d)) {
        std::vector<int> a(d + 1, 1);
        a.back() += 4;
        const auto p = domain_point(a, f, d + 5);
        Rational sum = 0;
        for (int i = 0; i <= n; ++i) {
          sum += p.coords[i];
          CHECK((p.coords[i] > 0) == f.contains(i));
        }
        CHECK(sum == 1);
      }
    }
  }
}

TEST_CASE("make_bary_point validates") {
  CHECK_NOTHROW(make_bary_point({Rational(1, 4), Rational(3, 4)}));
  CHECK_THROWS_AS(make_bary_point({Rational(1, 4), Rational(1, 4)}), InvalidArgument);
  CHECK_THROWS_AS(make_bary_point({Rational(-1, 4), Rational(5, 4)}), InvalidArgument);
}
