#include "ssfem/dofs.hpp"

#include <algorithm>
#include <array>
#include <bit>

#include "ssfem/errors.hpp"

namespace ssfem {

namespace {

int require_family(const SmoothnessProfile& profile) {
  auto m = profile.family_smoothness();
  if (!m) {
    throw Unsupported("constructive counts need a family profile C^m-P_{2^n m+1}; got " +
                      profile.to_string());
  }
  return *m;
}

void require_dim(const SmoothnessProfile& profile, int face_dim, const char* what) {
  if (profile.ambient_dim() <= face_dim) {
    throw InvalidArgument(std::string(what) + " need ambient dimension above " +
                          std::to_string(face_dim) + ", got " +
                          std::to_string(profile.ambient_dim()));
  }
}

bool is_c1_p33(const SmoothnessProfile& profile) {
  return profile.ambient_dim() == 5 && profile.family_smoothness() == 1;
}

Count R2(int degree, int corner) { return chopped_count(2, degree, corner); }
Count R3(int degree, int corner) { return chopped_count(3, degree, corner); }

// Sum_{i=a}^{b} C(i+2, 2), a >= 1.
Count triangle_number_sum(int a, int b) {
  return hockey_stick_b(2, b) - hockey_stick_b(2, a - 1);
}

FaceDofCount finish(int n, int d, std::vector<Count> per_order) {
  FaceDofCount out;
  out.face_dim = d;
  out.num_faces = binomial(n + 1, d + 1);
  out.per_face_by_order = std::move(per_order);
  out.per_face_total = 0;
  for (const auto& c : out.per_face_by_order) out.per_face_total += c;
  out.total = out.num_faces * out.per_face_total;
  return out;
}

// Lattice points of degree `degree` on a d-simplex that no proper sub-face
// claims under the profile: every sub-face G of dimension g must sit at
// distance > r_g.
Count unclaimed_face_points(const SmoothnessProfile& profile, int d, int degree) {
  if (d == 0) return 1;
  const int k = profile.degree();
  const std::uint32_t full = (std::uint32_t{1} << (d + 1)) - 1;
  std::vector<std::pair<std::uint32_t, int>> constraints;  // (mask, max on-face sum)
  for (std::uint32_t mask = 1; mask < full; ++mask) {
    const int g = std::popcount(mask) - 1;
    constraints.emplace_back(mask, k - profile.order(g) - 1);
  }
  Count points = 0;
  std::array<int, (std::size_t{1} << (kMaxDimension + 1))> sums;
  sums[0] = 0;
  for_each_index(d, degree, [&](std::span<const int> beta) {
    for (std::uint32_t mask = 1; mask < full; ++mask) {
      sums[mask] = sums[mask & (mask - 1)] + beta[std::countr_zero(mask)];
    }
    for (const auto& [mask, bound] : constraints) {
      if (sums[mask] > bound) return;
    }
    ++points;
  });
  return points;
}

std::vector<Count> c1_p33_order1_layers() {
  std::vector<Count> layers;
  Count first = R2(16, 3) + R2(18, 4) + R2(20, 5) + R2(19, 4) + R2(18, 3) + R2(17, 2);
  for (int i = 8; i <= 16; ++i) first += R2(i, 1);
  layers.push_back(first);

  Count second = R2(18, 4);
  for (int i = 1; i <= 5; ++i) second += R2(15 + i, i);
  for (int i = 7; i <= 15; ++i) second += R2(i, 0);
  layers.push_back(second);

  // Transitional layers 3..6 lose one vertex chop per layer while the
  // triangle-number tail grows by one term.
  for (int layer = 3; layer <= 6; ++layer) {
    Count c = R2(15, 0) + R2(16, 1) + triangle_number_sum(9 - layer, 14);
    for (int i = 2; i <= 8 - layer; ++i) c += R2(15 + i, i);
    layers.push_back(c);
  }

  layers.push_back(binomial(20, 4) - binomial(11, 4) - Count(9 * 4) * binomial(4, 3));
  return layers;
}

Count c1_p33_interior_first_layer() {
  Count first_tet = R2(18, 4) + R2(20, 5) + R2(19, 4) + R2(18, 3) + R2(17, 2) + R2(16, 1);
  for (int i = 7; i <= 15; ++i) first_tet += R2(i, 0);
  Count c = first_tet;
  for (int i = 1; i <= 5; ++i) c += R3(15 + i, i);
  for (int i = 7; i <= 15; ++i) c += R3(i, 0);
  return c;
}

}  // namespace

FaceDofCount constructive_face_count(const SmoothnessProfile& profile, int d) {
  const int n = profile.ambient_dim();
  if (d < 0 || d > n) throw InvalidArgument("constructive_face_count: face dimension out of range");
  std::vector<Count> per_order;
  if (d == n) {
    per_order.push_back(unclaimed_face_points(profile, n, profile.degree()));
  } else {
    for (int t = 0; t <= profile.order(d); ++t) {
      Count directions = binomial(t + n - d - 1, n - d - 1);
      per_order.push_back(directions * unclaimed_face_points(profile, d, profile.degree() - t));
    }
  }
  return finish(n, d, std::move(per_order));
}

FaceDofCount count_vertex_dofs(const SmoothnessProfile& profile) {
  require_family(profile);
  const int n = profile.ambient_dim();
  const int r0 = profile.order(0);
  std::vector<Count> per_order;
  for (int t = 0; t <= r0; ++t) per_order.push_back(binomial(t + n - 1, n - 1));
  FaceDofCount out = finish(n, 0, std::move(per_order));
  if (out.per_face_total != hockey_stick_a(n - 1, r0)) {
    throw VerificationError("vertex count disagrees with the hockey-stick closed form");
  }
  return out;
}

FaceDofCount count_edge_dofs(const SmoothnessProfile& profile) {
  require_family(profile);
  require_dim(profile, 1, "edge counts");
  const int n = profile.ambient_dim();
  // With k = 2 r_0 + 1, an order-t edge index has exactly t admissible
  // splits of k - t between the two endpoints.
  std::vector<Count> per_order;
  for (int t = 0; t <= profile.order(1); ++t) {
    per_order.push_back(Count(t) * binomial(t + n - 2, n - 2));
  }
  return finish(n, 1, std::move(per_order));
}

FaceDofCount count_triangle_dofs(const SmoothnessProfile& profile) {
  require_family(profile);
  require_dim(profile, 2, "triangle counts");
  if (!is_c1_p33(profile)) return constructive_face_count(profile, 2);
  // Order t: C(t+2,2) directions times P_{6+2t} points minus P_{t-2} corners.
  std::vector<Count> per_order;
  for (int t = 0; t <= 4; ++t) {
    std::optional<int> corner = t >= 2 ? std::optional<int>(t - 2) : std::nullopt;
    per_order.push_back(binomial(t + 2, 2) * chopped_count(2, 6 + 2 * t, corner));
  }
  return finish(5, 2, std::move(per_order));
}

FaceDofCount count_tet_dofs(const SmoothnessProfile& profile) {
  require_family(profile);
  require_dim(profile, 3, "tetrahedron counts");
  if (!is_c1_p33(profile)) return constructive_face_count(profile, 3);
  std::vector<Count> per_order{
      R3(13, 1),
      Count(2) * R3(16, 3),
      // four boundary triangles of the first level plus the inner block
      Count(3) * (Count(4) * R2(16, 3) + R3(15, 2)),
  };
  return finish(5, 3, std::move(per_order));
}

FourFaceDofCount count_4face_dofs(const SmoothnessProfile& profile) {
  require_family(profile);
  require_dim(profile, 4, "4-face counts");
  if (!is_c1_p33(profile)) return {constructive_face_count(profile, 4), {}};
  std::vector<Count> layers = c1_p33_order1_layers();
  Count order1 = 0;
  for (const auto& c : layers) order1 += c;
  return {finish(5, 4, {chopped_count(4, 18, 4), order1}), std::move(layers)};
}

InteriorDofCount count_interior_dofs(const SmoothnessProfile& profile) {
  require_family(profile);
  return count_interior_dofs(profile, partition(profile));
}

InteriorDofCount count_interior_dofs(const SmoothnessProfile& profile,
                                     const PartitionReport& report) {
  require_family(profile);
  if (!(report.profile == profile)) {
    throw InvalidArgument("count_interior_dofs: partition built for a different profile");
  }
  const int n = profile.ambient_dim();
  InteriorDofCount out;
  if (is_c1_p33(profile)) {
    out.first_layer = c1_p33_interior_first_layer();
    out.layered = *out.first_layer + chopped_count(5, 20, 5) - binomial(10, 4) - Count(8 * 5);
  } else {
    out.layered = constructive_face_count(profile, n).per_face_total;
  }
  out.residual = poly_dim(n, profile.degree());
  for (int d = 0; d < n; ++d) out.residual -= report.per_dim_totals[d];
  if (out.layered != out.residual) {
    throw VerificationError("interior count mismatch: layered " + out.layered.get_str() +
                            " vs partition residual " + out.residual.get_str());
  }
  out.total = out.layered;
  return out;
}

FaceDofCount count_face_dofs(const SmoothnessProfile& profile, int d) {
  switch (d) {
    case 0: return count_vertex_dofs(profile);
    case 1: return count_edge_dofs(profile);
    case 2: return count_triangle_dofs(profile);
    case 3: return count_tet_dofs(profile);
    case 4: return count_4face_dofs(profile).counts;
    default:
      throw InvalidArgument("count_face_dofs: no constructive count for face dimension " +
                            std::to_string(d));
  }
}

DofFunctional functional_for_index(const BernsteinIndex& alpha, const Ownership& ownership) {
  const Face& owner = ownership.owner;
  const int t = ownership.derivative_order();
  std::vector<int> multiorder;
  for (int w : owner.off_face_vertices()) multiorder.push_back(alpha[w]);
  std::vector<int> on_face;
  for (int v : owner.vertices()) on_face.push_back(alpha[v]);
  return DofFunctional{owner, t, std::move(multiorder),
                       domain_point(on_face, owner, alpha.degree() - t), alpha};
}

ElementSpec build_element(const SmoothnessProfile& profile, std::optional<std::size_t> cap) {
  const int n = profile.ambient_dim();
  const Count size = poly_dim(n, profile.degree());
  if (cap && size > Count(static_cast<unsigned long>(*cap))) {
    throw SizeError("element has " + size.get_str() + " functionals, above the cap of " +
                    std::to_string(*cap));
  }
  Classifier classifier(profile);
  std::vector<DofFunctional> functionals;
  functionals.reserve(size.get_ui());
  for_each_index(n, profile.degree(), [&](std::span<const int> a) {
    BernsteinIndex alpha(std::vector<int>(a.begin(), a.end()));
    functionals.push_back(functional_for_index(alpha, classifier.classify(a)));
  });
  std::stable_sort(functionals.begin(), functionals.end(),
                   [](const DofFunctional& x, const DofFunctional& y) {
                     if (x.owner != y.owner) return lattice_less(x.owner, y.owner);
                     if (x.order != y.order) return x.order < y.order;
                     return x.source_index < y.source_index;
                   });
  return ElementSpec{profile, std::move(functionals), partition(profile)};
}

ElementSpec build_element(int n, int m, std::optional<std::size_t> cap) {
  return build_element(family_profile(n, m), cap);
}

}  // namespace ssfem
