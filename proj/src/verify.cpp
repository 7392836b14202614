#include "ssfem/verify.hpp"

#include <algorithm>
#include <numeric>

#include "ssfem/errors.hpp"

namespace ssfem {

// ---------------------------------------------------------------------------
// Count tables

std::vector<Count> group_layers(const std::map<int, Count>& layers, std::size_t leading) {
  std::vector<Count> out;
  Count tail = 0;
  std::size_t i = 0;
  for (const auto& [key, c] : layers) {
    if (i++ < leading) {
      out.push_back(c);
    } else {
      tail += c;
    }
  }
  out.push_back(tail);
  return out;
}

namespace {

void add_check(CountComparison& cmp, std::string label, const Count& expected,
               const Count& actual) {
  CountCheck check{std::move(label), expected, actual};
  if (!check.ok()) cmp.mismatches.push_back(check.label);
  cmp.checks.push_back(std::move(check));
}

void check_published_table(CountComparison& cmp) {
  using namespace c1_p33;
  const auto& part = cmp.partition;
  const auto& cons = cmp.constructive;
  auto published = [&](const std::string& label, int expected, const Count& constructive,
                       const Count& partitioned) {
    add_check(cmp, "published " + label + " vs constructive", expected, constructive);
    add_check(cmp, "published " + label + " vs partition", expected, partitioned);
  };
  const auto vertex = faces(5, 0).front();
  const auto edge = faces(5, 1).front();
  const auto tri = faces(5, 2).front();
  const auto tet = faces(5, 3).front();
  const auto four = faces(5, 4).back();  // {1,2,3,4,5}: off-face vertex 0 leads

  published("per-vertex", kPerVertex, cons[0].per_face_total,
            [&] { Count s = 0; for (auto& c : part.face_counts_by_order(vertex, 16)) s += c; return s; }());
  published("per-edge", kPerEdge, cons[1].per_face_total,
            [&] { Count s = 0; for (auto& c : part.face_counts_by_order(edge, 8)) s += c; return s; }());
  for (int t = 0; t < 5; ++t) {
    published("per-triangle order " + std::to_string(t), kPerTriangle[t],
              cons[2].per_face_by_order[t], part.count(tri, t));
  }
  for (int t = 0; t < 3; ++t) {
    published("per-tetrahedron order " + std::to_string(t), kPerTet[t],
              cons[3].per_face_by_order[t], part.count(tet, t));
  }
  for (int t = 0; t < 2; ++t) {
    published("per-4-face order " + std::to_string(t), kPer4Face[t],
              cons[4].per_face_by_order[t], part.count(four, t));
  }
  published("interior", kInterior, cmp.interior.total, part.per_dim_totals[5]);
  for (int d = 0; d <= 5; ++d) {
    const Count constructive = d < 5 ? cons[d].total : cmp.interior.total;
    published("dimension-" + std::to_string(d) + " total", kDimensionTotals[d], constructive,
              part.per_dim_totals[d]);
  }
  published("grand total", kGrandTotal, poly_dim(5, 33), part.grand_total);

  const auto four_count = count_4face_dofs(cmp.profile);
  const auto layers = group_layers(owned_layer_counts(cmp.profile, four, 1));
  for (std::size_t i = 0; i < kOrder1Layers.size(); ++i) {
    const std::string name = i < 6 ? "order-1 4-face layer " + std::to_string(i + 1)
                                   : std::string("order-1 4-face layers 7-15");
    published(name, kOrder1Layers[i], four_count.order1_layers.at(i),
              i < layers.size() ? layers[i] : Count(0));
  }
  const auto interior_layers = owned_layer_counts(cmp.profile, Face::full(5), 0);
  published("interior first layer", kInteriorFirstLayer, cmp.interior.first_layer.value_or(0),
            interior_layers.empty() ? Count(0) : interior_layers.begin()->second);
}

}  // namespace

CountComparison verify_counts(int n, int m) {
  const SmoothnessProfile profile = family_profile(n, m);
  CountComparison cmp{profile, partition(profile), {}, {}, {}, {}};
  const auto& part = cmp.partition;

  for (int d = 0; d < n; ++d) {
    FaceDofCount c = count_face_dofs(profile, d);
    const int max_order = profile.order(d);
    const auto face_list = faces(n, d);
    const auto reference = part.face_counts_by_order(face_list.front(), max_order);
    for (int t = 0; t <= max_order; ++t) {
      add_check(cmp, "dim " + std::to_string(d) + " per-face order " + std::to_string(t),
                c.per_face_by_order[t], reference[t]);
    }
    Count uniform = 0;
    for (const auto& f : face_list) {
      if (part.face_counts_by_order(f, max_order) == reference) ++uniform;
    }
    add_check(cmp, "dim " + std::to_string(d) + " faces with identical counts", c.num_faces,
              uniform);
    add_check(cmp, "dim " + std::to_string(d) + " total", c.total, part.per_dim_totals[d]);
    // Every owned index lies within the continuity order of its owner.
    Count beyond = 0;
    for (const auto& [key, count] : part.per_face_order_counts) {
      if (key.first.dim() == d && key.second > max_order) beyond += count;
    }
    add_check(cmp, "dim " + std::to_string(d) + " indices beyond order r_d", 0, beyond);
    cmp.constructive.push_back(std::move(c));
  }

  try {
    cmp.interior = count_interior_dofs(profile, part);
  } catch (const VerificationError& e) {
    cmp.mismatches.push_back(e.what());
    cmp.interior.total = cmp.interior.layered;
  }
  add_check(cmp, "interior total", cmp.interior.total, part.per_dim_totals[n]);

  const Count dim = poly_dim(n, profile.degree());
  add_check(cmp, "partition grand total", dim, part.grand_total);
  Count constructive_sum = cmp.interior.total;
  for (const auto& c : cmp.constructive) constructive_sum += c.total;
  add_check(cmp, "constructive grand total", dim, constructive_sum);

  if (n == 5 && m == 1) check_published_table(cmp);
  return cmp;
}

// ---------------------------------------------------------------------------
// Unisolvence

UnisolvenceResult verify_unisolvence(int n, int m, std::size_t cap) {
  const SmoothnessProfile profile = family_profile(n, m);
  const Count size = poly_dim(n, profile.degree());
  if (size > Count(static_cast<unsigned long>(cap))) {
    throw SizeError("unisolvence for n=" + std::to_string(n) + ", m=" + std::to_string(m) +
                    " needs a " + size.get_str() + "x" + size.get_str() +
                    " exact elimination, above the cap of " + std::to_string(cap) +
                    "; 5D elements are beyond dense exact linear algebra (raise SSFEM_CAP to force)");
  }
  const ElementSpec element = build_element(profile, cap);
  UnisolvenceResult result;
  result.dimension = size.get_ui();
  result.rank = exact_rank(vandermonde(element, cap));
  result.pass = result.rank == result.dimension;
  return result;
}

// ---------------------------------------------------------------------------
// Two-element continuity

std::uint64_t Lcg::next() {
  state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
  return state_;
}

int Lcg::uniform(int lo, int hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<int>((next() >> 33) % span);
}

Rational Lcg::dof_value() {
  const int num = uniform(-100, 100);
  const int den = uniform(1, 10);
  Rational v(num, den);
  v.canonicalize();
  return v;
}

BaryPoint Lcg::face_point(const Face& face) {
  const int parts = face.dim() + 1;
  const int hi = std::max(1, 100 / parts);
  std::vector<int> weights;
  int total = 0;
  for (int i = 0; i < parts; ++i) {
    weights.push_back(uniform(1, hi));
    total += weights.back();
  }
  std::vector<Rational> coords(face.ambient_dim() + 1, Rational(0));
  for (int i = 0; i < parts; ++i) {
    coords[face.vertices()[i]] = Rational(weights[i], total);
    coords[face.vertices()[i]].canonicalize();
  }
  return BaryPoint{std::move(coords)};
}

AffineSimplex::AffineSimplex(std::vector<std::vector<Rational>> vertices)
    : vertices_(std::move(vertices)) {
  const std::size_t n = vertices_.size() - 1;
  RationalMatrix frame(n + 1, n + 1);
  for (std::size_t v = 0; v <= n; ++v) {
    if (vertices_[v].size() != n) throw InvalidArgument("simplex vertex has the wrong dimension");
    for (std::size_t j = 0; j < n; ++j) frame(j, v) = vertices_[v][j];
    frame(n, v) = 1;
  }
  inverse_ = solve_exact(frame, RationalMatrix::identity(n + 1));
}

BaryPoint AffineSimplex::barycentric(std::span<const Rational> x) const {
  const std::size_t n = vertices_.size() - 1;
  std::vector<Rational> lambda(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    Rational acc = inverse_(i, n);
    for (std::size_t j = 0; j < n; ++j) acc += inverse_(i, j) * x[j];
    lambda[i] = acc;
  }
  return BaryPoint{std::move(lambda)};
}

std::vector<Rational> AffineSimplex::barycentric_direction(std::span<const Rational> u) const {
  const std::size_t n = vertices_.size() - 1;
  std::vector<Rational> delta(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    Rational acc = 0;
    for (std::size_t j = 0; j < n; ++j) acc += inverse_(i, j) * u[j];
    delta[i] = acc;
  }
  return delta;
}

std::vector<Rational> AffineSimplex::cartesian(const BaryPoint& lambda) const {
  return cartesian_direction(lambda.coords);
}

std::vector<Rational> AffineSimplex::cartesian_direction(std::span<const Rational> delta) const {
  const std::size_t n = vertices_.size() - 1;
  std::vector<Rational> x(n, Rational(0));
  for (std::size_t v = 0; v <= n; ++v) {
    for (std::size_t j = 0; j < n; ++j) x[j] += delta[v] * vertices_[v][j];
  }
  return x;
}

namespace {

AffineSimplex reference_simplex(int n) {
  std::vector<std::vector<Rational>> v(n + 1, std::vector<Rational>(n, Rational(0)));
  for (int i = 1; i <= n; ++i) v[i][i - 1] = 1;
  return AffineSimplex(std::move(v));
}

// Reflection of the origin across x_1 + ... + x_n = 1 is (2/n, ..., 2/n).
AffineSimplex mirrored_simplex(int n) {
  std::vector<std::vector<Rational>> v(n + 1, std::vector<Rational>(n, Rational(0)));
  for (int j = 0; j < n; ++j) {
    v[0][j] = Rational(2, n);
    v[0][j].canonicalize();
  }
  for (int i = 1; i <= n; ++i) v[i][i - 1] = 1;
  return AffineSimplex(std::move(v));
}

PointDerivative transfer(const PointDerivative& f, const AffineSimplex& from,
                         const AffineSimplex& to) {
  PointDerivative out;
  out.point = to.barycentric(from.cartesian(f.point));
  for (const auto& dir : f.directions) {
    out.directions.push_back(to.barycentric_direction(from.cartesian_direction(dir)));
  }
  return out;
}

std::vector<Rational> dense(const Polynomial& p) {
  std::vector<Rational> out(poly_dim(p.dim(), p.degree()).get_ui(), Rational(0));
  for (const auto& [alpha, c] : p.coefficients()) out[lex_rank(alpha.entries())] = c;
  return out;
}

// All multi-orders mu in N^n with |mu| <= max_order, parents before children.
std::vector<std::vector<int>> multi_orders(int n, int max_order) {
  std::vector<std::vector<int>> out;
  for (int t = 0; t <= max_order; ++t) {
    for (const auto& idx : enumerate_indices(n, t)) {
      // drop the slack entry 0 to get a multi-order of total t over n axes
      std::vector<int> mu(idx.entries().begin() + 1, idx.entries().end());
      if (std::accumulate(mu.begin(), mu.end(), 0) == t) out.push_back(std::move(mu));
    }
  }
  return out;
}

struct DerivativeTable {
  std::vector<std::vector<int>> orders;
  std::vector<std::vector<Rational>> coefficients;  // dense, degree k - |mu|
};

DerivativeTable derivative_table(const Polynomial& p, const AffineSimplex& geometry,
                                 int max_order) {
  const int n = p.dim();
  std::vector<std::vector<Rational>> axes;
  for (int j = 0; j < n; ++j) {
    std::vector<Rational> e(n, Rational(0));
    e[j] = 1;
    axes.push_back(geometry.barycentric_direction(e));
  }
  DerivativeTable table;
  table.orders = multi_orders(n, std::min(max_order, p.degree()));
  std::map<std::vector<int>, Polynomial> cache;
  for (const auto& mu : table.orders) {
    int axis = -1;
    for (int j = n - 1; j >= 0; --j) {
      if (mu[j] > 0) {
        axis = j;
        break;
      }
    }
    Polynomial d = p;
    if (axis >= 0) {
      std::vector<int> parent = mu;
      --parent[axis];
      d = directional_derivative(cache.at(parent), axes[axis]);
    }
    table.coefficients.push_back(dense(d));
    cache.emplace(mu, std::move(d));
  }
  return table;
}

}  // namespace

TwoElementMesh build_two_element_mesh(int n, int m, std::size_t cap) {
  if (n < 1 || n > 3) {
    throw Unsupported("two-element continuity runs in dimensions 1..3, not " + std::to_string(n));
  }
  const ElementSpec element = build_element(family_profile(n, m), cap);
  std::vector<int> shared_labels;
  for (int v = 1; v <= n; ++v) shared_labels.push_back(v);
  TwoElementMesh mesh{element.profile,
                      {MeshElement{reference_simplex(n), {}, {}},
                       MeshElement{mirrored_simplex(n), {}, {}}},
                      0,
                      {},
                      0,
                      Face(n, shared_labels)};
  auto& a = mesh.elements[0];
  auto& b = mesh.elements[1];

  std::map<Face, std::vector<std::size_t>> shared_ids;  // owner -> global ids
  for (const auto& f : element.functionals) {
    const std::size_t id = mesh.num_global++;
    a.functionals.push_back(as_point_derivative(f));
    a.global_ids.push_back(id);
    mesh.global_orders.push_back(f.order);
    if (f.owner.is_subface_of(mesh.shared_facet)) shared_ids[f.owner].push_back(id);
  }
  for (const auto& f : element.functionals) {
    if (f.owner.is_subface_of(mesh.shared_facet)) continue;
    b.functionals.push_back(as_point_derivative(f));
    b.global_ids.push_back(mesh.num_global++);
    mesh.global_orders.push_back(f.order);
  }
  for (const auto& [owner, ids] : shared_ids) {
    for (std::size_t id : ids) {
      b.functionals.push_back(transfer(a.functionals[id], a.geometry, b.geometry));
      b.global_ids.push_back(id);
      ++mesh.shared_functionals;
    }
  }
  if (b.functionals.size() != a.functionals.size()) {
    throw VerificationError("mirrored element has " + std::to_string(b.functionals.size()) +
                            " functionals instead of " + std::to_string(a.functionals.size()));
  }
  return mesh;
}

ContinuityReport measure_continuity(const TwoElementMesh& mesh,
                                    std::span<const Rational> global_values, Lcg& rng,
                                    int samples) {
  if (global_values.size() != mesh.num_global) {
    throw InvalidArgument("measure_continuity: need one value per global functional");
  }
  if (samples < 1) throw InvalidArgument("measure_continuity: samples must be positive");
  const SmoothnessProfile& profile = mesh.profile;
  const int n = profile.ambient_dim();
  const int k = profile.degree();

  std::array<DerivativeTable, 2> tables;
  for (int e = 0; e < 2; ++e) {
    const auto& el = mesh.elements[e];
    RationalMatrix v = vandermonde(n, k, el.functionals, el.functionals.size());
    RationalMatrix rhs(el.functionals.size(), 1);
    for (std::size_t i = 0; i < el.global_ids.size(); ++i) rhs(i, 0) = global_values[el.global_ids[i]];
    RationalMatrix coeffs = solve_exact(v, rhs);
    std::vector<Rational> c(coeffs.rows());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = coeffs(i, 0);
    tables[e] = derivative_table(Polynomial::from_dense(n, k, c), el.geometry, profile.order(0));
  }

  ContinuityReport report{Rational(0), 0, mesh.num_global, mesh.shared_functionals};
  for (int d = 0; d < n; ++d) {
    const int r = profile.order(d);
    for (const auto& face : faces(n, d)) {
      if (!face.is_subface_of(mesh.shared_facet)) continue;
      const int points = d == 0 ? 1 : samples;
      for (int s = 0; s < points; ++s) {
        const BaryPoint xa = rng.face_point(face);
        const BaryPoint xb =
            mesh.elements[1].geometry.barycentric(mesh.elements[0].geometry.cartesian(xa));
        std::map<int, std::array<std::vector<Rational>, 2>> basis;  // degree -> values
        for (std::size_t i = 0; i < tables[0].orders.size(); ++i) {
          const auto& mu = tables[0].orders[i];
          const int order = std::accumulate(mu.begin(), mu.end(), 0);
          if (order > r) continue;
          const int degree = k - order;
          auto it = basis.find(degree);
          if (it == basis.end()) {
            it = basis.emplace(degree, std::array<std::vector<Rational>, 2>{
                                           bernstein_values(n, degree, xa),
                                           bernstein_values(n, degree, xb)}).first;
          }
          Rational jump = 0;
          for (int e = 0; e < 2; ++e) {
            Rational value = 0;
            const auto& coeffs = tables[e].coefficients[i];
            for (std::size_t j = 0; j < coeffs.size(); ++j) {
              if (coeffs[j] != 0) value += coeffs[j] * it->second[e][j];
            }
            jump += e == 0 ? value : Rational(-value);
          }
          report.max_jump = std::max(report.max_jump, abs(jump));
          ++report.evaluations;
        }
      }
    }
  }
  return report;
}

ContinuityReport verify_continuity(int n, int m, std::uint64_t seed, int samples) {
  const TwoElementMesh mesh = build_two_element_mesh(n, m);
  Lcg rng(seed);
  std::vector<Rational> values;
  values.reserve(mesh.num_global);
  for (std::size_t i = 0; i < mesh.num_global; ++i) values.push_back(rng.dof_value());
  return measure_continuity(mesh, values, rng, samples);
}

}  // namespace ssfem
