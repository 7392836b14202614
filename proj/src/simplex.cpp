#include "ssfem/simplex.hpp"

#include <algorithm>
#include <bit>

#include "ssfem/errors.hpp"

namespace ssfem {

namespace {

void check_ambient(int n) {
  if (n < 0 || n > kMaxDimension) {
    throw InvalidArgument("ambient dimension " + std::to_string(n) + " outside 0.." +
                          std::to_string(kMaxDimension));
  }
}

}  // namespace

Face::Face(int ambient_dim, std::vector<int> vertices)
    : ambient_dim_(ambient_dim), vertices_(std::move(vertices)), mask_(0) {
  check_ambient(ambient_dim_);
  if (vertices_.empty()) throw InvalidArgument("face needs at least one vertex");
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    int v = vertices_[i];
    if (v < 0 || v > ambient_dim_) {
      throw InvalidArgument("vertex label " + std::to_string(v) + " outside 0.." +
                            std::to_string(ambient_dim_));
    }
    if (i > 0 && vertices_[i - 1] >= v) {
      throw InvalidArgument("face vertex labels must be strictly increasing");
    }
    mask_ |= 1u << v;
  }
}

Face Face::full(int ambient_dim) {
  check_ambient(ambient_dim);
  std::vector<int> all(ambient_dim + 1);
  for (int i = 0; i <= ambient_dim; ++i) all[i] = i;
  return Face(ambient_dim, std::move(all));
}

Face Face::from_mask(int ambient_dim, std::uint32_t mask) {
  std::vector<int> labels;
  for (int v = 0; v <= ambient_dim; ++v) {
    if (mask & (1u << v)) labels.push_back(v);
  }
  if (mask >> (ambient_dim + 1)) throw InvalidArgument("mask has labels beyond the simplex");
  return Face(ambient_dim, std::move(labels));
}

bool Face::contains(int vertex) const {
  return vertex >= 0 && vertex <= ambient_dim_ && (mask_ & (1u << vertex)) != 0;
}

bool Face::is_subface_of(const Face& other) const {
  return ambient_dim_ == other.ambient_dim_ && (mask_ & ~other.mask_) == 0;
}

std::vector<int> Face::off_face_vertices() const {
  std::vector<int> off;
  for (int v = 0; v <= ambient_dim_; ++v) {
    if (!contains(v)) off.push_back(v);
  }
  return off;
}

std::vector<Face> Face::facets() const {
  std::vector<Face> result;
  if (dim() == 0) return result;
  // Dropping the last label first yields lexicographic order.
  for (int drop = dim(); drop >= 0; --drop) {
    std::vector<int> labels;
    for (int i = 0; i <= dim(); ++i) {
      if (i != drop) labels.push_back(vertices_[i]);
    }
    result.emplace_back(ambient_dim_, std::move(labels));
  }
  return result;
}

std::string Face::to_string() const {
  std::string s = "{";
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(vertices_[i]);
  }
  return s + "}";
}

bool lattice_less(const Face& a, const Face& b) {
  if (a.dim() != b.dim()) return a.dim() < b.dim();
  return a.vertices() < b.vertices();
}

std::vector<Face> faces(int n, int d) {
  check_ambient(n);
  if (d < 0 || d > n) {
    throw InvalidArgument("face dimension " + std::to_string(d) + " outside 0.." +
                          std::to_string(n));
  }
  std::vector<Face> result;
  std::vector<int> labels(d + 1);
  for (int i = 0; i <= d; ++i) labels[i] = i;
  while (true) {
    result.emplace_back(n, labels);
    int i = d;
    while (i >= 0 && labels[i] == n - d + i) --i;
    if (i < 0) break;
    ++labels[i];
    for (int j = i + 1; j <= d; ++j) labels[j] = labels[j - 1] + 1;
  }
  return result;
}

std::vector<Rational> BaryPoint::cartesian() const {
  return std::vector<Rational>(coords.begin() + 1, coords.end());
}

BaryPoint make_bary_point(std::vector<Rational> coords) {
  if (coords.size() < 2) throw InvalidArgument("barycentric point needs at least 2 coordinates");
  Rational sum = 0;
  for (const auto& c : coords) {
    if (c < 0) throw InvalidArgument("barycentric coordinate " + c.get_str() + " is negative");
    sum += c;
  }
  if (sum != 1) throw InvalidArgument("barycentric coordinates sum to " + sum.get_str());
  return BaryPoint{std::move(coords)};
}

BaryPoint domain_point(std::span<const int> alpha_on_face, const Face& face,
                       int effective_degree) {
  if (static_cast<int>(alpha_on_face.size()) != face.dim() + 1) {
    throw InvalidArgument("domain_point: need one entry per face vertex");
  }
  if (effective_degree <= 0) throw InvalidArgument("domain_point: degree must be positive");
  int sum = 0;
  for (int a : alpha_on_face) {
    if (a < 1) throw InvalidArgument("domain_point: zero entry gives a non-interior point");
    sum += a;
  }
  if (sum != effective_degree) {
    throw InvalidArgument("domain_point: entries sum to " + std::to_string(sum) + ", not " +
                          std::to_string(effective_degree));
  }
  std::vector<Rational> coords(face.ambient_dim() + 1, Rational(0));
  for (std::size_t i = 0; i < alpha_on_face.size(); ++i) {
    coords[face.vertices()[i]] = Rational(alpha_on_face[i], effective_degree);
    coords[face.vertices()[i]].canonicalize();
  }
  return BaryPoint{std::move(coords)};
}

std::vector<Rational> NormalDirection::barycentric(int n) const {
  std::vector<Rational> delta(n + 1, Rational(0));
  delta[to] += 1;
  delta[from] -= 1;
  return delta;
}

std::vector<NormalDirection> normal_directions(const Face& face, int n) {
  if (face.ambient_dim() != n) throw InvalidArgument("normal_directions: dimension mismatch");
  if (face.is_full()) throw InvalidArgument("normal_directions: the full simplex has no normals");
  const int base = face.lowest_vertex();
  std::vector<NormalDirection> dirs;
  for (int w : face.off_face_vertices()) {
    std::vector<int> v(n, 0);
    if (w > 0) v[w - 1] += 1;
    if (base > 0) v[base - 1] -= 1;
    dirs.push_back({base, w, std::move(v)});
  }
  return dirs;
}

std::vector<Rational> reference_barycentric_direction(std::span<const Rational> cartesian) {
  std::vector<Rational> delta(cartesian.size() + 1);
  Rational sum = 0;
  for (std::size_t i = 0; i < cartesian.size(); ++i) {
    delta[i + 1] = cartesian[i];
    sum += cartesian[i];
  }
  delta[0] = -sum;
  return delta;
}

}  // namespace ssfem
