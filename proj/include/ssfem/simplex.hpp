#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ssfem/numeric.hpp"

namespace ssfem {

// Largest ambient dimension handled by the face lattice (vertex sets are
// kept as bit masks alongside the label list).
inline constexpr int kMaxDimension = 10;

// A sub-simplex of the reference n-simplex, given by its vertex labels.
class Face {
 public:
  Face(int ambient_dim, std::vector<int> vertices);

  static Face full(int ambient_dim);
  static Face from_mask(int ambient_dim, std::uint32_t mask);

  int ambient_dim() const { return ambient_dim_; }
  int dim() const { return static_cast<int>(vertices_.size()) - 1; }
  const std::vector<int>& vertices() const { return vertices_; }
  std::uint32_t mask() const { return mask_; }
  int lowest_vertex() const { return vertices_.front(); }

  bool contains(int vertex) const;
  bool is_subface_of(const Face& other) const;
  bool is_full() const { return dim() == ambient_dim_; }

  // Vertices of the reference simplex not on this face, ascending.
  std::vector<int> off_face_vertices() const;
  // All faces of dimension dim()-1, lexicographic.
  std::vector<Face> facets() const;

  std::string to_string() const;

  // Orders by ambient dimension, then vertex labels lexicographically.
  auto operator<=>(const Face& other) const = default;
  bool operator==(const Face& other) const = default;

 private:
  int ambient_dim_;
  std::vector<int> vertices_;
  std::uint32_t mask_;
};

// Face-lattice order used for owners: lower dimension first, then labels.
bool lattice_less(const Face& a, const Face& b);

/// All C(n+1, d+1) faces of dimension d, lexicographic in their labels.
std::vector<Face> faces(int n, int d);

// A point given by exact barycentric coordinates on the reference simplex.
struct BaryPoint {
  std::vector<Rational> coords;

  int ambient_dim() const { return static_cast<int>(coords.size()) - 1; }
  // Cartesian coordinates in the reference simplex (vertex 0 at the origin,
  // vertex i at the i-th unit point): x_i = coords[i].
  std::vector<Rational> cartesian() const;
  bool operator==(const BaryPoint&) const = default;
};

// Validates nonnegativity and the unit sum.
BaryPoint make_bary_point(std::vector<Rational> coords);

/// Domain point of alpha_on_face / effective_degree, padded with zeros off the
/// face. Every entry of alpha_on_face must be positive (interior point).
BaryPoint domain_point(std::span<const int> alpha_on_face, const Face& face,
                       int effective_degree);

// Direction from the lowest face vertex to an off-face vertex.
struct NormalDirection {
  int from;
  int to;
  std::vector<int> cartesian;  // length n

  // Same direction as a barycentric difference, e_to - e_from (length n+1).
  std::vector<Rational> barycentric(int n) const;
};

/// One direction per off-face vertex; their span complements the tangent
/// space of the face. Throws InvalidArgument for the full simplex.
std::vector<NormalDirection> normal_directions(const Face& face, int n);

/// Cartesian reference-frame vector -> barycentric difference (sums to 0).
std::vector<Rational> reference_barycentric_direction(std::span<const Rational> cartesian);

}  // namespace ssfem
