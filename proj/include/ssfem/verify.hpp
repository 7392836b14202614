#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ssfem/dofs.hpp"
#include "ssfem/polynomial.hpp"

namespace ssfem {

// ---------------------------------------------------------------------------
// Count tables

struct CountCheck {
  std::string label;
  Count expected;
  Count actual;
  bool ok() const { return expected == actual; }
};

struct CountComparison {
  SmoothnessProfile profile;
  PartitionReport partition;
  std::vector<FaceDofCount> constructive;  // one entry per face dimension < n
  InteriorDofCount interior;
  std::vector<CountCheck> checks;
  std::vector<std::string> mismatches;  // labels of failed checks

  bool pass() const { return mismatches.empty(); }
};

/// Compares the distance partition, the constructive counts, and (for the
/// 5D C^1-P_33 element) the published count table.
CountComparison verify_counts(int n, int m);

// Published counts for the 5D C^1-P_33 element.
namespace c1_p33 {
inline constexpr int kPerVertex = 20349;
inline constexpr int kPerEdge = 3168;
inline constexpr std::array<int, 5> kPerTriangle{28, 135, 378, 820, 1530};
inline constexpr std::array<int, 3> kPerTet{544, 1778, 3804};
inline constexpr std::array<int, 2> kPer4Face{6965, 12990};
inline constexpr int kInterior = 62888;
inline constexpr std::array<int, 6> kDimensionTotals{122094, 47520, 57820, 91890, 119730, 62888};
inline constexpr int kGrandTotal = 501942;
inline constexpr std::array<int, 7> kOrder1Layers{1682, 1640, 1547, 1400, 1250, 1100, 4371};
inline constexpr int kInteriorFirstLayer = 11520;
}  // namespace c1_p33

/// Collapses layer counts (sorted by key) into `leading` single layers and
/// one merged tail.
std::vector<Count> group_layers(const std::map<int, Count>& layers, std::size_t leading = 6);

// ---------------------------------------------------------------------------
// Unisolvence

struct UnisolvenceResult {
  std::size_t dimension = 0;
  std::size_t rank = 0;
  bool pass = false;
};

/// Exact rank of the element's Vandermonde matrix. Throws SizeError when
/// poly_dim(n, k) exceeds the cap.
UnisolvenceResult verify_unisolvence(int n, int m, std::size_t cap = kDefaultCap);

// ---------------------------------------------------------------------------
// Two-element continuity

// 64-bit linear congruential generator, state <- a*state + c (mod 2^64) with
// a = 6364136223846793005 and c = 1442695040888963407. Draws use the top 31
// bits: uniform(lo, hi) = lo + (next() >> 33) % (hi - lo + 1).
class Lcg {
 public:
  explicit Lcg(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  int uniform(int lo, int hi);
  // numerator in [-100, 100], denominator in [1, 10]
  Rational dof_value();
  // Interior point of a face: integer weights in [1, 100/(d+1)] per vertex,
  // normalized, so the common denominator is at most 100.
  BaryPoint face_point(const Face& face);

 private:
  std::uint64_t state_;
};

// Simplex with rational Cartesian vertices and exact barycentric maps.
class AffineSimplex {
 public:
  explicit AffineSimplex(std::vector<std::vector<Rational>> vertices);

  int dim() const { return static_cast<int>(vertices_.size()) - 1; }
  const std::vector<std::vector<Rational>>& vertices() const { return vertices_; }

  BaryPoint barycentric(std::span<const Rational> x) const;
  std::vector<Rational> barycentric_direction(std::span<const Rational> u) const;
  std::vector<Rational> cartesian(const BaryPoint& lambda) const;
  std::vector<Rational> cartesian_direction(std::span<const Rational> delta) const;

 private:
  std::vector<std::vector<Rational>> vertices_;
  RationalMatrix inverse_;  // of [vertices as columns; row of ones]
};

struct MeshElement {
  AffineSimplex geometry;
  std::vector<PointDerivative> functionals;  // in this element's frame
  std::vector<std::size_t> global_ids;
};

// The reference simplex and its mirror image across the facet opposite
// vertex 0. The mirror keeps labels 1..n for the shared vertices and puts its
// apex at local label 0. Functionals owned by faces of the shared facet are
// taken from the first element, expressed in the second element's frame, and
// numbered once.
struct TwoElementMesh {
  SmoothnessProfile profile;
  std::array<MeshElement, 2> elements;
  std::size_t num_global = 0;
  std::vector<int> global_orders;  // derivative order of each global functional
  std::size_t shared_functionals = 0;
  Face shared_facet;
};

TwoElementMesh build_two_element_mesh(int n, int m, std::size_t cap = kDefaultCap);

struct ContinuityReport {
  Rational max_jump;
  std::size_t evaluations = 0;  // derivative comparisons performed
  std::size_t global_dofs = 0;
  std::size_t shared_functionals = 0;
};

/// Solves both elements for the given global DOF values and compares all
/// Cartesian derivatives up to order r_d at points of every shared d-face
/// (one point for a vertex, `samples` random interior points otherwise).
ContinuityReport measure_continuity(const TwoElementMesh& mesh,
                                    std::span<const Rational> global_values, Lcg& rng,
                                    int samples);

/// Random DOF values from the seeded generator, then measure_continuity.
ContinuityReport verify_continuity(int n, int m, std::uint64_t seed, int samples);

}  // namespace ssfem
