#pragma once

#include <optional>
#include <vector>

#include "ssfem/bernstein.hpp"

namespace ssfem {

inline constexpr std::size_t kDefaultCap = 10000;

// Constructive count for one face dimension: the count on a single face by
// normal-derivative order, and the total over all faces of that dimension.
struct FaceDofCount {
  int face_dim = 0;
  Count num_faces;
  std::vector<Count> per_face_by_order;
  Count per_face_total;
  Count total;
};

struct FourFaceDofCount {
  FaceDofCount counts;
  // First-order 4-face functionals split by the entry at the face's lowest
  // vertex: six single layers followed by the merged tail. Only populated
  // for the C^1-P_33 element in 5D.
  std::vector<Count> order1_layers;
};

struct InteriorDofCount {
  Count total;
  Count layered;   // closed-form layered count (or lattice enumeration)
  Count residual;  // poly_dim minus all partition-owned proper-face indices
  // Interior indices whose entry at vertex 0 is minimal; C^1-P_33 only.
  std::optional<Count> first_layer;
};

// General constructive route: on-face lattice points that no sub-face claims,
// times the number of normal-derivative multi-orders. d == n is the interior.
FaceDofCount constructive_face_count(const SmoothnessProfile& profile, int d);

// The per-dimension counts below accept family profiles only and throw
// Unsupported otherwise. For the 5D C^1-P_33 element they use the closed
// forms of the layered construction; other family members fall back to
// constructive_face_count (or closed forms where one exists).
FaceDofCount count_vertex_dofs(const SmoothnessProfile& profile);
FaceDofCount count_edge_dofs(const SmoothnessProfile& profile);
FaceDofCount count_triangle_dofs(const SmoothnessProfile& profile);
FaceDofCount count_tet_dofs(const SmoothnessProfile& profile);
FourFaceDofCount count_4face_dofs(const SmoothnessProfile& profile);

// Throws VerificationError when the layered count and the partition
// residual disagree.
InteriorDofCount count_interior_dofs(const SmoothnessProfile& profile);
InteriorDofCount count_interior_dofs(const SmoothnessProfile& profile,
                                     const PartitionReport& partition);

// Dispatches to the count_* operation for faces of dimension d < n.
FaceDofCount count_face_dofs(const SmoothnessProfile& profile, int d);

// A nodal functional: derivative of multi-order direction_multiorder along
// normal_directions(owner), evaluated at a domain point of the owner.
struct DofFunctional {
  Face owner;
  int order = 0;
  std::vector<int> direction_multiorder;
  BaryPoint point;
  BernsteinIndex source_index;

  bool operator==(const DofFunctional&) const = default;
};

struct ElementSpec {
  SmoothnessProfile profile;
  std::vector<DofFunctional> functionals;
  PartitionReport counts;
};

/// One functional per Bernstein index, sorted by owner, order, index.
/// Throws SizeError if a cap is given and poly_dim(n, k) exceeds it.
ElementSpec build_element(const SmoothnessProfile& profile,
                          std::optional<std::size_t> cap = std::nullopt);
ElementSpec build_element(int n, int m, std::optional<std::size_t> cap = std::nullopt);

// The functional generated for a single owned index.
DofFunctional functional_for_index(const BernsteinIndex& alpha, const Ownership& ownership);

}  // namespace ssfem
