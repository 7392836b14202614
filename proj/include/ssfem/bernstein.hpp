#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "ssfem/combinatorics.hpp"
#include "ssfem/simplex.hpp"

namespace ssfem {

// Multi-index (alpha_0, ..., alpha_n) of a degree-k Bernstein polynomial.
class BernsteinIndex {
 public:
  explicit BernsteinIndex(std::vector<int> entries);

  int dim() const { return static_cast<int>(entries_.size()) - 1; }
  int degree() const { return degree_; }
  std::span<const int> entries() const { return entries_; }
  int operator[](std::size_t i) const { return entries_[i]; }

  std::string to_string() const;

  auto operator<=>(const BernsteinIndex& other) const { return entries_ <=> other.entries_; }
  bool operator==(const BernsteinIndex& other) const { return entries_ == other.entries_; }

 private:
  std::vector<int> entries_;
  int degree_;
};

/// Every index of degree k in n+1 parts, ascending lexicographic order.
std::vector<BernsteinIndex> enumerate_indices(int n, int k);

/// Visits the same sequence as enumerate_indices without materializing it.
template <class Visitor>
void for_each_index(int n, int k, Visitor&& visit) {
  std::vector<int> a(n + 1, 0);
  a[n] = k;
  while (true) {
    visit(std::span<const int>(a));
    // Next composition: bump the rightmost position (other than the last)
    // that still has room, then pour the remainder into the last slot.
    int i = n - 1;
    while (i >= 0 && a[n] == 0) {
      a[n] += a[i];
      a[i] = 0;
      --i;
    }
    if (i < 0) return;
    ++a[i];
    --a[n];
    // Everything right of i (except the tail) is already zero.
  }
}

/// Position of alpha in enumerate_indices(alpha.size()-1, |alpha|).
std::size_t lex_rank(std::span<const int> alpha);

/// k minus the sum of the entries on the face's vertices.
int face_distance(std::span<const int> alpha, const Face& face);
inline int face_distance(const BernsteinIndex& alpha, const Face& face) {
  return face_distance(alpha.entries(), face);
}

// Continuity orders r_0 > r_1 > ... > r_{n-1} demanded across faces of each
// dimension, together with the polynomial degree.
class SmoothnessProfile {
 public:
  // Throws InvalidConfiguration if orders are not strictly decreasing and
  // nonnegative, or degree < 2*r_0 + 1.
  SmoothnessProfile(int ambient_dim, std::vector<int> orders, int degree);

  int ambient_dim() const { return ambient_dim_; }
  int degree() const { return degree_; }
  const std::vector<int>& orders() const { return orders_; }
  int order(int face_dim) const { return orders_.at(face_dim); }

  // m such that this equals family_profile(n, m), if any.
  std::optional<int> family_smoothness() const;

  std::string to_string() const;
  bool operator==(const SmoothnessProfile&) const = default;

 private:
  int ambient_dim_;
  std::vector<int> orders_;
  int degree_;
};

/// C^m-P_{2^n m + 1} profile: r_d = 2^{n-1-d} m. n must be in 1..5.
SmoothnessProfile family_profile(int n, int m);

struct Ownership {
  Face owner;
  // Distance of the index to the owner. For interior indices this is the
  // smallest facet distance, kept for diagnostics only.
  int order;

  bool interior() const { return owner.is_full(); }
  // Normal-derivative order of the nodal functional; 0 for interior indices.
  int derivative_order() const { return interior() ? 0 : order; }
};

// Minimal-dimension owner search with lexicographic tie-break. Holds the
// face masks of the lattice so that repeated classification stays cheap.
class Classifier {
 public:
  explicit Classifier(SmoothnessProfile profile);

  const SmoothnessProfile& profile() const { return profile_; }
  Ownership classify(std::span<const int> alpha) const;

  // Same search, returning the owner's lattice id and the order without
  // building a Face. Ids enumerate faces by dimension, then lexicographically.
  std::pair<int, int> classify_id(std::span<const int> alpha) const;
  const Face& face(int id) const { return faces_[id]; }
  int num_faces() const { return static_cast<int>(faces_.size()); }

 private:
  SmoothnessProfile profile_;
  std::vector<Face> faces_;           // lattice order
  std::vector<std::uint32_t> masks_;  // parallel to faces_
  std::vector<int> first_of_dim_;     // first id of each dimension, plus end
};

Ownership classify(const BernsteinIndex& alpha, const SmoothnessProfile& profile);

struct PartitionReport {
  SmoothnessProfile profile;
  // (owner, derivative order) -> number of owned indices.
  std::map<std::pair<Face, int>, Count> per_face_order_counts;
  std::vector<Count> per_dim_totals;  // indexed by face dimension 0..n
  // Interior indices by smallest facet distance.
  std::map<int, Count> interior_distance_counts;
  Count grand_total;

  Count count(const Face& face, int order) const;
  // Counts of one face for orders 0..max_order.
  std::vector<Count> face_counts_by_order(const Face& face, int max_order) const;
};

/// Classifies every index of degree profile.degree().
PartitionReport partition(const SmoothnessProfile& profile);

/// Indices owned by `face` at derivative order `order`, grouped by the
/// entry at the face's lowest vertex.
std::map<int, Count> owned_layer_counts(const SmoothnessProfile& profile, const Face& face,
                                        int order);

}  // namespace ssfem
