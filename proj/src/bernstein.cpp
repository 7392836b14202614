#include "ssfem/bernstein.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <limits>

#include "ssfem/errors.hpp"

namespace ssfem {

BernsteinIndex::BernsteinIndex(std::vector<int> entries) : entries_(std::move(entries)), degree_(0) {
  if (entries_.size() < 2) throw InvalidArgument("Bernstein index needs at least 2 entries");
  for (int a : entries_) {
    if (a < 0) throw InvalidArgument("Bernstein index entries must be nonnegative");
    degree_ += a;
  }
}

std::string BernsteinIndex::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(entries_[i]);
  }
  return s + ")";
}

std::vector<BernsteinIndex> enumerate_indices(int n, int k) {
  if (n < 1 || n > kMaxDimension || k < 0) {
    throw InvalidArgument("enumerate_indices: need 1 <= n <= " + std::to_string(kMaxDimension) +
                          " and k >= 0");
  }
  std::vector<BernsteinIndex> out;
  out.reserve(poly_dim(n, k).get_ui());
  for_each_index(n, k, [&](std::span<const int> a) {
    out.emplace_back(std::vector<int>(a.begin(), a.end()));
  });
  return out;
}

std::size_t lex_rank(std::span<const int> alpha) {
  // Count the compositions that agree on a prefix and are smaller at the
  // next position.
  const int parts = static_cast<int>(alpha.size());
  int remaining = 0;
  for (int a : alpha) remaining += a;
  std::size_t rank = 0;
  for (int i = 0; i + 1 < parts; ++i) {
    const int tail_parts = parts - i - 1;
    for (int v = 0; v < alpha[i]; ++v) {
      // compositions of (remaining - v) into tail_parts parts
      rank += binomial(remaining - v + tail_parts - 1, tail_parts - 1).get_ui();
    }
    remaining -= alpha[i];
  }
  return rank;
}

int face_distance(std::span<const int> alpha, const Face& face) {
  if (static_cast<int>(alpha.size()) != face.ambient_dim() + 1) {
    throw InvalidArgument("face_distance: index and face dimensions differ");
  }
  int total = 0;
  int on_face = 0;
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    total += alpha[i];
    if (face.contains(static_cast<int>(i))) on_face += alpha[i];
  }
  return total - on_face;
}

SmoothnessProfile::SmoothnessProfile(int ambient_dim, std::vector<int> orders, int degree)
    : ambient_dim_(ambient_dim), orders_(std::move(orders)), degree_(degree) {
  if (ambient_dim_ < 1 || ambient_dim_ > kMaxDimension) {
    throw InvalidConfiguration("profile dimension " + std::to_string(ambient_dim_) +
                               " outside 1.." + std::to_string(kMaxDimension));
  }
  if (static_cast<int>(orders_.size()) != ambient_dim_) {
    throw InvalidConfiguration("profile needs " + std::to_string(ambient_dim_) +
                               " orders, got " + std::to_string(orders_.size()));
  }
  for (std::size_t d = 0; d < orders_.size(); ++d) {
    if (orders_[d] < 0) throw InvalidConfiguration("profile orders must be nonnegative");
    if (d > 0 && orders_[d] >= orders_[d - 1]) {
      throw InvalidConfiguration("profile orders must be strictly decreasing: " + to_string());
    }
  }
  if (degree_ < 2 * orders_[0] + 1) {
    throw InvalidConfiguration("degree " + std::to_string(degree_) + " below 2*r_0+1 = " +
                               std::to_string(2 * orders_[0] + 1));
  }
}

std::optional<int> SmoothnessProfile::family_smoothness() const {
  if (ambient_dim_ > 5) return std::nullopt;
  const int m = orders_.back();
  if (m < 1) return std::nullopt;
  if (family_profile(ambient_dim_, m) == *this) return m;
  return std::nullopt;
}

std::string SmoothnessProfile::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(orders_[i]);
  }
  return s + "), k=" + std::to_string(degree_);
}

SmoothnessProfile family_profile(int n, int m) {
  if (n < 1 || n > 5) {
    throw Unsupported("family profiles exist for dimensions 1..5, not " + std::to_string(n));
  }
  if (m < 1) throw InvalidArgument("smoothness must be at least 1");
  std::vector<int> orders(n);
  for (int d = 0; d < n; ++d) orders[d] = (1 << (n - 1 - d)) * m;
  return SmoothnessProfile(n, std::move(orders), (1 << n) * m + 1);
}

Classifier::Classifier(SmoothnessProfile profile) : profile_(std::move(profile)) {
  const int n = profile_.ambient_dim();
  for (int d = 0; d <= n; ++d) {
    first_of_dim_.push_back(static_cast<int>(faces_.size()));
    for (auto& f : faces(n, d)) {
      masks_.push_back(f.mask());
      faces_.push_back(std::move(f));
    }
  }
  first_of_dim_.push_back(static_cast<int>(faces_.size()));
}

std::pair<int, int> Classifier::classify_id(std::span<const int> alpha) const {
  const int n = profile_.ambient_dim();
  if (static_cast<int>(alpha.size()) != n + 1) {
    throw InvalidArgument("classify: index dimension does not match the profile");
  }
  int k = 0;
  for (int a : alpha) k += a;
  if (k != profile_.degree()) {
    throw InvalidArgument("classify: index degree " + std::to_string(k) +
                          " differs from profile degree " + std::to_string(profile_.degree()));
  }
  std::array<int, (std::size_t{1} << (kMaxDimension + 1))> sums;
  sums[0] = 0;
  const std::uint32_t end = std::uint32_t{1} << (n + 1);
  for (std::uint32_t mask = 1; mask < end; ++mask) {
    sums[mask] = sums[mask & (mask - 1)] + alpha[std::countr_zero(mask)];
  }
  for (int d = 0; d < n; ++d) {
    const int r = profile_.order(d);
    for (int id = first_of_dim_[d]; id < first_of_dim_[d + 1]; ++id) {
      const int dist = k - sums[masks_[id]];
      if (dist <= r) return {id, dist};
    }
  }
  int nearest = std::numeric_limits<int>::max();
  for (int id = first_of_dim_[n - 1]; id < first_of_dim_[n]; ++id) {
    nearest = std::min(nearest, k - sums[masks_[id]]);
  }
  return {first_of_dim_[n], nearest};
}

Ownership Classifier::classify(std::span<const int> alpha) const {
  auto [id, order] = classify_id(alpha);
  return Ownership{faces_[id], order};
}

Ownership classify(const BernsteinIndex& alpha, const SmoothnessProfile& profile) {
  return Classifier(profile).classify(alpha.entries());
}

Count PartitionReport::count(const Face& face, int order) const {
  auto it = per_face_order_counts.find({face, order});
  return it == per_face_order_counts.end() ? Count(0) : it->second;
}

std::vector<Count> PartitionReport::face_counts_by_order(const Face& face, int max_order) const {
  std::vector<Count> out;
  for (int t = 0; t <= max_order; ++t) out.push_back(count(face, t));
  return out;
}

PartitionReport partition(const SmoothnessProfile& profile) {
  const int n = profile.ambient_dim();
  const int k = profile.degree();
  Classifier classifier(profile);
  const int max_order = profile.order(0);
  const int num_faces = classifier.num_faces();
  const int interior_id = num_faces - 1;

  std::vector<Count> tally(static_cast<std::size_t>(num_faces) * (max_order + 1));
  std::map<int, Count> interior_distances;
  for_each_index(n, k, [&](std::span<const int> a) {
    auto [id, order] = classifier.classify_id(a);
    if (id == interior_id) {
      ++tally[static_cast<std::size_t>(id) * (max_order + 1)];
      ++interior_distances[order];
    } else {
      ++tally[static_cast<std::size_t>(id) * (max_order + 1) + order];
    }
  });

  PartitionReport report{profile, {}, std::vector<Count>(n + 1), std::move(interior_distances), 0};
  for (int id = 0; id < num_faces; ++id) {
    const Face& f = classifier.face(id);
    for (int t = 0; t <= max_order; ++t) {
      const Count& c = tally[static_cast<std::size_t>(id) * (max_order + 1) + t];
      if (c == 0) continue;
      report.per_face_order_counts.emplace(std::make_pair(f, t), c);
      report.per_dim_totals[f.dim()] += c;
      report.grand_total += c;
    }
  }
  return report;
}

std::map<int, Count> owned_layer_counts(const SmoothnessProfile& profile, const Face& face,
                                        int order) {
  if (face.ambient_dim() != profile.ambient_dim()) {
    throw InvalidArgument("owned_layer_counts: face and profile dimensions differ");
  }
  Classifier classifier(profile);
  std::map<int, Count> layers;
  const int lead = face.lowest_vertex();
  for_each_index(profile.ambient_dim(), profile.degree(), [&](std::span<const int> a) {
    auto [id, t] = classifier.classify_id(a);
    const Face& owner = classifier.face(id);
    const int derivative_order = owner.is_full() ? 0 : t;
    if (derivative_order == order && owner == face) ++layers[a[lead]];
  });
  return layers;
}

}  // namespace ssfem
