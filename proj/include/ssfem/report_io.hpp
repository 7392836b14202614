#pragma once

#include <string>
#include <vector>

#include "ssfem/dofs.hpp"

namespace ssfem {

struct FaceRow {
  int face_dim = 0;
  Count num_faces;
  std::vector<Count> per_face_by_order;  // for the face listed first in lex order
  std::vector<Count> totals_by_order;    // summed over all faces of this dimension
  Count per_face_total;
  Count dimension_total;

  bool operator==(const FaceRow&) const = default;
};

// DOF count table of one element, one row per face dimension 0..n.
struct CountTable {
  int dimension = 0;
  int degree = 0;
  std::vector<int> profile;
  std::vector<FaceRow> faces;
  Count grand_total;
  // False when faces of one dimension do not all own the same counts; the
  // per-face columns then describe only the first face.
  bool uniform_faces = true;

  bool operator==(const CountTable&) const = default;
};

CountTable table_from_partition(const PartitionReport& report);
CountTable table_from_constructive(const SmoothnessProfile& profile,
                                   const std::vector<FaceDofCount>& faces,
                                   const InteriorDofCount& interior);

std::string to_json(const CountTable& table);
CountTable count_table_from_json(const std::string& text);
std::string to_csv(const CountTable& table);
// Human-readable; the last line is "total <grand total>".
std::string to_text(const CountTable& table);

std::string functionals_to_json(const ElementSpec& element);
std::vector<DofFunctional> functionals_from_json(const std::string& text);
std::string functionals_to_csv(const ElementSpec& element);
std::string functionals_to_text(const ElementSpec& element);

}  // namespace ssfem
