#include "ssfem/report_io.hpp"

#include <iomanip>
#include <sstream>

#include "json.hpp"
#include "ssfem/errors.hpp"

namespace ssfem {

using nlohmann::json;

namespace {

FaceRow make_row(int d, const Count& num_faces, std::vector<Count> per_face,
                 std::vector<Count> totals) {
  FaceRow row{d, num_faces, std::move(per_face), std::move(totals), 0, 0};
  for (const auto& c : row.per_face_by_order) row.per_face_total += c;
  for (const auto& c : row.totals_by_order) row.dimension_total += c;
  return row;
}

json strings(const std::vector<Count>& values) {
  json out = json::array();
  for (const auto& v : values) out.push_back(v.get_str());
  return out;
}

std::vector<Count> counts_from(const json& values) {
  std::vector<Count> out;
  for (const auto& v : values) out.push_back(parse_integer(v.get<std::string>()));
  return out;
}

Count count_from(const json& value) { return parse_integer(value.get<std::string>()); }

json parse_document(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace

CountTable table_from_partition(const PartitionReport& report) {
  const SmoothnessProfile& profile = report.profile;
  const int n = profile.ambient_dim();
  CountTable table{n, profile.degree(), profile.orders(), {}, report.grand_total, true};
  for (int d = 0; d <= n; ++d) {
    const int max_order = d < n ? profile.order(d) : 0;
    const auto face_list = faces(n, d);
    const auto reference = report.face_counts_by_order(face_list.front(), max_order);
    std::vector<Count> totals(max_order + 1);
    for (const auto& f : face_list) {
      const auto counts = report.face_counts_by_order(f, max_order);
      if (counts != reference) table.uniform_faces = false;
      for (int t = 0; t <= max_order; ++t) totals[t] += counts[t];
    }
    table.faces.push_back(make_row(d, static_cast<unsigned long>(face_list.size()), reference,
                                   std::move(totals)));
  }
  return table;
}

CountTable table_from_constructive(const SmoothnessProfile& profile,
                                   const std::vector<FaceDofCount>& faces,
                                   const InteriorDofCount& interior) {
  const int n = profile.ambient_dim();
  if (static_cast<int>(faces.size()) != n) {
    throw InvalidArgument("table_from_constructive: need one count per face dimension below n");
  }
  CountTable table{n, profile.degree(), profile.orders(), {}, 0, true};
  for (const auto& f : faces) {
    std::vector<Count> totals;
    for (const auto& c : f.per_face_by_order) totals.push_back(c * f.num_faces);
    table.faces.push_back(make_row(f.face_dim, f.num_faces, f.per_face_by_order, totals));
  }
  table.faces.push_back(make_row(n, 1, {interior.total}, {interior.total}));
  for (const auto& row : table.faces) table.grand_total += row.dimension_total;
  return table;
}

std::string to_json(const CountTable& table) {
  json doc;
  doc["dimension"] = std::to_string(table.dimension);
  doc["degree"] = std::to_string(table.degree);
  doc["profile"] = json::array();
  for (int r : table.profile) doc["profile"].push_back(std::to_string(r));
  doc["faces"] = json::array();
  for (const auto& row : table.faces) {
    doc["faces"].push_back({{"face_dim", std::to_string(row.face_dim)},
                            {"num_faces", row.num_faces.get_str()},
                            {"per_face_counts_by_order", strings(row.per_face_by_order)},
                            {"totals_by_order", strings(row.totals_by_order)},
                            {"per_face_total", row.per_face_total.get_str()},
                            {"dimension_total", row.dimension_total.get_str()}});
  }
  doc["grand_total"] = table.grand_total.get_str();
  doc["uniform_faces"] = table.uniform_faces;
  return doc.dump(2) + "\n";
}

CountTable count_table_from_json(const std::string& text) {
  const json doc = parse_document(text);
  try {
    CountTable table;
    table.dimension = std::stoi(doc.at("dimension").get<std::string>());
    table.degree = std::stoi(doc.at("degree").get<std::string>());
    for (const auto& r : doc.at("profile")) table.profile.push_back(std::stoi(r.get<std::string>()));
    for (const auto& f : doc.at("faces")) {
      FaceRow row;
      row.face_dim = std::stoi(f.at("face_dim").get<std::string>());
      row.num_faces = count_from(f.at("num_faces"));
      row.per_face_by_order = counts_from(f.at("per_face_counts_by_order"));
      if (f.contains("totals_by_order")) {
        row.totals_by_order = counts_from(f.at("totals_by_order"));
      } else {
        for (const auto& c : row.per_face_by_order) row.totals_by_order.push_back(c * row.num_faces);
      }
      row.per_face_total = count_from(f.at("per_face_total"));
      row.dimension_total = count_from(f.at("dimension_total"));
      table.faces.push_back(std::move(row));
    }
    table.grand_total = count_from(doc.at("grand_total"));
    table.uniform_faces = doc.value("uniform_faces", true);
    return table;
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("count table JSON: ") + e.what());
  } catch (const std::logic_error& e) {
    throw InvalidArgument(std::string("count table JSON: bad number: ") + e.what());
  }
}

std::string to_csv(const CountTable& table) {
  std::ostringstream out;
  out << "face_dim,order,per_face,num_faces,total\n";
  for (const auto& row : table.faces) {
    for (std::size_t t = 0; t < row.per_face_by_order.size(); ++t) {
      out << row.face_dim << ',' << t << ',' << row.per_face_by_order[t] << ','
          << row.num_faces << ',' << row.totals_by_order[t] << '\n';
    }
  }
  return out.str();
}

std::string to_text(const CountTable& table) {
  std::ostringstream out;
  out << "dimension " << table.dimension << ", degree " << table.degree << ", profile (";
  for (std::size_t i = 0; i < table.profile.size(); ++i) {
    out << (i ? "," : "") << table.profile[i];
  }
  out << ")\n";
  if (!table.uniform_faces) out << "note: faces of equal dimension own different counts\n";
  out << std::setw(8) << "face_dim" << std::setw(7) << "order" << std::setw(12) << "per_face"
      << std::setw(11) << "num_faces" << std::setw(12) << "total" << '\n';
  for (const auto& row : table.faces) {
    for (std::size_t t = 0; t < row.per_face_by_order.size(); ++t) {
      out << std::setw(8) << row.face_dim << std::setw(7) << t << std::setw(12)
          << row.per_face_by_order[t] << std::setw(11) << row.num_faces << std::setw(12)
          << row.totals_by_order[t] << '\n';
    }
    out << "  dim " << row.face_dim << ": " << row.per_face_total << " per face, "
        << row.dimension_total << " in total\n";
  }
  out << "total " << table.grand_total << '\n';
  return out.str();
}

namespace {

json functional_json(const DofFunctional& f) {
  json point = json::array();
  for (const auto& c : f.point.coords) point.push_back(c.get_str());
  return {{"owner", f.owner.vertices()},
          {"order", f.order},
          {"direction_multiorder", f.direction_multiorder},
          {"point", point},
          {"index", std::vector<int>(f.source_index.entries().begin(),
                                     f.source_index.entries().end())}};
}

std::string fraction_list(const std::vector<Rational>& values) {
  std::string s;
  for (std::size_t i = 0; i < values.size(); ++i) s += (i ? " " : "") + values[i].get_str();
  return s;
}

std::string int_list(std::span<const int> values) {
  std::string s;
  for (std::size_t i = 0; i < values.size(); ++i) s += (i ? " " : "") + std::to_string(values[i]);
  return s;
}

}  // namespace

std::string functionals_to_json(const ElementSpec& element) {
  const SmoothnessProfile& p = element.profile;
  json doc;
  doc["dimension"] = std::to_string(p.ambient_dim());
  doc["degree"] = std::to_string(p.degree());
  doc["profile"] = json::array();
  for (int r : p.orders()) doc["profile"].push_back(std::to_string(r));
  doc["functionals"] = json::array();
  for (const auto& f : element.functionals) doc["functionals"].push_back(functional_json(f));
  return doc.dump(1) + "\n";
}

std::vector<DofFunctional> functionals_from_json(const std::string& text) {
  const json doc = parse_document(text);
  try {
    const int n = std::stoi(doc.at("dimension").get<std::string>());
    std::vector<DofFunctional> out;
    for (const auto& f : doc.at("functionals")) {
      std::vector<Rational> coords;
      for (const auto& c : f.at("point")) coords.push_back(parse_rational(c.get<std::string>()));
      out.push_back(DofFunctional{Face(n, f.at("owner").get<std::vector<int>>()),
                                  f.at("order").get<int>(),
                                  f.at("direction_multiorder").get<std::vector<int>>(),
                                  make_bary_point(std::move(coords)),
                                  BernsteinIndex(f.at("index").get<std::vector<int>>())});
    }
    return out;
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("functional JSON: ") + e.what());
  }
}

std::string functionals_to_csv(const ElementSpec& element) {
  std::ostringstream out;
  out << "id,owner,order,direction_multiorder,point,index\n";
  std::size_t id = 0;
  for (const auto& f : element.functionals) {
    out << id++ << ',' << int_list(f.owner.vertices()) << ',' << f.order << ','
        << int_list(f.direction_multiorder) << ',' << fraction_list(f.point.coords) << ','
        << int_list(f.source_index.entries()) << '\n';
  }
  return out.str();
}

std::string functionals_to_text(const ElementSpec& element) {
  std::ostringstream out;
  out << element.profile.to_string() << ": " << element.functionals.size() << " functionals\n";
  std::size_t id = 0;
  for (const auto& f : element.functionals) {
    out << std::setw(6) << id++ << "  " << f.owner.to_string() << "  order " << f.order;
    if (!f.direction_multiorder.empty()) out << "  d^(" << int_list(f.direction_multiorder) << ")";
    out << "  at (" << fraction_list(f.point.coords) << ")\n";
  }
  return out.str();
}

}  // namespace ssfem
