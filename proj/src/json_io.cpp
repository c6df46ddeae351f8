#include "dualg/json_io.hpp"

#include <stdexcept>
#include <string>

namespace dualg {

nlohmann::json to_json(const PlanePartition& pi) { return nlohmann::json(pi.rows()); }

nlohmann::json to_json(const NMatrix& m) { return nlohmann::json(m.to_rows()); }

nlohmann::json to_json(const Partition& lambda) { return nlohmann::json(lambda.parts()); }

namespace {

template <class T>
std::vector<std::vector<T>> rows_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected an array of rows");
  std::vector<std::vector<T>> rows;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const auto& row = j[i];
    if (!row.is_array()) throw std::invalid_argument("row " + std::to_string(i + 1) + " is not an array");
    std::vector<T> out;
    for (const auto& v : row) {
      if (!v.is_number_integer()) {
        throw std::invalid_argument("row " + std::to_string(i + 1) + " has a non-integer entry");
      }
      out.push_back(v.get<T>());
    }
    rows.push_back(std::move(out));
  }
  return rows;
}

}  // namespace

PlanePartition plane_partition_from_json(const nlohmann::json& j) {
  return PlanePartition(rows_from_json<int>(j));
}

NMatrix nmatrix_from_json(const nlohmann::json& j) { return NMatrix(rows_from_json<std::int64_t>(j)); }

}  // namespace dualg
