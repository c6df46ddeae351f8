#pragma once

// Structured-data form of the combinatorial objects: arrays of arrays of integers.

#include "dualg/nmatrix.hpp"
#include "dualg/partition.hpp"
#include "dualg/plane_partition.hpp"

#include <json.hpp>

namespace dualg {

nlohmann::json to_json(const PlanePartition& pi);
nlohmann::json to_json(const NMatrix& m);
nlohmann::json to_json(const Partition& lambda);

/// Throws std::invalid_argument naming the first offending row.
PlanePartition plane_partition_from_json(const nlohmann::json& j);
NMatrix nmatrix_from_json(const nlohmann::json& j);

}  // namespace dualg
