#include "oracles.hpp"

#include "dualg/bijection.hpp"
#include "dualg/json_io.hpp"

#include <doctest.h>

#include <random>
#include <sstream>

using namespace dualg;

namespace {

const PlanePartition kExamplePP({{4, 4, 2}, {4, 2, 1}, {2, 2}});
const NMatrix kExampleD({{0, 1, 0, 1}, {1, 0, 0, 1}, {0, 2, 0, 0}});

}  // namespace

TEST_CASE("phi on the worked example") {
  CHECK(phi(kExamplePP) == kExampleD);
  CHECK(phi(PlanePartition(), Frame{2, 3}) == NMatrix(2, 3));
  CHECK(phi(PlanePartition()).rows() == 0);
  CHECK(phi(PlanePartition({{1}})) == NMatrix({{1}}));
  CHECK(phi(PlanePartition({{1}}), Frame{2, 2}) == NMatrix({{1, 0}, {0, 0}}));
  CHECK_THROWS_AS(phi(kExamplePP, Frame{2, 4}), std::invalid_argument);
}

TEST_CASE("phi_inverse on the worked example") {
  CHECK(phi_inverse(kExampleD) == kExamplePP);
  CHECK(phi_inverse(NMatrix(3, 4)).empty());
  CHECK(phi_inverse(NMatrix({{2}})) == PlanePartition({{1, 1}}));
}

TEST_CASE("last passage") {
  CHECK(last_passage(kExampleD, {1, 1}, {3, 4}) == 3);
  CHECK(last_passage(NMatrix({{7}}), {1, 1}, {1, 1}) == 7);
  CHECK(last_passage(NMatrix(4, 5), {1, 1}, {4, 5}) == 0);
  CHECK_THROWS_AS(last_passage(kExampleD, {2, 2}, {1, 4}), std::invalid_argument);
  CHECK_THROWS_AS(last_passage(kExampleD, {1, 1}, {4, 4}), std::out_of_range);
  CHECK_THROWS_AS(last_passage(kExampleD, {0, 1}, {3, 4}), std::out_of_range);
}

TEST_CASE("last passage matches path enumeration") {
  std::mt19937_64 gen(5);
  std::uniform_int_distribution<int> entry(0, 4);
  for (int rep = 0; rep < 40; ++rep) {
    std::vector<std::vector<std::int64_t>> rows(4, std::vector<std::int64_t>(5));
    for (auto& r : rows)
      for (auto& v : r) v = entry(gen);
    NMatrix d(rows);
    for (int r0 = 1; r0 <= 4; ++r0)
      for (int c0 = 1; c0 <= 5; ++c0)
        for (int r1 = r0; r1 <= 4; ++r1)
          for (int c1 = c0; c1 <= 5; ++c1)
            CHECK(last_passage(d, {r0, c0}, {r1, c1}) == oracle::path_max(rows, r0 - 1, c0 - 1, r1 - 1, c1 - 1));
  }
}

TEST_CASE("shape from matrix") {
  CHECK(shape_from_matrix(kExampleD) == Partition{3, 3, 2});
  CHECK(shape_from_matrix(NMatrix(3, 3)).empty());
  CHECK(shape_from_matrix(NMatrix({{1, 0}, {0, 1}})) == Partition{2, 1});
  CHECK(kExamplePP.shape() == Partition{3, 3, 2});
}

TEST_CASE("boundedness") {
  CHECK(is_bounded(kExampleD, 3));
  CHECK_FALSE(is_bounded(kExampleD, 2));
  CHECK(is_bounded(NMatrix(2, 2), 0));
}

TEST_CASE("bijection identities on PP(3,3,3)") {
  const BoxDims box = make_box(3, 3, 3);
  for_each_pp(box, [&](const PlanePartition& pi) {
    NMatrix d = phi(pi, Frame{3, 3});
    CHECK(phi_inverse(d) == pi);
    CHECK(phi(phi_inverse(d), Frame{3, 3}) == d);
    for (int level = 1; level <= 3; ++level) CHECK(d.column_sum(level - 1) == x_stat(pi, level));
    CHECK(shape_from_matrix(d) == pi.shape());
    for (const auto& s : descent_level_sets(pi)) {
      for (std::size_t t = 1; t < s.columns.size(); ++t) CHECK(s.columns[t] == s.columns[t - 1] + 1);
    }
  });
}

TEST_CASE("box correspondence on boxes up to (3,3,3)") {
  for (int b = 1; b <= 3; ++b)
    for (int c = 1; c <= 3; ++c) {
      // every matrix whose image fits in (4, b, c) is either bounded by a or not
      for (int a = 1; a <= 3; ++a) {
        long inside = 0;
        for_each_pp(make_box(a + 1, b, c), [&](const PlanePartition& pi) {
          bool fits = pi.fits(make_box(a, b, c));
          CHECK(fits == is_bounded(phi(pi, Frame{b, c}), a));
          inside += fits;
        });
        CHECK(BigInt(inside) == macmahon_count(make_box(a, b, c)));
      }
    }
}

TEST_CASE("phi_inverse of random matrices round trips") {
  std::mt19937_64 gen(6);
  std::geometric_distribution<int> geo(0.4);
  for (int rep = 0; rep < 200; ++rep) {
    NMatrix d(3, 4);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 4; ++j) d(i, j) = geo(gen);
    PlanePartition pi = phi_inverse(d);
    CHECK(phi(pi, Frame{3, 4}) == d);
    CHECK(pi.shape() == shape_from_matrix(d));
  }
}

TEST_CASE("matrix CSV and JSON") {
  CHECK(to_csv(kExampleD) == "0,1,0,1\n1,0,0,1\n0,2,0,0\n");
  std::istringstream in(to_csv(kExampleD));
  CHECK(parse_nmatrix_csv(in) == kExampleD);
  std::istringstream ragged("1,2\n3\n");
  CHECK_THROWS_WITH_AS(parse_nmatrix_csv(ragged), doctest::Contains("line 2"), std::invalid_argument);
  std::istringstream negative("1,-2\n");
  CHECK_THROWS_AS(parse_nmatrix_csv(negative), std::invalid_argument);
  CHECK(nmatrix_from_json(to_json(kExampleD)) == kExampleD);
  CHECK(plane_partition_from_json(to_json(kExamplePP)) == kExamplePP);
  CHECK(to_json(kExamplePP).dump() == "[[4,4,2],[4,2,1],[2,2]]");
  CHECK_THROWS_AS(plane_partition_from_json(nlohmann::json::parse("[[1,2]]")), std::invalid_argument);
}
