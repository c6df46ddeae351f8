#include "oracles.hpp"

#include "dualg/partition.hpp"
#include "dualg/plane_partition.hpp"

#include <doctest.h>

#include <algorithm>
#include <array>
#include <sstream>

using namespace dualg;

namespace {

PlanePartition figure_pp() {
  return PlanePartition({{3, 3, 2, 2, 2}, {3, 2, 2, 2}, {2, 2, 1, 1}, {1, 1}});
}

std::vector<std::vector<int>> compositions(int total, int parts) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int left, int slots) -> void {
    if (slots == 0) {
      if (left == 0) out.push_back(cur);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      cur.push_back(v);
      self(self, left - v, slots - 1);
      cur.pop_back();
    }
  };
  rec(rec, total, parts);
  return out;
}

}  // namespace

TEST_CASE("partition basics") {
  Partition p{3, 1, 0};
  CHECK(p.length() == 2);
  CHECK(p.size() == 4);
  CHECK(p.conjugate() == Partition{2, 1, 1});
  CHECK(Partition::rectangle(3, 2) == Partition{3, 3});
  CHECK(Partition{2, 1}.complement(3, 3) == Partition{3, 2, 1});
  CHECK(p.to_string() == "(3,1)");
  CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Partition({2, -1}), std::invalid_argument);
}

TEST_CASE("conjugation is an involution inside a 6x6 box") {
  for (const auto& lam : partitions_in_box(6, 6)) CHECK(lam.conjugate().conjugate() == lam);
  CHECK(partitions_in_box(6, 6).size() == 924);
}

TEST_CASE("complement is an involution") {
  for (const auto& mu : partitions_in_box(3, 4)) CHECK(mu.complement(3, 4).complement(3, 4) == mu);
}

TEST_CASE("enumeration examples") {
  auto small = enumerate_pp(make_box(1, 1, 1));
  REQUIRE(small.size() == 2);
  CHECK(small[0].empty());
  CHECK(small[1] == PlanePartition({{1}}));
  CHECK(enumerate_pp(make_box(2, 2, 2)).size() == 20);
  CHECK(enumerate_pp(make_box(3, 3, 3)).size() == 980);
}

TEST_CASE("enumeration order is lexicographic on the padded array and duplicate free") {
  auto all = enumerate_pp(make_box(2, 3, 2));
  auto pad = [](const PlanePartition& pi) {
    std::vector<int> v;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 2; ++j) v.push_back(pi.at(i, j));
    return v;
  };
  for (std::size_t i = 1; i < all.size(); ++i) CHECK(pad(all[i - 1]) < pad(all[i]));
  CHECK(all.back() == PlanePartition({{2, 2}, {2, 2}, {2, 2}}));
}

TEST_CASE("MacMahon count matches enumeration and is symmetric") {
  CHECK(macmahon_count(make_box(1, 1, 1)) == 2);
  CHECK(macmahon_count(make_box(2, 2, 2)) == 20);
  CHECK(macmahon_count(make_box(3, 3, 3)) == 980);
  for (int a = 1; a <= 3; ++a)
    for (int b = 1; b <= 3; ++b)
      for (int c = 1; c <= 3; ++c) {
        CHECK(BigInt(enumerate_pp(make_box(a, b, c)).size()) == macmahon_count(make_box(a, b, c)));
        std::array<int, 3> d{a, b, c};
        std::sort(d.begin(), d.end());
        do {
          CHECK(macmahon_count(make_box(d[0], d[1], d[2])) == macmahon_count(make_box(a, b, c)));
        } while (std::next_permutation(d.begin(), d.end()));
      }
  CHECK(macmahon_count(make_box(2, 2, 2)) == schur_dim(Partition{2, 2}, 4));
}

TEST_CASE("parallel enumeration visits the same set") {
  const BoxDims box = make_box(3, 3, 2);
  auto serial = enumerate_pp(box);
  std::vector<std::vector<PlanePartition>> per(3);
  for_each_pp_parallel(box, 3, [&](int w, const PlanePartition& pi) { per[static_cast<std::size_t>(w)].push_back(pi); });
  std::vector<PlanePartition> merged;
  for (auto& v : per) merged.insert(merged.end(), v.begin(), v.end());
  std::sort(merged.begin(), merged.end());
  std::sort(serial.begin(), serial.end());
  CHECK(merged == serial);
}

TEST_CASE("plane partition validation") {
  CHECK_THROWS_AS(PlanePartition({{1, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(PlanePartition({{1}, {2}}), std::invalid_argument);
  CHECK_THROWS_AS(PlanePartition({{1}, {1, 1}}), std::invalid_argument);
  CHECK(PlanePartition({{2, 0}, {0}}) == PlanePartition({{2}}));
  CHECK(figure_pp().fits(make_box(5, 4, 3)));
  CHECK_FALSE(figure_pp().fits(make_box(4, 4, 3)));
  CHECK(figure_pp().shape() == Partition{5, 4, 4, 2});
}

TEST_CASE("descent sets") {
  CHECK(descent_set(PlanePartition({{1}})) == std::set<Cell>{{0, 0}});
  CHECK(descent_set(PlanePartition({{2, 2}, {1}})) == std::set<Cell>{{0, 0}, {0, 1}, {1, 0}});
  CHECK(descent_set(PlanePartition()).empty());
  CHECK(descent_count(PlanePartition({{2, 2}, {1}})) == 3);
}

TEST_CASE("x statistic") {
  CHECK(x_stat(figure_pp(), 2) == 5);
  CHECK(x_stat(PlanePartition({{1}}), 1) == 1);
  CHECK(x_stat(PlanePartition({{2, 2}, {1}}), 2) == 2);
}

TEST_CASE("x statistic agrees with a direct column scan on PP(3,3,3)") {
  for_each_pp(make_box(3, 3, 3), [](const PlanePartition& pi) {
    auto x = column_contents(pi, 3);
    for (int level = 1; level <= 3; ++level) {
      int direct = 0;
      for (int j = 0; j < 3; ++j) {
        bool seen = false;
        for (int i = 0; i < 3; ++i) seen = seen || pi.at(i, j) == level;
        direct += seen;
      }
      CHECK(x_stat(pi, level) == direct);
      CHECK(x[static_cast<std::size_t>(level - 1)] == direct);
    }
  });
}

TEST_CASE("Kostka numbers") {
  CHECK(kostka(Partition{2, 1}, std::vector<int>{1, 1, 1}) == 2);
  CHECK(kostka(Partition{2, 1}, std::vector<int>{2, 1}) == 1);
  CHECK(kostka(Partition{2, 1}, std::vector<int>{1, 1}) == 0);
  for (const auto& mu : partitions_in_box(3, 3)) {
    CHECK(kostka(mu, mu.padded(3)) == 1);
    for (const auto& g : compositions(static_cast<int>(mu.size()), 3)) {
      CHECK(kostka(mu, g) == oracle::ssyt_kostka(mu, g));
    }
  }
}

TEST_CASE("schur_dim by hook content") {
  CHECK(schur_dim(Partition{2, 2}, 4) == 20);
  CHECK(schur_dim(Partition{2, 1}, 3) == 8);
  CHECK(schur_dim(Partition{}, 5) == 1);
  CHECK_THROWS_AS(schur_dim(Partition{1, 1, 1}, 2), std::invalid_argument);
  for (const auto& mu : partitions_in_box(3, 3)) {
    for (int k = mu.length(); k <= 4; ++k) {
      BigInt sum = 0;
      for (const auto& g : compositions(static_cast<int>(mu.size()), k)) sum += kostka(mu, g);
      CHECK(schur_dim(mu, k) == sum);
      CHECK(schur_dim(mu, k) == oracle::ssyt_count(mu, k));
      CHECK(log_schur_dim(mu, k) == doctest::Approx(std::log(schur_dim(mu, k).get_d())));
    }
  }
}

TEST_CASE("log dimension of a rectangle with a tail") {
  for (int w = 1; w <= 4; ++w)
    for (int rows = 0; rows <= 3; ++rows)
      for (int p = 0; p <= w; ++p)
        for (int r = 0; r <= p; ++r) {
          std::vector<int> parts(static_cast<std::size_t>(rows), w);
          parts.push_back(p);
          parts.push_back(r);
          Partition lam(parts);
          const int tail[] = {p, r};
          for (int n : {rows + 2, rows + 5}) {
            CHECK(log_schur_dim_rect_tail(w, rows, tail, n) == doctest::Approx(log_schur_dim(lam, n)).epsilon(1e-10));
          }
        }
}

TEST_CASE("dominance order") {
  CHECK(dominance_leq(std::vector<int>{1, 1, 1}, std::vector<int>{3, 0, 0}));
  CHECK(dominance_leq(std::vector<int>{2, 1}, std::vector<int>{2, 1}));
  CHECK_FALSE(dominance_leq(std::vector<int>{2, 1}, std::vector<int>{1, 2}));
  CHECK_FALSE(dominance_leq(std::vector<int>{1, 1}, std::vector<int>{3, 0}));
  CHECK_THROWS_AS(dominance_leq(std::vector<int>{1}, std::vector<int>{1, 0}), std::invalid_argument);
}

TEST_CASE("plane partition text format") {
  std::istringstream in("# figure\n3 3 2 2 2\n3 2 2 2\n\n2 2 1 1\n1 1\n");
  CHECK(parse_plane_partition(in) == figure_pp());
  std::istringstream round(to_text(figure_pp()));
  CHECK(parse_plane_partition(round) == figure_pp());
  std::istringstream empty("");
  CHECK(parse_plane_partition(empty).empty());
  std::istringstream bad("2 x\n");
  CHECK_THROWS_WITH_AS(parse_plane_partition(bad), doctest::Contains("line 1"), std::invalid_argument);
  std::istringstream nonmono("1 2\n");
  CHECK_THROWS_AS(parse_plane_partition(nonmono), std::invalid_argument);
}
