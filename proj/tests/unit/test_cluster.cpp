#include <algorithm>
#include <cmath>
#include <limits>

#include "doctest.h"
#include "spectral/cluster.hpp"
#include "spectral/error.hpp"
#include "support/generators.hpp"

using namespace spectral;

TEST_CASE("interior triple cluster") {
  const std::vector<double> l = {5, 3, 3, 3, 1};
  const ClusterIndex c = locate_cluster(l, 3, 1e-8);
  CHECK(c.i == 2);
  CHECK(c.j == 1);
  CHECK(c.r == 3);
  CHECK(c.lo == 2);
  CHECK(c.hi == 4);
  CHECK(c.value == 3.0);
  CHECK(cluster_gap_guard(l, c) == 2.0);
}

TEST_CASE("simple eigenvalue") {
  const std::vector<double> l = {7, 4, 2};
  const ClusterIndex c = locate_cluster(l, 2, 1e-8);
  CHECK(c.i == 1);
  CHECK(c.j == 0);
  CHECK(c.r == 1);
}

TEST_CASE("first and last positions of a full cluster") {
  const std::vector<double> l = {3, 3, 3};
  const ClusterIndex last = locate_cluster(l, 3, 1e-8);
  CHECK(last.i == 3);
  CHECK(last.j == 0);
  const ClusterIndex first = locate_cluster(l, 1, 1e-8);
  CHECK(first.i == 1);
  CHECK(first.j == 2);
  CHECK(cluster_gap_guard(l, first) == std::numeric_limits<double>::infinity());
}

TEST_CASE("near-equal neighbour is absorbed") {
  const std::vector<double> l = {3 + 1e-12, 3, 1};
  const ClusterIndex c = locate_cluster(l, 2, 1e-8);
  CHECK(c.lo == 1);
  CHECK(c.hi == 2);
  CHECK(c.i == 2);
  CHECK(cluster_gap_guard(l, c) == 2.0);
}

TEST_CASE("chained clusters may be wider than the tolerance") {
  const std::vector<double> l = {1.0, 0.6, 0.2, -5.0};
  const ClusterIndex c = locate_cluster(l, 1, 0.5);
  CHECK(c.hi == 3);
  CHECK(c.width == doctest::Approx(0.8));
  CHECK(c.width > c.tol_used);
}

TEST_CASE("errors") {
  const std::vector<double> l = {3, 2, 1};
  CHECK_THROWS_AS(locate_cluster(l, 0, 1e-8), Error);
  CHECK_THROWS_AS(locate_cluster(l, 4, 1e-8), Error);
  CHECK_THROWS_AS(locate_cluster(l, 1, -1.0), Error);
  const std::vector<double> unsorted = {1, 2, 0};
  CHECK_THROWS_AS(locate_cluster(unsorted, 1, 1e-8), Error);
}

TEST_CASE("properties on random sorted lists") {
  testing::Rng rng(17);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = rng.index(1, 12);
    std::vector<double> l;
    for (std::size_t k = 0; k < n; ++k) l.push_back(std::round(rng.uniform(-3, 3) * 2) / 2);
    std::sort(l.begin(), l.end(), std::greater<>());
    const std::size_t m = rng.index(1, n);

    const ClusterIndex c = locate_cluster(l, m, 0.0);
    CAPTURE(m);
    CHECK(c.r == c.i + c.j);
    CHECK(c.i >= 1);
    CHECK(c.lo <= m);
    CHECK(m <= c.hi);
    // Maximal block of exact equalities.
    for (std::size_t k = c.lo; k <= c.hi; ++k) CHECK(l[k - 1] == l[m - 1]);
    if (c.lo > 1) CHECK(l[c.lo - 2] > l[m - 1]);
    if (c.hi < n) CHECK(l[c.hi] < l[m - 1]);
    // Exact-count definition.
    std::size_t before = 0;
    std::size_t after = 0;
    for (std::size_t k = 1; k <= n; ++k) {
      if (l[k - 1] != l[m - 1]) continue;
      if (k < m) ++before;
      if (k > m) ++after;
    }
    CHECK(c.i == before + 1);
    CHECK(c.j == after);
    CHECK(cluster_gap_guard(l, c) > 0.0);

    // Shift invariance (half-integer data shifts exactly).
    std::vector<double> shifted = l;
    for (double& v : shifted) v += 0.25;
    const ClusterIndex cs = locate_cluster(shifted, m, 0.0);
    CHECK(cs.i == c.i);
    CHECK(cs.j == c.j);
    CHECK(cs.r == c.r);
  }
}

TEST_CASE("default tolerance") {
  CHECK(default_cluster_tol(0.0) == 1e-8);
  CHECK(default_cluster_tol(100.0) == doctest::Approx(1e-6));
}
