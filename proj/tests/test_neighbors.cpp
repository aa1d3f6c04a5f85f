#include <algorithm>
#include <random>
#include <set>

#include <doctest.h>

#include "gpdc/cloud.hpp"
#include "gpdc/errors.hpp"
#include "gpdc/neighbors.hpp"

using gpdc::AdjacencyLists;
using gpdc::default_k;
using gpdc::EdgeList;
using gpdc::knn;
using gpdc::PointCloud;
using gpdc::subsample_cloud;
using gpdc::subsample_indices;
using gpdc::symmetrize;

namespace {

PointCloud cloud_1d(const std::vector<double>& xs) {
  PointCloud cloud(xs.size(), 1, 1);
  for (std::size_t i = 0; i < xs.size(); ++i) cloud.point(i)[0] = xs[i];
  return cloud;
}

PointCloud random_cloud(std::size_t n, std::size_t dim, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  PointCloud cloud(n, dim, dim);
  for (double& x : cloud.coords) x = unit(rng);
  return cloud;
}

}  // namespace

TEST_CASE("default_k matches the sampling rule") {
  CHECK(default_k(20000, 2) == 141);
  CHECK(default_k(1000, 1) == 100);
  CHECK(default_k(2000, 2) == 45);
  CHECK(default_k(600, 2) == 24);
  // lower clamp at d + 1
  CHECK(default_k(10, 2) == 3);
  // upper clamp at n - 1
  CHECK(default_k(5, 3) == 4);
  CHECK_THROWS_AS(default_k(4, 3), gpdc::InsufficientPoints);
}

TEST_CASE("knn on three collinear points") {
  auto adj = knn(cloud_1d({0.0, 1.0, 3.0}), 1);
  REQUIRE(adj.size() == 3);
  CHECK(adj[0] == std::vector<std::uint32_t>{1});
  CHECK(adj[1] == std::vector<std::uint32_t>{0});
  CHECK(adj[2] == std::vector<std::uint32_t>{1});
}

TEST_CASE("knn on the unit square prefers edges over the diagonal") {
  PointCloud square(4, 2, 2);
  double pts[4][2] = {{0, 0}, {1, 0}, {1, 1}, {0, 1}};
  for (std::size_t i = 0; i < 4; ++i)
    std::copy(pts[i], pts[i] + 2, square.point(i));
  auto adj = knn(square, 2);
  CHECK(adj[0] == std::vector<std::uint32_t>{1, 3});
  CHECK(adj[1] == std::vector<std::uint32_t>{0, 2});
  CHECK(adj[2] == std::vector<std::uint32_t>{1, 3});
  CHECK(adj[3] == std::vector<std::uint32_t>{0, 2});
}

TEST_CASE("knn breaks distance ties by index") {
  auto adj = knn(cloud_1d({2.0, 2.0, 5.0}), 1);
  CHECK(adj[0] == std::vector<std::uint32_t>{1});
  CHECK(adj[1] == std::vector<std::uint32_t>{0});
}

TEST_CASE("knn rejects out-of-range k") {
  PointCloud cloud = cloud_1d({0.0, 1.0, 2.0});
  CHECK_THROWS_AS(knn(cloud, 0), gpdc::ParameterError);
  CHECK_THROWS_AS(knn(cloud, 3), gpdc::ParameterError);
}

TEST_CASE("knn agrees with a direct scan on random clouds") {
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    PointCloud cloud = random_cloud(180, 3, seed);
    std::size_t k = 7;
    auto adj = knn(cloud, k);
    for (std::size_t i = 0; i < cloud.n; ++i) {
      std::vector<std::pair<double, std::uint32_t>> all;
      for (std::size_t j = 0; j < cloud.n; ++j)
        if (j != i)
          all.emplace_back(cloud.squared_distance(i, j), static_cast<std::uint32_t>(j));
      std::sort(all.begin(), all.end());
      REQUIRE(adj[i].size() == k);
      for (std::size_t m = 0; m < k; ++m) CHECK(adj[i][m] == all[m].second);
    }
  }
}

TEST_CASE("symmetrize keeps an edge present in either direction") {
  AdjacencyLists adj{{1}, {0}};
  EdgeList edges = symmetrize(adj);
  REQUIRE(edges.size() == 1);
  CHECK(edges[0] == std::make_pair(std::uint32_t{0}, std::uint32_t{1}));

  // one-sided membership still yields the edge
  AdjacencyLists oneway{{2}, {2}, {1}};
  EdgeList e2 = symmetrize(oneway);
  REQUIRE(e2.size() == 2);
  CHECK(e2[0] == std::make_pair(std::uint32_t{0}, std::uint32_t{2}));
  CHECK(e2[1] == std::make_pair(std::uint32_t{1}, std::uint32_t{2}));
}

TEST_CASE("symmetrized path graph has n - 1 edges") {
  std::vector<double> xs(30);
  for (std::size_t i = 0; i < xs.size(); ++i) xs[i] = static_cast<double>(i);
  EdgeList edges = symmetrize(knn(cloud_1d(xs), 1));
  CHECK(edges.size() == xs.size() - 1);
  CHECK(std::is_sorted(edges.begin(), edges.end()));
  for (auto [i, j] : edges) CHECK(i < j);
}

TEST_CASE("symmetrize output is sorted, deduplicated, and i < j") {
  PointCloud cloud = random_cloud(90, 2, 12);
  EdgeList edges = symmetrize(knn(cloud, 5));
  CHECK(std::is_sorted(edges.begin(), edges.end()));
  CHECK(std::adjacent_find(edges.begin(), edges.end()) == edges.end());
  std::vector<std::size_t> degree(cloud.n, 0);
  for (auto [i, j] : edges) {
    CHECK(i < j);
    ++degree[i];
    ++degree[j];
  }
  for (std::size_t deg : degree) CHECK(deg >= 1);
}

TEST_CASE("subsample_indices is a deterministic sorted sample without replacement") {
  auto idx = subsample_indices(100, 20, 7);
  REQUIRE(idx.size() == 20);
  CHECK(std::is_sorted(idx.begin(), idx.end()));
  CHECK(std::set<std::size_t>(idx.begin(), idx.end()).size() == 20);
  CHECK(idx.back() < 100);
  CHECK(idx == subsample_indices(100, 20, 7));
  CHECK(idx != subsample_indices(100, 20, 8));

  auto all = subsample_indices(15, 15, 3);
  for (std::size_t i = 0; i < 15; ++i) CHECK(all[i] == i);
  CHECK(subsample_indices(10, 0, 1).empty());
  CHECK_THROWS_AS(subsample_indices(5, 6, 1), gpdc::ParameterError);
}

TEST_CASE("subsample_cloud picks the indexed rows") {
  PointCloud cloud = random_cloud(50, 3, 4);
  auto idx = subsample_indices(50, 10, 2);
  PointCloud sub = subsample_cloud(cloud, idx);
  CHECK(sub.n == 10);
  CHECK(sub.dim_ambient == cloud.dim_ambient);
  CHECK(sub.dim_intrinsic == cloud.dim_intrinsic);
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t k = 0; k < 3; ++k) CHECK(sub.point(i)[k] == cloud.point(idx[i])[k]);
}
