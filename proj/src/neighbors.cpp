#include "gpdc/neighbors.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "gpdc/parallel.hpp"

namespace gpdc {

std::vector<std::size_t> subsample_indices(std::size_t n, std::size_t m, std::uint64_t seed) {
  if (m > n) throw ParameterError("subsample: m exceeds n");
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < m; ++i) {
    // bounded draw by rejection keeps the stream implementation-independent
    std::uint64_t span = n - i;
    std::uint64_t limit = std::mt19937_64::max() - std::mt19937_64::max() % span;
    std::uint64_t r;
    do {
      r = rng();
    } while (r >= limit);
    std::swap(perm[i], perm[i + r % span]);
  }
  perm.resize(m);
  std::sort(perm.begin(), perm.end());
  return perm;
}

PointCloud subsample_cloud(const PointCloud& cloud, const std::vector<std::size_t>& idx) {
  PointCloud out(idx.size(), cloud.dim_ambient, cloud.dim_intrinsic);
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (idx[i] >= cloud.n) throw ParameterError("subsample: index out of range");
    std::copy_n(cloud.point(idx[i]), cloud.dim_ambient, out.point(i));
  }
  return out;
}

std::size_t default_k(std::size_t n, std::size_t d) {
  if (d == 0) throw ParameterError("default_k: d must be positive");
  if (n < d + 2) throw InsufficientPoints("default_k: need n >= d + 2");
  double raw = std::round(std::pow(static_cast<double>(n), 2.0 / (static_cast<double>(d) + 2.0)));
  std::size_t k = static_cast<std::size_t>(raw);
  return std::clamp(k, d + 1, n - 1);
}

AdjacencyLists knn(const PointCloud& cloud, std::size_t k) {
  if (cloud.n < 2) throw InsufficientPoints("knn: need at least two points");
  if (k < 1 || k >= cloud.n) throw ParameterError("knn: require 1 <= k < n");

  AdjacencyLists adj(cloud.n);
  parallel_for(cloud.n, [&](std::size_t i) {
    std::vector<std::pair<double, std::uint32_t>> cand;
    cand.reserve(cloud.n - 1);
    for (std::size_t j = 0; j < cloud.n; ++j) {
      if (j == i) continue;
      cand.emplace_back(cloud.squared_distance(i, j), static_cast<std::uint32_t>(j));
    }
    auto mid = cand.begin() + static_cast<std::ptrdiff_t>(k);
    std::nth_element(cand.begin(), mid - 1, cand.end());
    std::sort(cand.begin(), mid);
    adj[i].resize(k);
    for (std::size_t s = 0; s < k; ++s) adj[i][s] = cand[s].second;
  });
  return adj;
}

EdgeList symmetrize(const AdjacencyLists& adj) {
  EdgeList edges;
  for (std::uint32_t i = 0; i < adj.size(); ++i)
    for (std::uint32_t j : adj[i]) {
      if (i < j)
        edges.emplace_back(i, j);
      else if (j < i)
        edges.emplace_back(j, i);
    }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return edges;
}

}  // namespace gpdc
