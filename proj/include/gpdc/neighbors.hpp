#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "gpdc/cloud.hpp"

namespace gpdc {

using AdjacencyLists = std::vector<std::vector<std::uint32_t>>;
using EdgeList = std::vector<std::pair<std::uint32_t, std::uint32_t>>;

/// Neighborhood size rule k = clamp(round(n^{2/(d+2)}), d+1, n-1) with d the
/// intrinsic dimension. Requires n >= d + 2 so the clamp interval is nonempty.
std::size_t default_k(std::size_t n, std::size_t d);

/// Exact k nearest neighbors by full scan, self excluded, ties broken by
/// index. Each list has exactly k entries ordered by (distance, index).
AdjacencyLists knn(const PointCloud& cloud, std::size_t k);

/// Undirected edge set of the directed k-NN graph: (i, j) with i < j, sorted
/// lexicographically, no duplicates.
EdgeList symmetrize(const AdjacencyLists& adj);

}  // namespace gpdc
