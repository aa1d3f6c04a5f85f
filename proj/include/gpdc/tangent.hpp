#pragma once

#include <vector>

#include "gpdc/cloud.hpp"
#include "gpdc/linalg.hpp"
#include "gpdc/neighbors.hpp"

namespace gpdc {

/// A frame per point of some cloud. `oriented` records whether the frames
/// have been through (or were born with) a consistent orientation.
struct FrameField {
  std::size_t dim_ambient = 0;    // D
  std::size_t dim_intrinsic = 0;  // d
  bool oriented = false;
  std::vector<Mat> frames;        // each D x d, orthonormal columns
};

/// Tangent frame at one point by PCA of its neighborhood (the center point
/// plus its neighbors). Columns are the top-d covariance eigenvectors in
/// descending eigenvalue order, each signed so its largest-magnitude entry
/// (lowest index on ties) is positive. Throws DegenerateNeighborhood when the
/// d-th eigenvalue is at most 1e-14.
Mat local_pca_frame(const PointCloud& cloud, std::size_t center,
                    const std::vector<std::uint32_t>& neighbors, std::size_t d);

/// local_pca_frame at every point over the given adjacency. The result is
/// unoriented.
FrameField estimate_frame_field(const PointCloud& cloud, const AdjacencyLists& adj,
                                std::size_t d);

/// Least-squares slope of log(err) against log(n). Inputs must be positive
/// and at least two samples long.
double rate_check(const std::vector<std::size_t>& ns, const std::vector<double>& errors);

}  // namespace gpdc
