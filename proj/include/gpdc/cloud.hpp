#pragma once

#include <cstddef>
#include <vector>

#include "gpdc/errors.hpp"

namespace gpdc {

/// Finite point set in R^D with a declared intrinsic dimension d. Storage is
/// row-major, one point per row.
struct PointCloud {
  std::size_t n = 0;
  std::size_t dim_ambient = 0;    // D
  std::size_t dim_intrinsic = 0;  // d, declared by the producer
  std::vector<double> coords;     // n * dim_ambient

  PointCloud() = default;
  PointCloud(std::size_t n_, std::size_t ambient, std::size_t intrinsic)
      : n(n_), dim_ambient(ambient), dim_intrinsic(intrinsic), coords(n_ * ambient, 0.0) {
    if (ambient == 0) throw DimensionError("point cloud: ambient dimension zero");
    if (intrinsic > ambient) throw DimensionError("point cloud: d exceeds D");
  }

  double* point(std::size_t i) { return coords.data() + i * dim_ambient; }
  const double* point(std::size_t i) const { return coords.data() + i * dim_ambient; }

  double squared_distance(std::size_t i, std::size_t j) const {
    const double* a = point(i);
    const double* b = point(j);
    double s = 0.0;
    for (std::size_t k = 0; k < dim_ambient; ++k) {
      double d = a[k] - b[k];
      s += d * d;
    }
    return s;
  }
};

/// Subsample without replacement, deterministic in (seed, m): a seeded
/// Fisher-Yates prefix. Returned indices are sorted ascending.
std::vector<std::size_t> subsample_indices(std::size_t n, std::size_t m, std::uint64_t seed);

PointCloud subsample_cloud(const PointCloud& cloud, const std::vector<std::size_t>& idx);

}  // namespace gpdc
