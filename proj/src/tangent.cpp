#include "gpdc/tangent.hpp"

#include <cmath>

#include "gpdc/parallel.hpp"

namespace gpdc {

Mat local_pca_frame(const PointCloud& cloud, std::size_t center,
                    const std::vector<std::uint32_t>& neighbors, std::size_t d) {
  const std::size_t D = cloud.dim_ambient;
  if (d == 0 || d > D) throw DimensionError("local_pca_frame: require 1 <= d <= D");
  if (center >= cloud.n) throw ParameterError("local_pca_frame: center out of range");
  if (neighbors.empty()) throw InsufficientPoints("local_pca_frame: empty neighborhood");

  std::vector<const double*> pts;
  pts.reserve(neighbors.size() + 1);
  pts.push_back(cloud.point(center));
  for (std::uint32_t j : neighbors) {
    if (j >= cloud.n) throw ParameterError("local_pca_frame: neighbor out of range");
    pts.push_back(cloud.point(j));
  }

  std::vector<double> mean(D, 0.0);
  for (const double* p : pts)
    for (std::size_t a = 0; a < D; ++a) mean[a] += p[a];
  for (std::size_t a = 0; a < D; ++a) mean[a] /= static_cast<double>(pts.size());

  Mat cov(D, D);
  for (const double* p : pts)
    for (std::size_t a = 0; a < D; ++a)
      for (std::size_t b = 0; b < D; ++b) cov(a, b) += (p[a] - mean[a]) * (p[b] - mean[b]);
  for (std::size_t a = 0; a < D; ++a)
    for (std::size_t b = 0; b < D; ++b) cov(a, b) /= static_cast<double>(pts.size());

  EigResult eig = jacobi_eigh(cov);
  if (eig.values[d - 1] <= 1e-14)
    throw DegenerateNeighborhood("local_pca_frame: covariance rank below d");

  Mat frame(D, d);
  for (std::size_t j = 0; j < d; ++j) {
    std::size_t arg = 0;
    double best = 0.0;
    for (std::size_t i = 0; i < D; ++i) {
      double v = std::abs(eig.vectors(i, j));
      if (v > best) {
        best = v;
        arg = i;
      }
    }
    double sign = eig.vectors(arg, j) < 0.0 ? -1.0 : 1.0;
    for (std::size_t i = 0; i < D; ++i) frame(i, j) = sign * eig.vectors(i, j);
  }
  return frame;
}

FrameField estimate_frame_field(const PointCloud& cloud, const AdjacencyLists& adj,
                                std::size_t d) {
  if (adj.size() != cloud.n) throw DimensionError("estimate_frame_field: adjacency size");
  FrameField field;
  field.dim_ambient = cloud.dim_ambient;
  field.dim_intrinsic = d;
  field.oriented = false;
  field.frames.resize(cloud.n);
  parallel_for(cloud.n, [&](std::size_t i) {
    field.frames[i] = local_pca_frame(cloud, i, adj[i], d);
  });
  return field;
}

double rate_check(const std::vector<std::size_t>& ns, const std::vector<double>& errors) {
  if (ns.size() != errors.size()) throw DimensionError("rate_check: length mismatch");
  if (ns.size() < 2) throw InsufficientPoints("rate_check: need at least two samples");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double m = static_cast<double>(ns.size());
  for (std::size_t i = 0; i < ns.size(); ++i) {
    if (ns[i] == 0 || errors[i] <= 0.0)
      throw DataError("rate_check: inputs must be positive");
    double x = std::log(static_cast<double>(ns[i]));
    double y = std::log(errors[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  double denom = m * sxx - sx * sx;
  if (denom == 0.0) throw ParameterError("rate_check: sample sizes all equal");
  return (m * sxy - sx * sy) / denom;
}

}  // namespace gpdc
