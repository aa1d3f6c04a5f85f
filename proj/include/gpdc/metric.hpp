#pragma once

#include <cstdint>
#include <string>

#include "gpdc/cloud.hpp"
#include "gpdc/tangent.hpp"

namespace gpdc {

enum class MetricTag : std::uint8_t { euclidean = 0, grassmann_dc = 1 };

/// Symmetric distance matrix, zero diagonal, lower triangle stored row-major
/// (row i holds entries (i, 0) .. (i, i-1)).
struct DistanceMatrix {
  std::size_t n = 0;
  MetricTag metric = MetricTag::euclidean;
  double c = 0.0;
  std::vector<double> tri;
  std::size_t degenerate_pairs = 0;  // oriented-distance dead-zone hits; not serialized

  DistanceMatrix() = default;
  DistanceMatrix(std::size_t n_, MetricTag tag, double c_)
      : n(n_), metric(tag), c(c_), tri(n_ < 2 ? 0 : n_ * (n_ - 1) / 2, 0.0) {}

  double at(std::size_t i, std::size_t j) const {
    if (i == j) return 0.0;
    if (i < j) std::swap(i, j);
    return tri[i * (i - 1) / 2 + j];
  }
  void set(std::size_t i, std::size_t j, double v) {
    if (i == j) throw MatrixError("distance matrix: diagonal is fixed at zero");
    if (i < j) std::swap(i, j);
    tri[i * (i - 1) / 2 + j] = v;
  }
};

struct ScaleParams {
  double c;
  double diameter;  // max pairwise Euclidean distance of the subset
  bool auto_mode;
};

/// Default scale rule c = diam(Y)^2 / max(pi, (pi/2) sqrt(min(d, D-d)))^2,
/// evaluated on the filtration subset. Throws DegenerateCloud when all points
/// coincide.
ScaleParams choose_scale(const PointCloud& subset);

/// d_c between two sampled points: sqrt(|p-q|^2 + c * d_{Gr+}(F_p, F_q)^2).
/// `degenerate`, when given, is set if the oriented distance hit its
/// determinant dead zone.
double dc_distance(const double* p, const double* q, std::size_t dim_ambient, const Mat& fp,
                   const Mat& fq, double c, bool* degenerate = nullptr);

/// Full d_c matrix. Requires an oriented frame field aligned with the cloud.
DistanceMatrix dc_matrix(const PointCloud& cloud, const FrameField& field, double c);

DistanceMatrix euclidean_matrix(const PointCloud& cloud);

/// Construct from a dense row-major n x n array; validates symmetry within
/// 1e-12, an exactly zero diagonal, and finite nonnegative entries.
DistanceMatrix matrix_from_dense(const double* dense, std::size_t n, MetricTag tag, double c);

/// min over i of max over j of D(i, j): the radius beyond which the complex
/// is a cone. The default Rips threshold.
double enclosing_radius(const DistanceMatrix& m);

/// GPDM container: magic "GPDM", u32 version 1, u32 n, u8 metric tag, f64 c,
/// then the lower triangle as f64, all little-endian.
void save_gpdm(const DistanceMatrix& m, const std::string& path);
DistanceMatrix load_gpdm(const std::string& path);

/// Full-square CSV, 17 significant digits.
void save_matrix_csv(const DistanceMatrix& m, const std::string& path);

}  // namespace gpdc
