#include "gpdc/grassmann.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "gpdc/errors.hpp"

namespace gpdc {

namespace {

constexpr double kDetDeadZone = 1e-12;

void check_pair(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionError("frame pair: shapes disagree");
  if (a.cols() > a.rows()) throw DimensionError("frame: more columns than rows");
  if (a.cols() == 0) throw DimensionError("frame: zero columns");
}

}  // namespace

bool is_orthonormal_frame(const Mat& f, double tol) {
  if (f.cols() > f.rows() || f.cols() == 0) return false;
  Mat g = gram_product(f, f);
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < g.cols(); ++j) {
      double want = i == j ? 1.0 : 0.0;
      if (std::abs(g(i, j) - want) > tol) return false;
    }
  return true;
}

PrincipalAngles principal_angles(const Mat& a, const Mat& b) {
  check_pair(a, b);
  Mat m = gram_product(a, b);
  SvdResult svd = jacobi_svd(m);

  PrincipalAngles out;
  out.det = determinant(m);
  out.det_sign = out.det > kDetDeadZone ? 1 : (out.det < -kDetDeadZone ? -1 : 0);
  out.sigma.resize(svd.sigma.size());
  out.angles.resize(svd.sigma.size());
  for (std::size_t i = 0; i < svd.sigma.size(); ++i)
    out.sigma[i] = std::clamp(svd.sigma[i], 0.0, 1.0);
  // sigma is descending, so acos of it is ascending; store angles descending.
  for (std::size_t i = 0; i < out.sigma.size(); ++i)
    out.angles[i] = std::acos(out.sigma[out.sigma.size() - 1 - i]);
  return out;
}

double grassmann_distance(const Mat& a, const Mat& b) {
  PrincipalAngles pa = principal_angles(a, b);
  double s = 0.0;
  for (double t : pa.angles) s += t * t;
  return std::sqrt(s);
}

OrientedDistance oriented_grassmann_distance(const Mat& a, const Mat& b) {
  PrincipalAngles pa = principal_angles(a, b);
  double same = 0.0;
  for (double t : pa.angles) same += t * t;
  const double pi = std::numbers::pi;
  double flipped =
      same - pa.angles[0] * pa.angles[0] + (pi - pa.angles[0]) * (pi - pa.angles[0]);

  OrientedDistance out;
  out.det_sign = pa.det_sign;
  out.degenerate = pa.det_sign == 0;
  if (pa.det_sign > 0)
    out.value = std::sqrt(same);
  else if (pa.det_sign < 0)
    out.value = std::sqrt(flipped);
  else
    out.value = std::sqrt(std::min(same, flipped));
  return out;
}

double projector_distance(const Mat& a, const Mat& b) {
  check_pair(a, b);
  const std::size_t n = a.rows();
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      double pa = 0.0, pb = 0.0;
      for (std::size_t k = 0; k < a.cols(); ++k) {
        pa += a(i, k) * a(j, k);
        pb += b(i, k) * b(j, k);
      }
      s += (pa - pb) * (pa - pb);
    }
  return std::sqrt(s);
}

}  // namespace gpdc
