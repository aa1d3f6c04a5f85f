#pragma once

#include <array>

#include "gpdc/linalg.hpp"

namespace gpdc {

/// Differential data of a parametrized surface at one parameter point.
/// Fundamental forms are expressed in the coordinate basis (partial_u,
/// partial_v); the frame holds the orthonormalized coordinate tangents.
struct JetData {
  std::array<double, 3> position;
  Mat frame;                      // 3 x 2, orthonormal columns
  std::array<double, 3> normal;   // outward unit normal
  Mat first_form;                 // 2 x 2
  Mat second_form;                // 2 x 2
};

/// The torus ((R + r cos v) cos u, (R + r cos v) sin u, r sin v) with its
/// closed-form fundamental forms diag((R + r cos v)^2, r^2) and
/// diag(-(R + r cos v) cos v, -r). Directional quantities take a tangent
/// direction in coordinate components and normalize it internally.
class TorusJet {
public:
  TorusJet(double R, double r);

  double major() const { return R_; }
  double minor() const { return r_; }

  JetData at(double u, double v) const;

  /// Normal curvature kappa(w) = |II(w, w)| for the unit vector along dir.
  double normal_curvature(double u, double v, const std::array<double, 2>& dir) const;

  /// Hilbert-Schmidt norm of the one-slot contraction II(w, .) for the unit
  /// vector w along dir.
  double ii_row_norm(double u, double v, const std::array<double, 2>& dir) const;

  /// HS norm of (nabla_w II)(w, .) for the unit vector w along dir, by
  /// central differences of the closed forms at parameter step 1e-5
  /// (Christoffel symbols also by central differences of the metric).
  double ii_row_derivative_norm(double u, double v, const std::array<double, 2>& dir) const;

  /// Spectral norm of the second fundamental form at the point: the largest
  /// absolute principal curvature.
  double ii_operator_norm(double v) const;

private:
  double R_, r_;
};

}  // namespace gpdc
