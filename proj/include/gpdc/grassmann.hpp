#pragma once

#include <vector>

#include "gpdc/linalg.hpp"

namespace gpdc {

/// A frame is a D x d matrix with orthonormal columns spanning a d-plane in
/// R^D. Frames are stored as plain Mat; these functions validate shape and
/// treat the columns as the (ordered, oriented) basis.

bool is_orthonormal_frame(const Mat& f, double tol = 1e-10);

struct PrincipalAngles {
  std::vector<double> sigma;   // singular values of A^T B, descending in [0, 1]
  std::vector<double> angles;  // principal angles, descending, angles[0] largest
  double det;                  // det(A^T B)
  int det_sign;                // sign of det with a 1e-12 dead zone
};

/// SVD of the d x d product A^T B plus the derived quantities everything else
/// here is built on. Singular values are clamped into [0, 1] before acos.
PrincipalAngles principal_angles(const Mat& a, const Mat& b);

/// Geodesic distance on the unoriented Grassmannian: sqrt(sum of theta_i^2).
double grassmann_distance(const Mat& a, const Mat& b);

struct OrientedDistance {
  double value;
  int det_sign;
  bool degenerate;  // det(A^T B) was in the +-1e-12 dead zone
};

/// Geodesic distance on the oriented Grassmannian. Same-orientation pairs
/// (det > 0) reduce to the unoriented distance; det < 0 replaces the largest
/// angle theta_1 by pi - theta_1. A vanishing determinant makes the branch
/// choice moot (theta_1 = pi/2, the branches agree); both are evaluated, the
/// minimum returned, and `degenerate` set.
OrientedDistance oriented_grassmann_distance(const Mat& a, const Mat& b);

/// Hilbert-Schmidt distance of the orthogonal projectors A A^T and B B^T,
/// computed directly from the D x D projectors.
double projector_distance(const Mat& a, const Mat& b);

}  // namespace gpdc
