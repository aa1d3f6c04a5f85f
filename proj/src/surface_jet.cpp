#include "gpdc/surface_jet.hpp"

#include <cmath>

#include "gpdc/errors.hpp"

namespace gpdc {

namespace {

constexpr double kStep = 1e-5;  // central-difference step in (u, v)

Mat torus_g(double R, double r, double v) {
  const double rho = R + r * std::cos(v);
  Mat g(2, 2);
  g(0, 0) = rho * rho;
  g(1, 1) = r * r;
  return g;
}

Mat torus_ii(double R, double r, double v) {
  const double rho = R + r * std::cos(v);
  Mat ii(2, 2);
  ii(0, 0) = -rho * std::cos(v);
  ii(1, 1) = -r;
  return ii;
}

Mat inverse2(const Mat& m) {
  const double det = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  if (det == 0.0) throw MatrixError("surface jet: singular first fundamental form");
  Mat inv(2, 2);
  inv(0, 0) = m(1, 1) / det;
  inv(0, 1) = -m(0, 1) / det;
  inv(1, 0) = -m(1, 0) / det;
  inv(1, 1) = m(0, 0) / det;
  return inv;
}

// One-form norm sqrt(a_i a_j g^{ij}).
double form_norm(const std::array<double, 2>& a, const Mat& ginv) {
  double s = 0.0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) s += a[i] * a[j] * ginv(i, j);
  return std::sqrt(std::max(0.0, s));
}

}  // namespace

TorusJet::TorusJet(double R, double r) : R_(R), r_(r) {
  if (!(r > 0.0) || !(r < R)) throw ParameterError("torus jet: need 0 < r < R");
}

JetData TorusJet::at(double u, double v) const {
  const double rho = R_ + r_ * std::cos(v);
  JetData jet;
  jet.position = {rho * std::cos(u), rho * std::sin(u), r_ * std::sin(v)};
  jet.frame = Mat(3, 2);
  jet.frame(0, 0) = -std::sin(u);
  jet.frame(1, 0) = std::cos(u);
  jet.frame(2, 0) = 0.0;
  jet.frame(0, 1) = -std::sin(v) * std::cos(u);
  jet.frame(1, 1) = -std::sin(v) * std::sin(u);
  jet.frame(2, 1) = std::cos(v);
  jet.normal = {std::cos(v) * std::cos(u), std::cos(v) * std::sin(u), std::sin(v)};
  jet.first_form = torus_g(R_, r_, v);
  jet.second_form = torus_ii(R_, r_, v);
  return jet;
}

double TorusJet::normal_curvature(double u, double v, const std::array<double, 2>& dir) const {
  (void)u;
  const Mat g = torus_g(R_, r_, v);
  const Mat ii = torus_ii(R_, r_, v);
  double len2 = 0.0, val = 0.0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      len2 += dir[i] * dir[j] * g(i, j);
      val += dir[i] * dir[j] * ii(i, j);
    }
  if (!(len2 > 0.0)) throw ParameterError("torus jet: zero direction");
  return std::abs(val) / len2;
}

double TorusJet::ii_row_norm(double u, double v, const std::array<double, 2>& dir) const {
  (void)u;
  const Mat g = torus_g(R_, r_, v);
  const Mat ii = torus_ii(R_, r_, v);
  const Mat ginv = inverse2(g);
  double len2 = 0.0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) len2 += dir[i] * dir[j] * g(i, j);
  if (!(len2 > 0.0)) throw ParameterError("torus jet: zero direction");
  const double inv_len = 1.0 / std::sqrt(len2);

  std::array<double, 2> alpha{0.0, 0.0};
  for (int j = 0; j < 2; ++j)
    for (int i = 0; i < 2; ++i) alpha[j] += dir[i] * inv_len * ii(i, j);
  return form_norm(alpha, ginv);
}

double TorusJet::ii_row_derivative_norm(double u, double v,
                                        const std::array<double, 2>& dir) const {
  (void)u;
  const Mat g = torus_g(R_, r_, v);
  const Mat ginv = inverse2(g);
  const Mat ii = torus_ii(R_, r_, v);

  double len2 = 0.0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) len2 += dir[i] * dir[j] * g(i, j);
  if (!(len2 > 0.0)) throw ParameterError("torus jet: zero direction");
  const double inv_len = 1.0 / std::sqrt(len2);
  const std::array<double, 2> w{dir[0] * inv_len, dir[1] * inv_len};

  // dg[k](i, j) = d/dx^k g_ij and dii[k](i, j) = d/dx^k II_ij; the closed
  // forms depend on v only, but both differences are taken for honesty.
  Mat dg[2] = {Mat(2, 2), Mat(2, 2)};
  Mat dii[2] = {Mat(2, 2), Mat(2, 2)};
  {
    const Mat gp = torus_g(R_, r_, v + kStep), gm = torus_g(R_, r_, v - kStep);
    const Mat iip = torus_ii(R_, r_, v + kStep), iim = torus_ii(R_, r_, v - kStep);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        dg[1](i, j) = (gp(i, j) - gm(i, j)) / (2.0 * kStep);
        dii[1](i, j) = (iip(i, j) - iim(i, j)) / (2.0 * kStep);
      }
  }

  double gamma[2][2][2];  // gamma[l][k][i]
  for (int l = 0; l < 2; ++l)
    for (int k = 0; k < 2; ++k)
      for (int i = 0; i < 2; ++i) {
        double s = 0.0;
        for (int m = 0; m < 2; ++m)
          s += ginv(l, m) * (dg[k](m, i) + dg[i](m, k) - dg[m](k, i));
        gamma[l][k][i] = 0.5 * s;
      }

  std::array<double, 2> t{0.0, 0.0};
  for (int j = 0; j < 2; ++j)
    for (int k = 0; k < 2; ++k)
      for (int i = 0; i < 2; ++i) {
        double term = dii[k](i, j);
        for (int l = 0; l < 2; ++l)
          term -= gamma[l][k][i] * ii(l, j) + gamma[l][k][j] * ii(i, l);
        t[j] += w[k] * w[i] * term;
      }
  return form_norm(t, ginv);
}

double TorusJet::ii_operator_norm(double v) const {
  const double rho = R_ + r_ * std::cos(v);
  return std::max(std::abs(std::cos(v)) / rho, 1.0 / r_);
}

}  // namespace gpdc
