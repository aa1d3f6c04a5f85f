#include "gpdc/generators.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "gpdc/errors.hpp"

namespace gpdc {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// mt19937_64 output folded to [0, 1) through the top 53 bits; identical
// across platforms, unlike the distribution templates.
double unit_double(std::mt19937_64& g) {
  return static_cast<double>(g() >> 11) * 0x1.0p-53;
}

Mat torus_frame(double u, double v) {
  Mat f(3, 2);
  f(0, 0) = -std::sin(u);
  f(1, 0) = std::cos(u);
  f(2, 0) = 0.0;
  f(0, 1) = -std::sin(v) * std::cos(u);
  f(1, 1) = -std::sin(v) * std::sin(u);
  f(2, 1) = std::cos(v);
  return f;
}

}  // namespace

TorusSample torus_from_params(double R, double r, const std::vector<double>& u,
                              const std::vector<double>& v) {
  if (!(r > 0.0) || !(r < R)) throw ParameterError("torus: need 0 < r < R");
  if (u.size() != v.size()) throw ParameterError("torus: parameter arrays differ in length");
  const std::size_t n = u.size();

  TorusSample out;
  out.cloud = PointCloud(n, 3, 2);
  out.frames.dim_ambient = 3;
  out.frames.dim_intrinsic = 2;
  out.frames.oriented = true;
  out.frames.frames.reserve(n);
  out.u = u;
  out.v = v;

  for (std::size_t i = 0; i < n; ++i) {
    const double rho = R + r * std::cos(v[i]);
    double* p = out.cloud.point(i);
    p[0] = rho * std::cos(u[i]);
    p[1] = rho * std::sin(u[i]);
    p[2] = r * std::sin(v[i]);
    out.frames.frames.push_back(torus_frame(u[i], v[i]));
  }
  return out;
}

TorusSample torus_sample(double R, double r, std::size_t n, std::uint64_t seed, TorusMode mode) {
  if (!(r > 0.0) || !(r < R)) throw ParameterError("torus: need 0 < r < R");
  if (n == 0) throw ParameterError("torus: need n > 0");

  std::vector<double> u(n), v(n);
  if (mode == TorusMode::grid) {
    const std::size_t nu = static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(n))));
    const std::size_t nv = (n + nu - 1) / nu;
    for (std::size_t i = 0; i < n; ++i) {
      u[i] = kTwoPi * static_cast<double>(i % nu) / static_cast<double>(nu);
      v[i] = kTwoPi * static_cast<double>(i / nu) / static_cast<double>(nv);
    }
  } else {
    // Area-uniform: density over (u, v) proportional to R + r cos v.
    std::mt19937_64 gen(seed);
    for (std::size_t i = 0; i < n; ++i) {
      u[i] = kTwoPi * unit_double(gen);
      for (;;) {
        const double cand = kTwoPi * unit_double(gen);
        const double accept = (R + r * std::cos(cand)) / (R + r);
        if (unit_double(gen) < accept) {
          v[i] = cand;
          break;
        }
      }
    }
  }
  return torus_from_params(R, r, u, v);
}

EllipseSample ellipse_sample(double a, double b, std::size_t n) {
  if (!(a > 0.0) || !(b > 0.0)) throw ParameterError("ellipse: need a, b > 0");
  if (n == 0) throw ParameterError("ellipse: need n > 0");

  EllipseSample out;
  out.cloud = PointCloud(n, 2, 1);
  out.frames.dim_ambient = 2;
  out.frames.dim_intrinsic = 1;
  out.frames.oriented = true;
  out.frames.frames.reserve(n);
  out.t.resize(n);

  for (std::size_t i = 0; i < n; ++i) {
    const double t = kTwoPi * static_cast<double>(i) / static_cast<double>(n);
    out.t[i] = t;
    double* p = out.cloud.point(i);
    p[0] = a * std::cos(t);
    p[1] = b * std::sin(t);
    const double tx = -a * std::sin(t), ty = b * std::cos(t);
    const double norm = std::hypot(tx, ty);
    Mat f(2, 1);
    f(0, 0) = tx / norm;
    f(1, 0) = ty / norm;
    out.frames.frames.push_back(std::move(f));
  }
  return out;
}

PointCloud mobius_sample(double R, double w, std::size_t n, std::uint64_t seed) {
  if (!(w > 0.0) || !(w < R)) throw ParameterError("mobius: need 0 < w < R");
  if (n == 0) throw ParameterError("mobius: need n > 0");

  PointCloud cloud(n, 3, 2);
  std::mt19937_64 gen(seed);
  for (std::size_t i = 0; i < n; ++i) {
    const double t = kTwoPi * unit_double(gen);
    const double s = w * (2.0 * unit_double(gen) - 1.0);
    const double rho = R + s * std::cos(t / 2.0);
    double* p = cloud.point(i);
    p[0] = rho * std::cos(t);
    p[1] = rho * std::sin(t);
    p[2] = s * std::sin(t / 2.0);
  }
  return cloud;
}

Trajectory double_gyre_trajectory(const TrajectoryConfig& cfg) {
  if (!(cfg.h > 0.0)) throw ParameterError("double gyre: need h > 0");
  if (cfg.n < 2) throw ParameterError("double gyre: need n >= 2");
  if (!(cfg.T > 0.0)) throw ParameterError("double gyre: need T > 0");
  if (cfg.x0 < 0.0 || cfg.x0 > 2.0 || cfg.y0 < 0.0 || cfg.y0 > 1.0)
    throw ParameterError("double gyre: start point outside [0,2] x [0,1]");

  const double pi = std::numbers::pi;
  auto velocity = [&](double t, double x, double y, double& vx, double& vy) {
    const double a = cfg.eta * std::sin(cfg.omega * t);
    const double f = a * x * x + (1.0 - 2.0 * a) * x;
    const double dfdx = 2.0 * a * x + 1.0 - 2.0 * a;
    vx = -pi * cfg.C * std::sin(pi * f) * std::cos(pi * y);
    vy = pi * cfg.C * std::cos(pi * f) * std::sin(pi * y) * dfdx;
  };

  Trajectory out;
  out.t.resize(cfg.n);
  out.x.resize(cfg.n);
  out.y.resize(cfg.n);
  out.dt = cfg.T / static_cast<double>(cfg.n - 1);

  double x = cfg.x0, y = cfg.y0;
  out.t[0] = 0.0;
  out.x[0] = x;
  out.y[0] = y;

  const std::size_t substeps =
      std::max<std::size_t>(1, static_cast<std::size_t>(std::llround(out.dt / cfg.h)));
  const double h = out.dt / static_cast<double>(substeps);

  for (std::size_t j = 1; j < cfg.n; ++j) {
    const double base = static_cast<double>(j - 1) * out.dt;
    for (std::size_t s = 0; s < substeps; ++s) {
      const double t0 = base + static_cast<double>(s) * h;
      double k1x, k1y, k2x, k2y, k3x, k3y, k4x, k4y;
      velocity(t0, x, y, k1x, k1y);
      velocity(t0 + h / 2.0, x + h / 2.0 * k1x, y + h / 2.0 * k1y, k2x, k2y);
      velocity(t0 + h / 2.0, x + h / 2.0 * k2x, y + h / 2.0 * k2y, k3x, k3y);
      velocity(t0 + h, x + h * k3x, y + h * k3y, k4x, k4y);
      x += h / 6.0 * (k1x + 2.0 * k2x + 2.0 * k3x + k4x);
      y += h / 6.0 * (k1y + 2.0 * k2y + 2.0 * k3y + k4y);
      const double ex = std::max({0.0, -x, x - 2.0});
      const double ey = std::max({0.0, -y, y - 1.0});
      out.max_box_excursion = std::max(out.max_box_excursion, std::max(ex, ey));
    }
    out.t[j] = static_cast<double>(j) * out.dt;
    out.x[j] = x;
    out.y[j] = y;
  }
  return out;
}

PointCloud delay_embed(const std::vector<double>& series, std::size_t tau_steps, std::size_t m) {
  if (m == 0) throw ParameterError("delay embed: need m >= 1");
  if (tau_steps == 0) throw ParameterError("delay embed: need tau >= 1");
  const std::size_t span = (m - 1) * tau_steps;
  if (series.size() < span + 1)
    throw ParameterError("delay embed: series shorter than (m - 1) tau + 1");

  const std::size_t n = series.size() - span;
  PointCloud cloud(n, m, 0);
  for (std::size_t i = 0; i < n; ++i) {
    double* p = cloud.point(i);
    for (std::size_t k = 0; k < m; ++k) p[k] = series[i + k * tau_steps];
  }
  return cloud;
}

}  // namespace gpdc
