#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gpdc/cloud.hpp"
#include "gpdc/tangent.hpp"

namespace gpdc {

enum class TorusMode {
  grid,    // near-square (u, v) lattice, deterministic
  random,  // seeded area-uniform sampling (cos v density correction)
};

/// A torus sample keeps its parameter values so that the same point set can
/// be rebuilt at a different tube radius (a normal offset of the embedding).
struct TorusSample {
  PointCloud cloud;    // D = 3, d = 2
  FrameField frames;   // analytic, consistently oriented
  std::vector<double> u, v;
};

/// Points ((R + r cos v) cos u, (R + r cos v) sin u, r sin v) with the
/// analytic frames e_u = (-sin u, cos u, 0) and
/// e_v = (-sin v cos u, -sin v sin u, cos v).
TorusSample torus_sample(double R, double r, std::size_t n, std::uint64_t seed, TorusMode mode);

/// The torus embedding evaluated at given parameters. Offsetting a sample
/// along its unit normal by delta is exactly torus_from_params with r + delta
/// and unchanged parameters; the analytic frames do not move.
TorusSample torus_from_params(double R, double r, const std::vector<double>& u,
                              const std::vector<double>& v);

struct EllipseSample {
  PointCloud cloud;    // D = 2, d = 1
  FrameField frames;   // unit tangents, oriented by increasing parameter
  std::vector<double> t;
};

/// (a cos t, b sin t) at n equispaced parameters in [0, 2 pi).
EllipseSample ellipse_sample(double a, double b, std::size_t n);

/// ((R + s cos(t/2)) cos t, (R + s cos(t/2)) sin t, s sin(t/2)) with t
/// uniform in [0, 2 pi) and s uniform in [-w, w], seeded. Non-orientable;
/// serves as the negative control for orientation propagation.
PointCloud mobius_sample(double R, double w, std::size_t n, std::uint64_t seed);

struct TrajectoryConfig {
  double C = 0.1;
  double eta = 0.1;
  double omega = 0.62831853071795864769;  // pi / 5
  double x0 = 0.5;
  double y0 = 0.625;
  double T = 10000.0;
  std::size_t n = 20000;
  double h = 0.01;
};

struct Trajectory {
  std::vector<double> t, x, y;
  double dt = 0.0;                  // sample spacing T / (n - 1)
  double max_box_excursion = 0.0;   // worst distance outside [0,2] x [0,1]
};

/// Double-gyre flow x' = -pi C sin(pi f) cos(pi y),
/// y' = pi C cos(pi f) sin(pi y) df/dx with
/// f(x, t) = eta sin(omega t) x^2 + (1 - 2 eta sin(omega t)) x, integrated by
/// classical RK4. Each sampling interval T/(n-1) is cut into
/// max(1, round(interval/h)) equal substeps so samples land exactly on the
/// requested times and the scheme stays fixed-step.
Trajectory double_gyre_trajectory(const TrajectoryConfig& cfg);

/// Sliding-window embedding: point i = (s[i], s[i + tau], ...,
/// s[i + (m-1) tau]) in R^m. Requires series length >= (m-1) tau + 1.
PointCloud delay_embed(const std::vector<double>& series, std::size_t tau_steps, std::size_t m);

enum class PointFormat { csv, whitespace, off_vertices };

/// Point-per-line CSV or whitespace files, or the vertex block of an OFF
/// mesh. Malformed input raises ParseError naming the line.
PointCloud load_points(const std::string& path, PointFormat format);

void save_points_csv(const PointCloud& cloud, const std::string& path);

/// Text frame file: header "n D d oriented" then n blocks of D rows times d
/// columns, 17 significant digits.
void save_frames(const FrameField& field, const std::string& path);
FrameField load_frames(const std::string& path);

}  // namespace gpdc
