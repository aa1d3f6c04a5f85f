#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "gpdc/surface_jet.hpp"

namespace gpdc {

/// Machine-readable verdict of one numerical check.
struct CheckRecord {
  std::string name;
  std::string detail;  // inputs, rendered
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;  // rhs - lhs unless noted
  bool pass = false;
  bool skipped = false;
  std::string note;
};

/// Closed-form torus quantities at scale c. The normalized ratios divide by
/// the closed-form volume bound (the quantity the limiting constants refer
/// to); the quadrature volume is also reported.
struct TorusQuantities {
  double vol_c = 0.0;        // 2 pi sqrt(r^2+c) integral of sqrt((R+r cos v)^2 + c cos^2 v)
  double vol_c_bound = 0.0;  // 2 pi sqrt(r^2+c) (2 pi R + 4 sqrt(c))
  double l_c = 0.0;          // min(sqrt(4r^2 + c pi^2)/2, R)
  double sys_lower = 0.0;    // 2 pi (R - r), meaningful at c = (R-r)^2
  double ratio_sys = 0.0;    // sys_lower^2 / vol_c_bound
  double ratio_l = 0.0;      // l_c^2 / vol_c_bound
  double quad_error = 0.0;   // last halving disagreement of the quadrature
  bool c_is_bottleneck_scale = false;  // c == (R-r)^2 within rounding
};

TorusQuantities torus_quantities(double R, double r, double c);

/// Middle term sqrt(kappa(w)^2 + c ||(nabla_w II)(w,.)||^2) /
/// (1 + c ||II(w,.)||^2) at the given parameter point and coordinate
/// direction; equals kappa(w) at c = 0.
double curvature_ratio(const TorusJet& jet, double u, double v, const std::array<double, 2>& dir,
                       double c);

/// vol_c <= (1 + c a^2 min(d, D-d))^{d/2} vol with a the spectral norm of II
/// over the torus, by 2D quadrature of sqrt(det g_c).
CheckRecord check_volume_bound(double R, double r, double c);

/// Inequality chain L_c/vol_c^{1/2} >= sqrt(4L^2 + c pi^2)/(2 vol_c^{1/2})
/// > L/vol^{1/2} and middle-term monotonicity on `grid_n` values of c in
/// (0, 12 L^2/pi^2]. One record per grid value plus one for monotonicity.
std::vector<CheckRecord> check_normalized_bottleneck(double R, double r, std::size_t grid_n);

/// |d/dt log||II(w,.)|| | <= ||(nabla_w II)(w,.)|| / ||II(w,.)|| sampled
/// along three torus curves: the v-circle, the u-circle at v = pi/4, and a
/// generic geodesic (RK4). One record per curve.
std::vector<CheckRecord> check_log_ii_bound(double R, double r);

/// Radius bound min(sqrt(c/2) arctan sqrt(2/(c s)), sqrt(c) pi/2, l_prime)
/// where s is either ||II_c||_2 (statement variant) or its square (proof
/// variant); the two disagree whenever the norm differs from 1.
struct HomotopyRadius {
  double statement_first_term = 0.0;
  double proof_first_term = 0.0;
  double second_term = 0.0;
  double l_prime = 0.0;
  double statement_min = 0.0;
  double proof_min = 0.0;
  double discrepancy = 0.0;  // |statement_min - proof_min|
};

HomotopyRadius homotopy_radius_bound(double c, double ii_c_norm, double l_prime_c);

/// Normal-offset perturbation experiment: the torus embedding is moved to
/// tube radius r + delta at unchanged parameters (frames do not move), d_c
/// matrices share one scale c and one filtration threshold, and the
/// bottleneck distance to the unperturbed diagram is reported per degree.
struct StabilityRow {
  double delta = 0.0;
  std::vector<double> bottleneck;  // per degree 0 .. maxdim
};

std::vector<StabilityRow> stability_experiment(double R, double r, std::size_t n,
                                               std::uint64_t seed,
                                               const std::vector<double>& deltas, int maxdim);

/// The fast standard suite (curvature ratio, volume bound, closed forms,
/// bottleneck chain, log-II bound, radius-bound example, orientation
/// consistency, a small stability run). `filter` keeps checks whose name
/// contains it; empty keeps all.
std::vector<CheckRecord> run_all_checks(const std::string& filter);

}  // namespace gpdc
