#include "gpdc/checks.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>

#include "gpdc/errors.hpp"
#include "gpdc/generators.hpp"
#include "gpdc/metric.hpp"
#include "gpdc/neighbors.hpp"
#include "gpdc/orientation.hpp"
#include "gpdc/persistence.hpp"

namespace gpdc {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.10g", x);
  return buf;
}

// Trapezoid sums over one period, node count doubling until two refinements
// agree to rel_tol. Periodic smooth integrands converge spectrally, so the
// loop ends after a handful of doublings.
double periodic_integral(const std::function<double(double)>& f, double period, double rel_tol,
                         double* err_out) {
  std::size_t n = 16;
  double sum = 0.0;
  for (std::size_t k = 0; k < n; ++k) sum += f(period * static_cast<double>(k) / n);
  double integral = sum * period / static_cast<double>(n);

  for (int round = 0; round < 20; ++round) {
    double odd = 0.0;
    for (std::size_t k = 0; k < n; ++k)
      odd += f(period * (2.0 * static_cast<double>(k) + 1.0) / (2.0 * static_cast<double>(n)));
    const double refined = integral / 2.0 + odd * period / (2.0 * static_cast<double>(n));
    const double err = std::abs(refined - integral);
    integral = refined;
    n *= 2;
    if (err <= rel_tol * std::max(1.0, std::abs(refined))) {
      if (err_out) *err_out = err;
      return integral;
    }
  }
  throw NumericsError("quadrature failed to converge");
}

double torus_vol_c(double R, double r, double c, double* err_out) {
  const double factor = kTwoPi * std::sqrt(r * r + c);
  auto f = [&](double v) {
    const double rho = R + r * std::cos(v);
    const double cv = std::cos(v);
    return std::sqrt(rho * rho + c * cv * cv);
  };
  double err = 0.0;
  const double integral = periodic_integral(f, kTwoPi, 1e-12, &err);
  if (err_out) *err_out = factor * err;
  return factor * integral;
}

CheckRecord make_record(std::string name, std::string detail, double lhs, double rhs, bool pass,
                        std::string note = "") {
  CheckRecord rec;
  rec.name = std::move(name);
  rec.detail = std::move(detail);
  rec.lhs = lhs;
  rec.rhs = rhs;
  rec.margin = rhs - lhs;
  rec.pass = pass;
  rec.note = std::move(note);
  return rec;
}

}  // namespace

TorusQuantities torus_quantities(double R, double r, double c) {
  if (!(r > 0.0) || !(r < R)) throw ParameterError("torus_quantities: need 0 < r < R");
  if (c < 0.0) throw ParameterError("torus_quantities: need c >= 0");

  TorusQuantities q;
  q.vol_c = torus_vol_c(R, r, c, &q.quad_error);
  q.vol_c_bound = kTwoPi * std::sqrt(r * r + c) * (kTwoPi * R + 4.0 * std::sqrt(c));
  q.l_c = std::min(0.5 * std::sqrt(4.0 * r * r + c * kPi * kPi), R);
  q.sys_lower = kTwoPi * (R - r);
  const double c_star = (R - r) * (R - r);
  q.c_is_bottleneck_scale = std::abs(c - c_star) <= 1e-12 * std::max(1.0, c_star);
  if (q.vol_c_bound > 0.0) {
    q.ratio_sys = q.sys_lower * q.sys_lower / q.vol_c_bound;
    q.ratio_l = q.l_c * q.l_c / q.vol_c_bound;
  }
  return q;
}

double curvature_ratio(const TorusJet& jet, double u, double v, const std::array<double, 2>& dir,
                       double c) {
  if (c < 0.0) throw ParameterError("curvature_ratio: need c >= 0");
  const double kappa = jet.normal_curvature(u, v, dir);
  if (c == 0.0) return kappa;
  const double row = jet.ii_row_norm(u, v, dir);
  const double grad = jet.ii_row_derivative_norm(u, v, dir);
  return std::sqrt(kappa * kappa + c * grad * grad) / (1.0 + c * row * row);
}

CheckRecord check_volume_bound(double R, double r, double c) {
  if (!(r > 0.0) || !(r < R)) throw ParameterError("check_volume_bound: need 0 < r < R");
  if (c < 0.0) throw ParameterError("check_volume_bound: need c >= 0");

  // 2D trapezoid over the parameter torus, doubling both directions.
  auto integrand = [&](double /*u*/, double v) {
    const double rho = R + r * std::cos(v);
    const double cv = std::cos(v);
    return std::sqrt((rho * rho + c * cv * cv) * (r * r + c));
  };
  auto grid_sum = [&](std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        s += integrand(kTwoPi * static_cast<double>(i) / n, kTwoPi * static_cast<double>(j) / n);
    return s * (kTwoPi / n) * (kTwoPi / n);
  };

  double prev = grid_sum(16), vol_c = 0.0, err = 0.0;
  std::size_t n = 32;
  for (;; n *= 2) {
    vol_c = grid_sum(n);
    err = std::abs(vol_c - prev);
    if (err <= 1e-8 * std::max(1.0, std::abs(vol_c))) break;
    if (n >= 1024) {
      if (err > 1e-5 * std::max(1.0, std::abs(vol_c)))
        throw NumericsError("volume quadrature failed to converge");
      break;
    }
    prev = vol_c;
  }

  const double vol = 4.0 * kPi * kPi * R * r;
  const double a = std::max(1.0 / r, 1.0 / (R - r));  // spectral norm of II over the torus
  const double d = 2.0, codim = 1.0;
  const double bound = std::pow(1.0 + c * a * a * std::min(d, codim), d / 2.0) * vol;
  const bool pass = vol_c <= bound * (1.0 + 1e-9);
  return make_record("volume-bound",
                     "R=" + fmt(R) + " r=" + fmt(r) + " c=" + fmt(c) + " quad_err=" + fmt(err),
                     vol_c, bound, pass);
}

std::vector<CheckRecord> check_normalized_bottleneck(double R, double r, std::size_t grid_n) {
  if (!(r > 0.0) || !(r < R)) throw ParameterError("check_normalized_bottleneck: need 0 < r < R");
  if (grid_n == 0) throw ParameterError("check_normalized_bottleneck: need a nonempty grid");

  std::vector<CheckRecord> out;
  const double L = std::min(r, R - r);
  const double a = std::max(1.0 / r, 1.0 / (R - r));
  if (L * a > 1.0 + 1e-12) {
    CheckRecord rec = make_record("normalized-bottleneck-precondition",
                                  "R=" + fmt(R) + " r=" + fmt(r), L, 1.0 / a, false,
                                  "L(M) > 1/||II||_2; chain not applicable");
    rec.skipped = true;
    out.push_back(rec);
    return out;
  }

  const double cmax = 12.0 * L * L / (kPi * kPi);
  const double vol0 = torus_vol_c(R, r, 0.0, nullptr);
  const double rhs = L / std::sqrt(vol0);

  double prev_mid = -1.0;
  bool monotone = true;
  for (std::size_t k = 1; k <= grid_n; ++k) {
    const double c = cmax * static_cast<double>(k) / static_cast<double>(grid_n);
    const TorusQuantities q = torus_quantities(R, r, c);
    const double lhs = q.l_c / std::sqrt(q.vol_c);
    const double mid = std::sqrt(4.0 * L * L + c * kPi * kPi) / (2.0 * std::sqrt(q.vol_c));
    const bool pass = lhs >= mid - 1e-12 * std::max(1.0, mid) && mid > rhs;
    out.push_back(make_record("normalized-bottleneck-chain",
                              "R=" + fmt(R) + " r=" + fmt(r) + " c=" + fmt(c) +
                                  " lhs=" + fmt(lhs) + " mid=" + fmt(mid),
                              rhs, mid, pass));
    if (prev_mid >= 0.0 && mid <= prev_mid) monotone = false;
    prev_mid = mid;
  }
  out.push_back(make_record("normalized-bottleneck-monotone",
                            "R=" + fmt(R) + " r=" + fmt(r) + " grid=" + fmt(double(grid_n)), 0.0,
                            1.0, monotone, "middle term strictly increasing in c"));
  return out;
}

namespace {

struct CurveSample {
  double u, v;
  std::array<double, 2> dir;  // coordinate velocity
};

// Geodesic equations of the torus metric diag((R + r cos v)^2, r^2):
// u'' = 2 r sin(v) u' v' / rho, v'' = -rho sin(v) u'^2 / r.
std::vector<CurveSample> torus_geodesic(double R, double r, double u0, double v0, double du0,
                                        double dv0, double t_end, std::size_t samples) {
  std::vector<CurveSample> out;
  out.reserve(samples);
  double s[4] = {u0, v0, du0, dv0};
  auto deriv = [&](const double* y, double* dy) {
    const double rho = R + r * std::cos(y[1]);
    dy[0] = y[2];
    dy[1] = y[3];
    dy[2] = 2.0 * r * std::sin(y[1]) * y[2] * y[3] / rho;
    dy[3] = -rho * std::sin(y[1]) * y[2] * y[2] / r;
  };
  const std::size_t sub = 50;
  const double h = t_end / static_cast<double>(samples * sub);
  for (std::size_t k = 0; k < samples; ++k) {
    out.push_back({s[0], s[1], {s[2], s[3]}});
    for (std::size_t step = 0; step < sub; ++step) {
      double k1[4], k2[4], k3[4], k4[4], tmp[4];
      deriv(s, k1);
      for (int i = 0; i < 4; ++i) tmp[i] = s[i] + h / 2.0 * k1[i];
      deriv(tmp, k2);
      for (int i = 0; i < 4; ++i) tmp[i] = s[i] + h / 2.0 * k2[i];
      deriv(tmp, k3);
      for (int i = 0; i < 4; ++i) tmp[i] = s[i] + h * k3[i];
      deriv(tmp, k4);
      for (int i = 0; i < 4; ++i) s[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    }
  }
  return out;
}

CheckRecord log_ii_record(const TorusJet& jet, const std::string& label,
                          const std::vector<CurveSample>& curve, double dt) {
  std::vector<double> fvals(curve.size()), rhs(curve.size());
  for (std::size_t k = 0; k < curve.size(); ++k) {
    fvals[k] = jet.ii_row_norm(curve[k].u, curve[k].v, curve[k].dir);
    if (fvals[k] < 1e-12) {
      CheckRecord rec = make_record("log-ii-bound-" + label, "", 0.0, 0.0, false,
                                    "||II(w,.)|| vanished along the curve");
      rec.skipped = true;
      return rec;
    }
    rhs[k] = jet.ii_row_derivative_norm(curve[k].u, curve[k].v, curve[k].dir) / fvals[k];
  }
  double worst = -1e300;
  for (std::size_t k = 1; k + 1 < curve.size(); ++k) {
    const double lhs = std::abs(std::log(fvals[k + 1]) - std::log(fvals[k - 1])) / (2.0 * dt);
    worst = std::max(worst, lhs - rhs[k]);
  }
  return make_record("log-ii-bound-" + label, "samples=" + fmt(double(curve.size())), worst, 1e-5,
                     worst <= 1e-5, "max over samples of LHS - RHS");
}

}  // namespace

std::vector<CheckRecord> check_log_ii_bound(double R, double r) {
  const TorusJet jet(R, r);
  std::vector<CheckRecord> out;
  const std::size_t samples = 200;

  {  // v-coordinate circle, unit speed, one period
    std::vector<CurveSample> curve;
    const double t_end = kTwoPi * r;
    for (std::size_t k = 0; k < samples; ++k) {
      const double v = 0.4 + (kTwoPi * static_cast<double>(k)) / static_cast<double>(samples);
      curve.push_back({0.3, v, {0.0, 1.0 / r}});
    }
    out.push_back(log_ii_record(jet, "v-circle", curve, t_end / static_cast<double>(samples)));
  }
  {  // u-coordinate circle at v = pi/4, unit speed
    std::vector<CurveSample> curve;
    const double v = kPi / 4.0;
    const double rho = R + r * std::cos(v);
    const double t_end = kTwoPi * rho;
    for (std::size_t k = 0; k < samples; ++k) {
      const double u = (kTwoPi * static_cast<double>(k)) / static_cast<double>(samples);
      curve.push_back({u, v, {1.0 / rho, 0.0}});
    }
    out.push_back(log_ii_record(jet, "u-circle", curve, t_end / static_cast<double>(samples)));
  }
  {  // generic unit-speed geodesic
    const double u0 = 0.3, v0 = 0.7;
    const double rho = R + r * std::cos(v0);
    const double t_end = 8.0;
    const auto curve =
        torus_geodesic(R, r, u0, v0, 0.6 / rho, 0.8 / r, t_end, samples);
    out.push_back(log_ii_record(jet, "geodesic", curve, t_end / static_cast<double>(samples)));
  }
  return out;
}

HomotopyRadius homotopy_radius_bound(double c, double ii_c_norm, double l_prime_c) {
  if (!(c > 0.0) || !(ii_c_norm > 0.0) || !(l_prime_c > 0.0))
    throw ParameterError("homotopy_radius_bound: inputs must be positive");

  HomotopyRadius out;
  out.statement_first_term =
      std::sqrt(c / 2.0) * std::atan(std::sqrt(2.0 / (c * ii_c_norm)));
  out.proof_first_term =
      std::sqrt(c / 2.0) * std::atan(std::sqrt(2.0 / (c * ii_c_norm * ii_c_norm)));
  out.second_term = std::sqrt(c) * kPi / 2.0;
  out.l_prime = l_prime_c;
  out.statement_min = std::min({out.statement_first_term, out.second_term, out.l_prime});
  out.proof_min = std::min({out.proof_first_term, out.second_term, out.l_prime});
  out.discrepancy = std::abs(out.statement_min - out.proof_min);
  return out;
}

std::vector<StabilityRow> stability_experiment(double R, double r, std::size_t n,
                                               std::uint64_t seed,
                                               const std::vector<double>& deltas, int maxdim) {
  if (maxdim < 0) throw ParameterError("stability_experiment: maxdim must be nonnegative");
  for (double d : deltas)
    if (d < 0.0 || r + d >= R)
      throw ParameterError("stability_experiment: need 0 <= delta < R - r");

  const TorusSample base = torus_sample(R, r, n, seed, TorusMode::random);
  const ScaleParams scale = choose_scale(base.cloud);
  const DistanceMatrix dm0 = dc_matrix(base.cloud, base.frames, scale.c);
  const double threshold = enclosing_radius(dm0);
  const PersistenceDiagram dg0 = vr_persistence(dm0, maxdim, threshold);

  std::vector<StabilityRow> rows;
  for (double d : deltas) {
    const TorusSample pert = torus_from_params(R, r + d, base.u, base.v);
    const DistanceMatrix dm = dc_matrix(pert.cloud, pert.frames, scale.c);
    const PersistenceDiagram dg = vr_persistence(dm, maxdim, threshold);
    StabilityRow row;
    row.delta = d;
    for (int j = 0; j <= maxdim; ++j)
      row.bottleneck.push_back(bottleneck_distance(dg0.at(j), dg.at(j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<CheckRecord> run_all_checks(const std::string& filter) {
  std::vector<CheckRecord> out;
  auto keep = [&](const CheckRecord& rec) {
    if (filter.empty() || rec.name.find(filter) != std::string::npos) out.push_back(rec);
  };

  {  // Middle-term closed form and monotonicity on the tube direction.
    const TorusJet jet(1.0, 0.25);
    double prev = 1e300;
    double worst = 0.0;
    bool monotone = true;
    for (int k = 1; k <= 12; ++k) {
      const double c = static_cast<double>(k) / 12.0;
      const double ratio = curvature_ratio(jet, 0.3, 0.9, {0.0, 1.0}, c);
      worst = std::max(worst, std::abs(ratio - 4.0 / (1.0 + 16.0 * c)));
      if (ratio >= prev) monotone = false;
      prev = ratio;
    }
    keep(make_record("curvature-ratio-closed-form", "R=1 r=0.25 tube direction", worst, 1e-6,
                     worst <= 1e-6 && monotone, "max |ratio - 4/(1+16c)|, decreasing in c"));
    const double at0 = curvature_ratio(jet, 0.3, 0.9, {0.0, 1.0}, 0.0);
    keep(make_record("curvature-ratio-at-zero", "R=1 r=0.25 tube direction", std::abs(at0 - 4.0),
                     1e-10, std::abs(at0 - 4.0) <= 1e-10, "ratio(0) = kappa"));
  }

  keep(check_volume_bound(1.0, 0.25, 0.5625));
  keep(check_volume_bound(1.0, 0.25, 0.1));

  {  // Closed forms at the thin-torus example scale.
    const double R = 1.0, r = 1e-3;
    const TorusQuantities q = torus_quantities(R, r, (R - r) * (R - r));
    const double t_sys = kTwoPi / (kTwoPi + 4.0);
    const double t_l = 1.0 / (kTwoPi * (kTwoPi + 4.0));
    const double err = std::max(std::abs(q.ratio_sys - t_sys), std::abs(q.ratio_l - t_l));
    keep(make_record("torus-closed-forms", "R=1 r=0.001 c=(R-r)^2", err, 5e-3,
                     err <= 5e-3 && q.quad_error <= 1e-8,
                     "ratios vs limiting constants; quadrature agreement " + fmt(q.quad_error)));
  }

  for (const CheckRecord& rec : check_normalized_bottleneck(1.0, 0.25, 20)) keep(rec);
  for (const CheckRecord& rec : check_log_ii_bound(1.0, 0.25)) keep(rec);

  {
    const HomotopyRadius hr = homotopy_radius_bound(2.0, 1.0, 10.0);
    keep(make_record("homotopy-radius-example", "c=2 ||II_c||=1 L'=10",
                     std::abs(hr.proof_min - kPi / 4.0), 1e-12,
                     std::abs(hr.proof_min - kPi / 4.0) <= 1e-12,
                     "statement vs proof discrepancy " + fmt(hr.discrepancy)));
  }

  if (filter.empty() || std::string("orientation-consistency").find(filter) != std::string::npos) {
    const TorusSample torus = torus_sample(1.0, 0.25, 2000, 11, TorusMode::random);
    const AdjacencyLists adj = knn(torus.cloud, default_k(torus.cloud.n, 2));
    const FrameField est = estimate_frame_field(torus.cloud, adj, 2);
    const auto res = propagate_orientation(est, symmetrize(adj), &torus.cloud, 0.25);
    keep(make_record("orientation-consistency-torus", "n=2000 k=default",
                     static_cast<double>(res.report.violations.size()), 0.0,
                     res.report.consistent, "violating edges after propagation"));

    const PointCloud mob = mobius_sample(1.0, 0.3, 400, 5);
    const AdjacencyLists madj = knn(mob, 10);
    const FrameField mest = estimate_frame_field(mob, madj, 2);
    const auto mres = propagate_orientation(mest, symmetrize(madj));
    keep(make_record("orientation-consistency-mobius", "n=400 k=10",
                     static_cast<double>(mres.report.violations.size()), 1.0,
                     !mres.report.consistent && !mres.report.violations.empty(),
                     "non-orientable control must report violations"));
  }

  if (filter.empty() || std::string("stability-proxy").find(filter) != std::string::npos) {
    const auto rows = stability_experiment(1.0, 0.25, 120, 3, {0.02, 0.01, 0.0}, 1);
    bool ok = true;
    for (std::size_t i = 1; i < rows.size(); ++i)
      for (std::size_t j = 0; j < rows[i].bottleneck.size(); ++j)
        if (rows[i].bottleneck[j] > rows[i - 1].bottleneck[j] + 1e-6) ok = false;
    for (double b : rows.back().bottleneck)
      if (b != 0.0) ok = false;
    std::string detail;
    for (const auto& row : rows) {
      detail += "d=" + fmt(row.delta) + ":";
      for (double b : row.bottleneck) detail += " " + fmt(b);
      detail += ";";
    }
    keep(make_record("stability-proxy", detail, 0.0, 1.0, ok,
                     "bottleneck nonincreasing toward 0 as delta shrinks"));
  }

  return out;
}

}  // namespace gpdc
