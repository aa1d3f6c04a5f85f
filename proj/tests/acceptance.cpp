// Acceptance gate: one pass/fail line per criterion, exit code = number of
// failing criteria. Every tolerance and every frozen configuration is pinned
// here on purpose; loosening one is a red flag in review.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "gpdc/checks.hpp"
#include "gpdc/generators.hpp"
#include "gpdc/grassmann.hpp"
#include "gpdc/metric.hpp"
#include "gpdc/neighbors.hpp"
#include "gpdc/orientation.hpp"
#include "gpdc/persistence.hpp"
#include "gpdc/surface_jet.hpp"
#include "gpdc/tangent.hpp"
#include "test_util.hpp"

using namespace gpdc;

namespace {

constexpr double kPi = 3.14159265358979323846;

void note(std::string& detail, const std::string& msg) {
  if (!detail.empty()) detail += "; ";
  detail += msg;
}

std::string fmt(double x) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.6g", x);
  return buf;
}

// ---- criterion 1: Grassmannian kernels -------------------------------------

bool criterion_grassmann(std::string& detail) {
  std::mt19937_64 rng(2024);
  double worst_identity = 0.0, worst_triangle = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t d = 1 + static_cast<std::size_t>(rng() % 4);
    const std::size_t D = d + 1 + static_cast<std::size_t>(rng() % (8 - d));
    const Mat a = testutil::random_frame(D, d, rng);
    const Mat b = testutil::random_frame(D, d, rng);
    const Mat c = testutil::random_frame(D, d, rng);

    const PrincipalAngles pa = principal_angles(a, b);
    double two_sum = 0.0;
    for (double theta : pa.angles) two_sum += 2.0 * std::sin(theta) * std::sin(theta);
    const double pd = projector_distance(a, b);
    worst_identity = std::max(worst_identity, std::abs(pd * pd - two_sum));

    const double g_ab = grassmann_distance(a, b);
    const double g_ac = grassmann_distance(a, c);
    const double g_bc = grassmann_distance(b, c);
    const OrientedDistance o_ab = oriented_grassmann_distance(a, b);
    if (o_ab.value < g_ab - 1e-12) {
      note(detail, "oriented < unoriented at trial " + std::to_string(trial));
      return false;
    }
    worst_triangle = std::max(worst_triangle, g_ac - (g_ab + g_bc));

    const double o_ac = oriented_grassmann_distance(a, c).value;
    const double o_bc = oriented_grassmann_distance(b, c).value;
    worst_triangle = std::max(worst_triangle, o_ac - (o_ab.value + o_bc));
  }
  note(detail, "identity residual " + fmt(worst_identity));
  note(detail, "triangle excess " + fmt(worst_triangle));
  return worst_identity <= 1e-8 && worst_triangle <= 1e-8;
}

// ---- criterion 2: persistence oracle equivalence ---------------------------

DistanceMatrix random_matrix(std::size_t n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unif(0.05, 2.0);
  std::vector<double> dense(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) dense[i * n + j] = dense[j * n + i] = unif(rng);
  return matrix_from_dense(dense.data(), n, MetricTag::euclidean, 0.0);
}

bool same_diagram(const PersistenceDiagram& a, const PersistenceDiagram& b) {
  if (a.maxdim != b.maxdim) return false;
  for (int q = 0; q <= a.maxdim; ++q) {
    auto x = a.at(q);
    auto y = b.at(q);
    if (x.size() != y.size()) return false;
    auto key = [](const PersistenceBar& u, const PersistenceBar& v) {
      return u.birth != v.birth ? u.birth < v.birth : u.death < v.death;
    };
    std::sort(x.begin(), x.end(), key);
    std::sort(y.begin(), y.end(), key);
    for (std::size_t i = 0; i < x.size(); ++i)
      if (!(x[i] == y[i])) return false;
  }
  return true;
}

bool criterion_oracle(std::string& detail) {
  std::mt19937_64 rng(777);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + static_cast<std::size_t>(rng() % 14);  // 2..15
    const int maxdim = trial % 3;
    const DistanceMatrix m = random_matrix(n, rng);
    std::optional<double> threshold;
    if (trial % 4 == 1) threshold = 0.4 + 1.4 * unif(rng);
    if (!same_diagram(vr_persistence(m, maxdim, threshold),
                      brute_force_persistence(m, maxdim, threshold))) {
      note(detail, "mismatch at trial " + std::to_string(trial) + " (n=" + std::to_string(n) +
                       ", maxdim=" + std::to_string(maxdim) + ")");
      return false;
    }
  }
  note(detail, "200 instances, exact multiset equality");
  return true;
}

// ---- criterion 3: thin-torus closed forms ----------------------------------

bool criterion_closed_forms(std::string& detail) {
  const double R = 1.0, r = 1.0 / 1000.0;
  const TorusQuantities q = torus_quantities(R, r, (R - r) * (R - r));
  const double sys_limit = 2.0 * kPi / (2.0 * kPi + 4.0);
  const double l_limit = 1.0 / (2.0 * kPi * (2.0 * kPi + 4.0));
  note(detail, "ratio_sys " + fmt(q.ratio_sys) + " vs " + fmt(sys_limit));
  note(detail, "ratio_l " + fmt(q.ratio_l) + " vs " + fmt(l_limit));
  note(detail, "quad_error " + fmt(q.quad_error));
  return q.c_is_bottleneck_scale && std::abs(q.ratio_sys - sys_limit) <= 5e-3 * sys_limit &&
         std::abs(q.ratio_l - l_limit) <= 5e-3 * l_limit && q.quad_error <= 1e-8;
}

// ---- criterion 4: curvature-ratio monotonicity -----------------------------

bool criterion_curvature(std::string& detail) {
  const TorusJet jet(1.0, 0.25);
  double worst_closed = 0.0;
  double prev = 1e300;
  bool strictly_decreasing = true;
  for (int k = 0; k < 10; ++k) {
    const double c = 0.01 + k * (0.99 / 9.0);
    const double ratio = curvature_ratio(jet, 0.9, 0.4, {0.0, 1.0}, c);
    worst_closed = std::max(worst_closed, std::abs(ratio - 4.0 / (1.0 + 16.0 * c)));
    if (ratio >= prev) strictly_decreasing = false;
    prev = ratio;
  }
  // The covariant-derivative term in the tube direction vanishes; the finite
  // difference in ii_row_derivative_norm must confirm this.
  double worst_grad = 0.0;
  for (double v : {0.0, 0.7, 1.9, 3.1, 4.6}) {
    worst_grad = std::max(worst_grad, jet.ii_row_derivative_norm(0.9, v, {0.0, 1.0}));
  }
  note(detail, "closed-form residual " + fmt(worst_closed));
  note(detail, "grad-II residual " + fmt(worst_grad));
  return strictly_decreasing && worst_closed <= 1e-6 && worst_grad <= 1e-5;
}

// ---- criterion 5: normalized bottleneck chain ------------------------------

bool criterion_chain(std::string& detail) {
  const auto recs = check_normalized_bottleneck(1.0, 0.25, 20);
  double min_margin = 1e300;
  bool all_pass = recs.size() == 21;
  for (const auto& rec : recs) {
    if (!rec.pass) {
      note(detail, "failed: " + rec.name + " (" + rec.detail + ")");
      all_pass = false;
    }
    min_margin = std::min(min_margin, rec.margin);
  }
  note(detail, std::to_string(recs.size()) + " records, min margin " + fmt(min_margin));
  return all_pass;
}

// ---- criterion 6: thin-torus separation ------------------------------------

FrameField select_frames(const FrameField& field, const std::vector<std::size_t>& idx) {
  FrameField out;
  out.dim_ambient = field.dim_ambient;
  out.dim_intrinsic = field.dim_intrinsic;
  out.oriented = field.oriented;
  out.frames.reserve(idx.size());
  for (std::size_t i : idx) out.frames.push_back(field.frames[i]);
  return out;
}

std::vector<double> persistences_at_least(const std::vector<PersistenceBar>& bars, double floor) {
  std::vector<double> out;
  for (const auto& b : bars) {
    if (bar_is_infinite(b)) continue;
    const double p = b.death - b.birth;
    if (p >= floor) out.push_back(p);
  }
  std::sort(out.rbegin(), out.rend());
  return out;
}

bool criterion_separation(std::string& detail) {
  const TorusSample torus = torus_sample(1.0, 0.1, 2000, 7, TorusMode::random);
  const auto idx = subsample_indices(2000, 800, 7);
  const PointCloud sub = subsample_cloud(torus.cloud, idx);
  const FrameField frames = select_frames(torus.frames, idx);

  const ScaleParams scale = choose_scale(sub);
  const double prominence = 0.25 * scale.diameter;
  note(detail, "c " + fmt(scale.c));
  note(detail, "prominence floor " + fmt(prominence));

  const DistanceMatrix dcm = dc_matrix(sub, frames, scale.c);
  const PersistenceDiagram dc_diag = vr_persistence(dcm, 2, 2.0);
  const auto dc_h1 = persistences_at_least(dc_diag.at(1), prominence);
  const auto dc_h2 = persistences_at_least(dc_diag.at(2), prominence);

  const DistanceMatrix eum = euclidean_matrix(sub);
  const PersistenceDiagram eu_diag = vr_persistence(eum, 2, 1.7);
  const auto eu_h1 = persistences_at_least(eu_diag.at(1), prominence);

  note(detail, "dc H1 prominent " + std::to_string(dc_h1.size()));
  note(detail, "dc H2 prominent " + std::to_string(dc_h2.size()));
  note(detail, "euclid H1 prominent " + std::to_string(eu_h1.size()));
  return dc_h1.size() == 2 && dc_h2.size() >= 1 && eu_h1.size() == 1;
}

// ---- criterion 7: double-gyre reproduction ---------------------------------

bool criterion_gyre(std::string& detail) {
  const Trajectory traj = double_gyre_trajectory(TrajectoryConfig{});
  const std::size_t tau_steps =
      static_cast<std::size_t>(std::llround(5.0 / traj.dt));  // 10 at dt = T/(n-1)
  PointCloud cloud = delay_embed(traj.x, tau_steps, 4);
  cloud.dim_intrinsic = 2;
  note(detail, "embedded n " + std::to_string(cloud.n));

  const std::size_t k = default_k(cloud.n, 2);
  const auto adj = knn(cloud, k);
  const FrameField raw = estimate_frame_field(cloud, adj, 2);
  const OrientationResult orient = propagate_orientation(raw, symmetrize(adj));
  if (!orient.report.consistent) {
    note(detail, "frame field not orientable on the full embedding");
    return false;
  }

  const auto idx = subsample_indices(cloud.n, 1000, 7);
  const PointCloud sub = subsample_cloud(cloud, idx);
  const FrameField frames = select_frames(orient.field, idx);
  const ScaleParams scale = choose_scale(sub);
  note(detail, "c " + fmt(scale.c));

  const DistanceMatrix dcm = dc_matrix(sub, frames, scale.c);
  const PersistenceDiagram dc_diag = vr_persistence(dcm, 2, 0.45);
  const DistanceMatrix eum = euclidean_matrix(sub);
  const PersistenceDiagram eu_diag = vr_persistence(eum, 2);

  const auto dc_h1 = persistences_at_least(dc_diag.at(1), 0.07);
  const auto eu_h1 = persistences_at_least(eu_diag.at(1), 0.07);
  const auto dc_h2 = persistences_at_least(dc_diag.at(2), 0.015);
  note(detail, "dc H1 prominent " + std::to_string(dc_h1.size()));
  note(detail, "euclid H1 prominent " + std::to_string(eu_h1.size()));
  note(detail, "dc H2 count " + std::to_string(dc_h2.size()));
  return dc_h1.size() >= 2 && eu_h1.size() < dc_h1.size() && dc_h2.size() >= 1;
}

// ---- criterion 8: orientation propagation ----------------------------------

bool criterion_orientation(std::string& detail) {
  const TorusSample torus = torus_sample(1.0, 0.25, 2000, 11, TorusMode::random);
  const std::size_t k = default_k(2000, 2);
  const auto adj = knn(torus.cloud, k);
  const FrameField estimated = estimate_frame_field(torus.cloud, adj, 2);
  const OrientationResult res = propagate_orientation(estimated, symmetrize(adj));
  note(detail, "torus violations " + std::to_string(res.report.violations.size()));

  const PointCloud mob = mobius_sample(1.0, 0.3, 1000, 5);
  const auto mob_adj = knn(mob, 10);
  const FrameField mob_frames = estimate_frame_field(mob, mob_adj, 2);
  const OrientationResult mob_res = propagate_orientation(mob_frames, symmetrize(mob_adj));
  note(detail, "mobius violations " + std::to_string(mob_res.report.violations.size()));

  return res.report.consistent && res.report.violations.empty() &&
         !mob_res.report.consistent && mob_res.report.violations.size() >= 1;
}

// ---- criterion 9: stability proxy ------------------------------------------

bool criterion_stability(std::string& detail) {
  const std::vector<double> deltas{0.04, 0.02, 0.01, 0.005, 0.0};
  const auto rows = stability_experiment(1.0, 0.25, 300, 3, deltas, 2);
  if (rows.size() != deltas.size()) {
    note(detail, "unexpected row count");
    return false;
  }
  bool ok = true;
  for (int q = 0; q <= 2; ++q) {
    std::string series = "H" + std::to_string(q) + ":";
    for (std::size_t i = 0; i < rows.size(); ++i) {
      series += " " + fmt(rows[i].bottleneck[q]);
      if (i > 0 && rows[i].bottleneck[q] > rows[i - 1].bottleneck[q] + 1e-6) ok = false;
    }
    if (rows.back().bottleneck[q] != 0.0) ok = false;
    note(detail, series);
  }
  return ok;
}

// ---- criterion 10: tangent-rate slope --------------------------------------

bool criterion_rate(std::string& detail) {
  const std::vector<std::size_t> sizes{500, 1000, 2000, 4000};
  std::vector<double> errors;
  for (std::size_t n : sizes) {
    const TorusSample torus = torus_sample(1.0, 0.25, n, 1, TorusMode::random);
    const auto adj = knn(torus.cloud, default_k(n, 2));
    const FrameField estimated = estimate_frame_field(torus.cloud, adj, 2);
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      total += grassmann_distance(estimated.frames[i], torus.frames.frames[i]);
    errors.push_back(total / static_cast<double>(n));
  }
  const double slope = rate_check(sizes, errors);
  note(detail, "mean errors " + fmt(errors[0]) + " " + fmt(errors[1]) + " " + fmt(errors[2]) +
                   " " + fmt(errors[3]));
  note(detail, "slope " + fmt(slope));
  return slope >= -0.9 && slope <= -0.15;
}

// ---- driver -----------------------------------------------------------------

struct Criterion {
  int id;
  const char* name;
  bool (*fn)(std::string&);
};

}  // namespace

int main() {
  const Criterion criteria[] = {
      {1, "grassmann-kernels", criterion_grassmann},
      {2, "persistence-oracle", criterion_oracle},
      {3, "torus-closed-forms", criterion_closed_forms},
      {4, "curvature-ratio", criterion_curvature},
      {5, "bottleneck-chain", criterion_chain},
      {6, "thin-torus-separation", criterion_separation},
      {7, "double-gyre", criterion_gyre},
      {8, "orientation", criterion_orientation},
      {9, "stability-proxy", criterion_stability},
      {10, "tangent-rate", criterion_rate},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    std::string detail;
    bool ok = false;
    const auto start = std::chrono::steady_clock::now();
    try {
      ok = c.fn(detail);
    } catch (const std::exception& e) {
      note(detail, std::string("exception: ") + e.what());
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] criterion %2d %-24s (%6.1f s)  %s\n", ok ? "PASS" : "FAIL", c.id, c.name,
                seconds, detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
  }
  if (failures) std::printf("%d criterion(s) failed\n", failures);
  return failures;
}
