#include "gpdc.h"

#include <cstring>
#include <string>
#include <vector>

#include "gpdc/checks.hpp"
#include "gpdc/errors.hpp"
#include "gpdc/generators.hpp"
#include "gpdc/metric.hpp"
#include "gpdc/neighbors.hpp"
#include "gpdc/orientation.hpp"
#include "gpdc/persistence.hpp"
#include "gpdc/tangent.hpp"

struct gpdc_cloud {
  gpdc::PointCloud v;
};
struct gpdc_frames {
  gpdc::FrameField v;
};
struct gpdc_matrix {
  gpdc::DistanceMatrix v;
};
struct gpdc_diagram {
  gpdc::PersistenceDiagram v;
};
struct gpdc_series {
  gpdc::Trajectory v;
};
struct gpdc_checks {
  std::vector<gpdc::CheckRecord> v;
};

namespace {

thread_local std::string t_error;

gpdc_status status_of(gpdc::ErrorCode code) {
  switch (code) {
    case gpdc::ErrorCode::parameter:
      return GPDC_ERR_PARAMETER;
    case gpdc::ErrorCode::dimension:
      return GPDC_ERR_DIMENSION;
    case gpdc::ErrorCode::insufficient_points:
      return GPDC_ERR_INSUFFICIENT_POINTS;
    case gpdc::ErrorCode::degenerate_neighborhood:
      return GPDC_ERR_DEGENERATE_NEIGHBORHOOD;
    case gpdc::ErrorCode::degenerate_cloud:
      return GPDC_ERR_DEGENERATE_CLOUD;
    case gpdc::ErrorCode::precondition:
      return GPDC_ERR_PRECONDITION;
    case gpdc::ErrorCode::matrix:
      return GPDC_ERR_MATRIX;
    case gpdc::ErrorCode::size:
      return GPDC_ERR_SIZE;
    case gpdc::ErrorCode::io:
      return GPDC_ERR_IO;
    case gpdc::ErrorCode::parse:
      return GPDC_ERR_PARSE;
    case gpdc::ErrorCode::data:
      return GPDC_ERR_DATA;
    case gpdc::ErrorCode::numerics:
      return GPDC_ERR_NUMERICS;
    case gpdc::ErrorCode::orientation:
      return GPDC_ERR_ORIENTATION;
  }
  return GPDC_ERR_UNKNOWN;
}

template <typename F>
gpdc_status guard(F&& body) {
  try {
    body();
    return GPDC_OK;
  } catch (const gpdc::Error& e) {
    t_error = e.what();
    return status_of(e.code());
  } catch (const std::exception& e) {
    t_error = e.what();
    return GPDC_ERR_UNKNOWN;
  }
}

gpdc_status require(bool ok, const char* message) {
  if (ok) return GPDC_OK;
  t_error = message;
  return GPDC_ERR_PARAMETER;
}

}  // namespace

extern "C" {

const char* gpdc_version(void) { return "1.0.0"; }

const char* gpdc_last_error(void) { return t_error.c_str(); }

/* ---- point clouds ---- */

gpdc_status gpdc_cloud_create(size_t n, size_t dim_ambient, size_t dim_intrinsic,
                              const double* coords, gpdc_cloud** out) {
  if (gpdc_status s = require(coords && out, "cloud_create: null argument")) return s;
  return guard([&] {
    auto handle = new gpdc_cloud{gpdc::PointCloud(n, dim_ambient, dim_intrinsic)};
    std::memcpy(handle->v.coords.data(), coords, sizeof(double) * n * dim_ambient);
    *out = handle;
  });
}

gpdc_status gpdc_cloud_load(const char* path, gpdc_point_format format, gpdc_cloud** out) {
  if (gpdc_status s = require(path && out, "cloud_load: null argument")) return s;
  return guard([&] {
    gpdc::PointFormat f = format == GPDC_POINTS_CSV          ? gpdc::PointFormat::csv
                          : format == GPDC_POINTS_WHITESPACE ? gpdc::PointFormat::whitespace
                                                             : gpdc::PointFormat::off_vertices;
    *out = new gpdc_cloud{gpdc::load_points(path, f)};
  });
}

gpdc_status gpdc_cloud_save_csv(const gpdc_cloud* cloud, const char* path) {
  if (gpdc_status s = require(cloud && path, "cloud_save_csv: null argument")) return s;
  return guard([&] { gpdc::save_points_csv(cloud->v, path); });
}

size_t gpdc_cloud_n(const gpdc_cloud* cloud) { return cloud ? cloud->v.n : 0; }
size_t gpdc_cloud_dim_ambient(const gpdc_cloud* cloud) { return cloud ? cloud->v.dim_ambient : 0; }
size_t gpdc_cloud_dim_intrinsic(const gpdc_cloud* cloud) {
  return cloud ? cloud->v.dim_intrinsic : 0;
}

gpdc_status gpdc_cloud_set_dim_intrinsic(gpdc_cloud* cloud, size_t d) {
  if (gpdc_status s = require(cloud != nullptr, "cloud_set_dim_intrinsic: null cloud")) return s;
  return guard([&] {
    if (d > cloud->v.dim_ambient) throw gpdc::DimensionError("cloud: d exceeds D");
    cloud->v.dim_intrinsic = d;
  });
}

const double* gpdc_cloud_coords(const gpdc_cloud* cloud) {
  return cloud ? cloud->v.coords.data() : nullptr;
}

gpdc_status gpdc_cloud_select(const gpdc_cloud* cloud, const size_t* indices, size_t m,
                              gpdc_cloud** out) {
  if (gpdc_status s = require(cloud && indices && out, "cloud_select: null argument")) return s;
  return guard([&] {
    std::vector<std::size_t> idx(indices, indices + m);
    *out = new gpdc_cloud{gpdc::subsample_cloud(cloud->v, idx)};
  });
}

void gpdc_cloud_free(gpdc_cloud* cloud) { delete cloud; }

gpdc_status gpdc_subsample_indices(size_t n, size_t m, uint64_t seed, size_t* out) {
  if (gpdc_status s = require(out != nullptr, "subsample_indices: null output")) return s;
  return guard([&] {
    const auto idx = gpdc::subsample_indices(n, m, seed);
    std::memcpy(out, idx.data(), sizeof(size_t) * idx.size());
  });
}

/* ---- generators ---- */

gpdc_status gpdc_gen_torus(double R, double r, size_t n, uint64_t seed, gpdc_torus_mode mode,
                           gpdc_cloud** cloud_out, gpdc_frames** frames_out) {
  if (gpdc_status s = require(cloud_out != nullptr, "gen_torus: null output")) return s;
  return guard([&] {
    auto sample = gpdc::torus_sample(
        R, r, n, seed, mode == GPDC_TORUS_GRID ? gpdc::TorusMode::grid : gpdc::TorusMode::random);
    *cloud_out = new gpdc_cloud{std::move(sample.cloud)};
    if (frames_out) *frames_out = new gpdc_frames{std::move(sample.frames)};
  });
}

gpdc_status gpdc_gen_ellipse(double a, double b, size_t n, gpdc_cloud** cloud_out,
                             gpdc_frames** frames_out) {
  if (gpdc_status s = require(cloud_out != nullptr, "gen_ellipse: null output")) return s;
  return guard([&] {
    auto sample = gpdc::ellipse_sample(a, b, n);
    *cloud_out = new gpdc_cloud{std::move(sample.cloud)};
    if (frames_out) *frames_out = new gpdc_frames{std::move(sample.frames)};
  });
}

gpdc_status gpdc_gen_mobius(double R, double w, size_t n, uint64_t seed, gpdc_cloud** cloud_out) {
  if (gpdc_status s = require(cloud_out != nullptr, "gen_mobius: null output")) return s;
  return guard([&] { *cloud_out = new gpdc_cloud{gpdc::mobius_sample(R, w, n, seed)}; });
}

gpdc_status gpdc_gen_double_gyre(double C, double eta, double omega, double x0, double y0,
                                 double T, size_t n, double h, gpdc_series** out) {
  if (gpdc_status s = require(out != nullptr, "gen_double_gyre: null output")) return s;
  return guard([&] {
    gpdc::TrajectoryConfig cfg;
    cfg.C = C;
    cfg.eta = eta;
    cfg.omega = omega;
    cfg.x0 = x0;
    cfg.y0 = y0;
    cfg.T = T;
    cfg.n = n;
    cfg.h = h;
    *out = new gpdc_series{gpdc::double_gyre_trajectory(cfg)};
  });
}

size_t gpdc_series_len(const gpdc_series* s) { return s ? s->v.t.size() : 0; }

const double* gpdc_series_values(const gpdc_series* s, int which) {
  if (!s) return nullptr;
  switch (which) {
    case 0:
      return s->v.t.data();
    case 1:
      return s->v.x.data();
    case 2:
      return s->v.y.data();
    default:
      return nullptr;
  }
}

double gpdc_series_dt(const gpdc_series* s) { return s ? s->v.dt : 0.0; }
double gpdc_series_box_excursion(const gpdc_series* s) { return s ? s->v.max_box_excursion : 0.0; }
void gpdc_series_free(gpdc_series* s) { delete s; }

gpdc_status gpdc_delay_embed(const double* series, size_t len, size_t tau_steps, size_t m,
                             gpdc_cloud** out) {
  if (gpdc_status s = require(series && out, "delay_embed: null argument")) return s;
  return guard([&] {
    std::vector<double> data(series, series + len);
    *out = new gpdc_cloud{gpdc::delay_embed(data, tau_steps, m)};
  });
}

/* ---- tangent frames and orientation ---- */

gpdc_status gpdc_frames_estimate(const gpdc_cloud* cloud, size_t d, size_t k, gpdc_frames** out) {
  if (gpdc_status s = require(cloud && out, "frames_estimate: null argument")) return s;
  return guard([&] {
    const std::size_t kk = k == 0 ? gpdc::default_k(cloud->v.n, d) : k;
    const auto adj = gpdc::knn(cloud->v, kk);
    *out = new gpdc_frames{gpdc::estimate_frame_field(cloud->v, adj, d)};
  });
}

size_t gpdc_frames_n(const gpdc_frames* f) { return f ? f->v.frames.size() : 0; }
size_t gpdc_frames_dim_ambient(const gpdc_frames* f) { return f ? f->v.dim_ambient : 0; }
size_t gpdc_frames_dim_intrinsic(const gpdc_frames* f) { return f ? f->v.dim_intrinsic : 0; }
int gpdc_frames_oriented(const gpdc_frames* f) { return f && f->v.oriented ? 1 : 0; }

gpdc_status gpdc_frames_get(const gpdc_frames* f, size_t i, double* out) {
  if (gpdc_status s = require(f && out, "frames_get: null argument")) return s;
  return guard([&] {
    if (i >= f->v.frames.size()) throw gpdc::ParameterError("frames_get: index out of range");
    const gpdc::Mat& m = f->v.frames[i];
    std::size_t pos = 0;
    for (std::size_t col = 0; col < m.cols(); ++col)
      for (std::size_t row = 0; row < m.rows(); ++row) out[pos++] = m(row, col);
  });
}

gpdc_status gpdc_frames_select(const gpdc_frames* f, const size_t* indices, size_t m,
                               gpdc_frames** out) {
  if (gpdc_status s = require(f && indices && out, "frames_select: null argument")) return s;
  return guard([&] {
    gpdc::FrameField sel;
    sel.dim_ambient = f->v.dim_ambient;
    sel.dim_intrinsic = f->v.dim_intrinsic;
    sel.oriented = f->v.oriented;
    sel.frames.reserve(m);
    for (size_t i = 0; i < m; ++i) {
      if (indices[i] >= f->v.frames.size())
        throw gpdc::ParameterError("frames_select: index out of range");
      sel.frames.push_back(f->v.frames[indices[i]]);
    }
    *out = new gpdc_frames{std::move(sel)};
  });
}

gpdc_status gpdc_frames_save(const gpdc_frames* f, const char* path) {
  if (gpdc_status s = require(f && path, "frames_save: null argument")) return s;
  return guard([&] { gpdc::save_frames(f->v, path); });
}

gpdc_status gpdc_frames_load(const char* path, gpdc_frames** out) {
  if (gpdc_status s = require(path && out, "frames_load: null argument")) return s;
  return guard([&] { *out = new gpdc_frames{gpdc::load_frames(path)}; });
}

void gpdc_frames_free(gpdc_frames* f) { delete f; }

gpdc_status gpdc_orient(const gpdc_frames* frames, const gpdc_cloud* cloud, size_t k, double tau,
                        gpdc_frames** oriented_out, int* consistent, size_t* violations,
                        char** report_out) {
  if (gpdc_status s = require(frames && cloud && oriented_out, "orient: null argument")) return s;
  return guard([&] {
    const std::size_t kk = k == 0 ? gpdc::default_k(cloud->v.n, frames->v.dim_intrinsic) : k;
    const auto edges = gpdc::symmetrize(gpdc::knn(cloud->v, kk));
    auto result = gpdc::propagate_orientation(
        frames->v, edges, &cloud->v,
        tau > 0.0 ? std::optional<double>(tau) : std::nullopt);
    if (consistent) *consistent = result.report.consistent ? 1 : 0;
    if (violations) *violations = result.report.violations.size();
    if (report_out) {
      const std::string text = gpdc::render_report(result.report);
      char* buf = static_cast<char*>(std::malloc(text.size() + 1));
      if (!buf) throw std::bad_alloc();
      std::memcpy(buf, text.c_str(), text.size() + 1);
      *report_out = buf;
    }
    *oriented_out = new gpdc_frames{std::move(result.field)};
  });
}

void gpdc_string_free(char* s) { std::free(s); }

/* ---- metric ---- */

gpdc_status gpdc_choose_scale(const gpdc_cloud* cloud, double* c_out, double* diameter_out) {
  if (gpdc_status s = require(cloud && c_out, "choose_scale: null argument")) return s;
  return guard([&] {
    const gpdc::ScaleParams p = gpdc::choose_scale(cloud->v);
    *c_out = p.c;
    if (diameter_out) *diameter_out = p.diameter;
  });
}

gpdc_status gpdc_matrix_dc(const gpdc_cloud* cloud, const gpdc_frames* frames, double c,
                           gpdc_matrix** out) {
  if (gpdc_status s = require(cloud && frames && out, "matrix_dc: null argument")) return s;
  return guard([&] { *out = new gpdc_matrix{gpdc::dc_matrix(cloud->v, frames->v, c)}; });
}

gpdc_status gpdc_matrix_euclidean(const gpdc_cloud* cloud, gpdc_matrix** out) {
  if (gpdc_status s = require(cloud && out, "matrix_euclidean: null argument")) return s;
  return guard([&] { *out = new gpdc_matrix{gpdc::euclidean_matrix(cloud->v)}; });
}

size_t gpdc_matrix_n(const gpdc_matrix* m) { return m ? m->v.n : 0; }

gpdc_metric_tag gpdc_matrix_metric(const gpdc_matrix* m) {
  return m && m->v.metric == gpdc::MetricTag::grassmann_dc ? GPDC_METRIC_DC
                                                           : GPDC_METRIC_EUCLIDEAN;
}

double gpdc_matrix_c(const gpdc_matrix* m) { return m ? m->v.c : 0.0; }

size_t gpdc_matrix_degenerate_pairs(const gpdc_matrix* m) {
  return m ? m->v.degenerate_pairs : 0;
}

gpdc_status gpdc_matrix_get(const gpdc_matrix* m, size_t i, size_t j, double* out) {
  if (gpdc_status s = require(m && out, "matrix_get: null argument")) return s;
  return guard([&] {
    if (i >= m->v.n || j >= m->v.n) throw gpdc::ParameterError("matrix_get: index out of range");
    *out = m->v.at(i, j);
  });
}

gpdc_status gpdc_matrix_enclosing_radius(const gpdc_matrix* m, double* out) {
  if (gpdc_status s = require(m && out, "matrix_enclosing_radius: null argument")) return s;
  return guard([&] { *out = gpdc::enclosing_radius(m->v); });
}

gpdc_status gpdc_matrix_save(const gpdc_matrix* m, const char* path) {
  if (gpdc_status s = require(m && path, "matrix_save: null argument")) return s;
  return guard([&] { gpdc::save_gpdm(m->v, path); });
}

gpdc_status gpdc_matrix_load(const char* path, gpdc_matrix** out) {
  if (gpdc_status s = require(path && out, "matrix_load: null argument")) return s;
  return guard([&] { *out = new gpdc_matrix{gpdc::load_gpdm(path)}; });
}

gpdc_status gpdc_matrix_save_csv(const gpdc_matrix* m, const char* path) {
  if (gpdc_status s = require(m && path, "matrix_save_csv: null argument")) return s;
  return guard([&] { gpdc::save_matrix_csv(m->v, path); });
}

void gpdc_matrix_free(gpdc_matrix* m) { delete m; }

/* ---- persistence ---- */

gpdc_status gpdc_ph(const gpdc_matrix* m, int maxdim, double threshold, gpdc_diagram** out) {
  if (gpdc_status s = require(m && out, "ph: null argument")) return s;
  return guard([&] {
    std::optional<double> thr;
    if (threshold >= 0.0) thr = threshold;
    *out = new gpdc_diagram{gpdc::vr_persistence(m->v, maxdim, thr)};
  });
}

int gpdc_diagram_maxdim(const gpdc_diagram* d) { return d ? d->v.maxdim : -1; }
double gpdc_diagram_threshold(const gpdc_diagram* d) { return d ? d->v.threshold : 0.0; }

size_t gpdc_diagram_count(const gpdc_diagram* d, int degree) {
  if (!d || degree < 0 || static_cast<size_t>(degree) >= d->v.degrees.size()) return 0;
  return d->v.degrees[degree].size();
}

gpdc_status gpdc_diagram_bars(const gpdc_diagram* d, int degree, double* births,
                              double* deaths) {
  if (gpdc_status s = require(d && births && deaths, "diagram_bars: null argument")) return s;
  return guard([&] {
    if (degree < 0 || static_cast<size_t>(degree) >= d->v.degrees.size())
      throw gpdc::ParameterError("diagram_bars: degree out of range");
    const auto& bars = d->v.degrees[degree];
    for (std::size_t i = 0; i < bars.size(); ++i) {
      births[i] = bars[i].birth;
      deaths[i] = bars[i].death;
    }
  });
}

gpdc_status gpdc_diagram_save_csv(const gpdc_diagram* d, const char* path) {
  if (gpdc_status s = require(d && path, "diagram_save_csv: null argument")) return s;
  return guard([&] { gpdc::save_diagram_csv(d->v, path); });
}

gpdc_status gpdc_diagram_load_csv(const char* path, gpdc_diagram** out) {
  if (gpdc_status s = require(path && out, "diagram_load_csv: null argument")) return s;
  return guard([&] { *out = new gpdc_diagram{gpdc::load_diagram_csv(path)}; });
}

gpdc_status gpdc_diagram_save_svg(const gpdc_diagram* d, const char* path,
                                  const char* subtitle) {
  if (gpdc_status s = require(d && path, "diagram_save_svg: null argument")) return s;
  return guard([&] { gpdc::save_diagram_svg(d->v, path, subtitle ? subtitle : ""); });
}

gpdc_status gpdc_bottleneck(const gpdc_diagram* a, const gpdc_diagram* b, int degree,
                            double* out) {
  if (gpdc_status s = require(a && b && out, "bottleneck: null argument")) return s;
  return guard([&] {
    if (degree < 0) throw gpdc::ParameterError("bottleneck: degree must be nonnegative");
    static const std::vector<gpdc::PersistenceBar> empty;
    const auto& bars_a =
        static_cast<size_t>(degree) < a->v.degrees.size() ? a->v.degrees[degree] : empty;
    const auto& bars_b =
        static_cast<size_t>(degree) < b->v.degrees.size() ? b->v.degrees[degree] : empty;
    *out = gpdc::bottleneck_distance(bars_a, bars_b);
  });
}

void gpdc_diagram_free(gpdc_diagram* d) { delete d; }

/* ---- theory checks ---- */

gpdc_status gpdc_run_checks(const char* filter, gpdc_checks** out) {
  if (gpdc_status s = require(out != nullptr, "run_checks: null output")) return s;
  return guard([&] { *out = new gpdc_checks{gpdc::run_all_checks(filter ? filter : "")}; });
}

size_t gpdc_checks_count(const gpdc_checks* c) { return c ? c->v.size() : 0; }

gpdc_status gpdc_checks_get(const gpdc_checks* c, size_t i, const char** name,
                            const char** detail, double* lhs, double* rhs, double* margin,
                            int* pass, int* skipped, const char** note) {
  if (gpdc_status s = require(c != nullptr, "checks_get: null handle")) return s;
  return guard([&] {
    if (i >= c->v.size()) throw gpdc::ParameterError("checks_get: index out of range");
    const gpdc::CheckRecord& rec = c->v[i];
    if (name) *name = rec.name.c_str();
    if (detail) *detail = rec.detail.c_str();
    if (lhs) *lhs = rec.lhs;
    if (rhs) *rhs = rec.rhs;
    if (margin) *margin = rec.margin;
    if (pass) *pass = rec.pass ? 1 : 0;
    if (skipped) *skipped = rec.skipped ? 1 : 0;
    if (note) *note = rec.note.c_str();
  });
}

void gpdc_checks_free(gpdc_checks* c) { delete c; }

gpdc_status gpdc_torus_quantities(double R, double r, double c, double* out7) {
  if (gpdc_status s = require(out7 != nullptr, "torus_quantities: null output")) return s;
  return guard([&] {
    const gpdc::TorusQuantities q = gpdc::torus_quantities(R, r, c);
    out7[0] = q.vol_c;
    out7[1] = q.vol_c_bound;
    out7[2] = q.l_c;
    out7[3] = q.sys_lower;
    out7[4] = q.ratio_sys;
    out7[5] = q.ratio_l;
    out7[6] = q.quad_error;
  });
}

gpdc_status gpdc_curvature_ratio(double R, double r, double u, double v, double dir_u,
                                 double dir_v, double c, double* out) {
  if (gpdc_status s = require(out != nullptr, "curvature_ratio: null output")) return s;
  return guard([&] {
    const gpdc::TorusJet jet(R, r);
    *out = gpdc::curvature_ratio(jet, u, v, {dir_u, dir_v}, c);
  });
}

gpdc_status gpdc_homotopy_radius(double c, double ii_c_norm, double l_prime_c, double* out6) {
  if (gpdc_status s = require(out6 != nullptr, "homotopy_radius: null output")) return s;
  return guard([&] {
    const gpdc::HomotopyRadius hr = gpdc::homotopy_radius_bound(c, ii_c_norm, l_prime_c);
    out6[0] = hr.statement_first_term;
    out6[1] = hr.proof_first_term;
    out6[2] = hr.second_term;
    out6[3] = hr.statement_min;
    out6[4] = hr.proof_min;
    out6[5] = hr.discrepancy;
  });
}

gpdc_status gpdc_stability(double R, double r, size_t n, uint64_t seed, const double* deltas,
                           size_t ndeltas, int maxdim, double* out) {
  if (gpdc_status s = require(deltas && out, "stability: null argument")) return s;
  return guard([&] {
    std::vector<double> ds(deltas, deltas + ndeltas);
    const auto rows = gpdc::stability_experiment(R, r, n, seed, ds, maxdim);
    std::size_t pos = 0;
    for (const auto& row : rows)
      for (double b : row.bottleneck) out[pos++] = b;
  });
}

}  // extern "C"
