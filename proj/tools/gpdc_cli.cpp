#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gpdc.h"

using ordered_json = nlohmann::ordered_json;

namespace {

constexpr double kPi = 3.14159265358979323846;

/* Exit codes: 0 success, 2 bad flags or unusable input files, 3 numeric
 * failure, 4 inconsistency (orientation or violated precondition). */
int exit_code_for(gpdc_status s) {
  switch (s) {
    case GPDC_OK:
      return 0;
    case GPDC_ERR_PARAMETER:
    case GPDC_ERR_DIMENSION:
    case GPDC_ERR_INSUFFICIENT_POINTS:
    case GPDC_ERR_SIZE:
    case GPDC_ERR_IO:
    case GPDC_ERR_PARSE:
    case GPDC_ERR_DATA:
      return 2;
    case GPDC_ERR_PRECONDITION:
    case GPDC_ERR_ORIENTATION:
      return 4;
    default:
      return 3;
  }
}

[[noreturn]] void fail(const char* where, gpdc_status s) {
  std::fprintf(stderr, "gpdc %s: %s\n", where, gpdc_last_error());
  std::exit(exit_code_for(s));
}

void check(const char* where, gpdc_status s) {
  if (s != GPDC_OK) fail(where, s);
}

struct CloudDeleter {
  void operator()(gpdc_cloud* p) const { gpdc_cloud_free(p); }
};
struct FramesDeleter {
  void operator()(gpdc_frames* p) const { gpdc_frames_free(p); }
};
struct MatrixDeleter {
  void operator()(gpdc_matrix* p) const { gpdc_matrix_free(p); }
};
struct DiagramDeleter {
  void operator()(gpdc_diagram* p) const { gpdc_diagram_free(p); }
};
struct SeriesDeleter {
  void operator()(gpdc_series* p) const { gpdc_series_free(p); }
};
struct ChecksDeleter {
  void operator()(gpdc_checks* p) const { gpdc_checks_free(p); }
};

using CloudPtr = std::unique_ptr<gpdc_cloud, CloudDeleter>;
using FramesPtr = std::unique_ptr<gpdc_frames, FramesDeleter>;
using MatrixPtr = std::unique_ptr<gpdc_matrix, MatrixDeleter>;
using DiagramPtr = std::unique_ptr<gpdc_diagram, DiagramDeleter>;
using SeriesPtr = std::unique_ptr<gpdc_series, SeriesDeleter>;
using ChecksPtr = std::unique_ptr<gpdc_checks, ChecksDeleter>;

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

gpdc_point_format parse_format(const std::string& name) {
  if (name == "csv") return GPDC_POINTS_CSV;
  if (name == "whitespace") return GPDC_POINTS_WHITESPACE;
  if (name == "off") return GPDC_POINTS_OFF;
  std::fprintf(stderr, "gpdc: unknown point format '%s'\n", name.c_str());
  std::exit(2);
}

CloudPtr load_cloud(const std::string& path, const std::string& format, std::size_t d) {
  gpdc_cloud* raw = nullptr;
  check("load points", gpdc_cloud_load(path.c_str(), parse_format(format), &raw));
  CloudPtr cloud(raw);
  if (d > 0) check("set intrinsic dim", gpdc_cloud_set_dim_intrinsic(cloud.get(), d));
  return cloud;
}

void write_sidecar(const std::string& out_path, const ordered_json& meta) {
  const std::string path = out_path + ".meta.jsonl";
  std::ofstream f(path, std::ios::binary);
  if (!f) {
    std::fprintf(stderr, "gpdc: cannot write %s\n", path.c_str());
    std::exit(2);
  }
  f << meta.dump() << "\n";
}

/* Resolves "auto" to a negative sentinel, otherwise parses a nonnegative number.
   Negative input is rejected here so it can never collide with the sentinel. */
double parse_auto(const std::string& text, const char* flag) {
  if (text == "auto") return -1.0;
  char* end = nullptr;
  double v = std::strtod(text.c_str(), &end);
  if (end == text.c_str() || *end != '\0' || !std::isfinite(v) || v < 0.0) {
    std::fprintf(stderr, "gpdc: %s expects 'auto' or a nonnegative number, got '%s'\n", flag,
                 text.c_str());
    std::exit(2);
  }
  return v;
}

std::vector<std::size_t> subsample(std::size_t n, std::size_t m, std::uint64_t seed) {
  std::vector<std::size_t> idx(m);
  check("subsample", gpdc_subsample_indices(n, m, seed, idx.data()));
  return idx;
}

/* ---- gen ---- */

struct TorusArgs {
  double R = 1.0, r = 0.25;
  std::size_t n = 0;
  std::uint64_t seed = 0;
  std::string mode = "random", out, frames_out;
};

int run_gen_torus(const TorusArgs& a) {
  gpdc_torus_mode mode;
  if (a.mode == "grid") {
    mode = GPDC_TORUS_GRID;
  } else if (a.mode == "random") {
    mode = GPDC_TORUS_RANDOM;
  } else {
    std::fprintf(stderr, "gpdc: torus mode must be grid or random\n");
    return 2;
  }
  gpdc_cloud* cloud_raw = nullptr;
  gpdc_frames* frames_raw = nullptr;
  check("gen torus", gpdc_gen_torus(a.R, a.r, a.n, a.seed, mode, &cloud_raw,
                                    a.frames_out.empty() ? nullptr : &frames_raw));
  CloudPtr cloud(cloud_raw);
  FramesPtr frames(frames_raw);
  check("write points", gpdc_cloud_save_csv(cloud.get(), a.out.c_str()));
  if (frames) check("write frames", gpdc_frames_save(frames.get(), a.frames_out.c_str()));
  write_sidecar(a.out, ordered_json{{"generator", "torus"},
                                    {"R", a.R},
                                    {"r", a.r},
                                    {"n", a.n},
                                    {"seed", a.seed},
                                    {"mode", a.mode},
                                    {"dim_ambient", 3},
                                    {"dim_intrinsic", 2}});
  return 0;
}

struct EllipseArgs {
  double a = 2.0, b = 1.0;
  std::size_t n = 0;
  std::string out, frames_out;
};

int run_gen_ellipse(const EllipseArgs& a) {
  gpdc_cloud* cloud_raw = nullptr;
  gpdc_frames* frames_raw = nullptr;
  check("gen ellipse", gpdc_gen_ellipse(a.a, a.b, a.n, &cloud_raw,
                                        a.frames_out.empty() ? nullptr : &frames_raw));
  CloudPtr cloud(cloud_raw);
  FramesPtr frames(frames_raw);
  check("write points", gpdc_cloud_save_csv(cloud.get(), a.out.c_str()));
  if (frames) check("write frames", gpdc_frames_save(frames.get(), a.frames_out.c_str()));
  write_sidecar(a.out, ordered_json{{"generator", "ellipse"},
                                    {"a", a.a},
                                    {"b", a.b},
                                    {"n", a.n},
                                    {"dim_ambient", 2},
                                    {"dim_intrinsic", 1}});
  return 0;
}

struct MobiusArgs {
  double R = 1.0, w = 0.3;
  std::size_t n = 0;
  std::uint64_t seed = 0;
  std::string out;
};

int run_gen_mobius(const MobiusArgs& a) {
  gpdc_cloud* cloud_raw = nullptr;
  check("gen mobius", gpdc_gen_mobius(a.R, a.w, a.n, a.seed, &cloud_raw));
  CloudPtr cloud(cloud_raw);
  check("write points", gpdc_cloud_save_csv(cloud.get(), a.out.c_str()));
  write_sidecar(a.out, ordered_json{{"generator", "mobius"},
                                    {"R", a.R},
                                    {"w", a.w},
                                    {"n", a.n},
                                    {"seed", a.seed},
                                    {"dim_ambient", 3},
                                    {"dim_intrinsic", 2}});
  return 0;
}

struct GyreArgs {
  double C = 0.1, eta = 0.1, omega = kPi / 5.0, x0 = 0.5, y0 = 0.625, T = 10000.0, h = 0.01;
  std::size_t n = 20000;
  std::string out;
};

int run_gen_doublegyre(const GyreArgs& a) {
  gpdc_series* raw = nullptr;
  check("gen doublegyre",
        gpdc_gen_double_gyre(a.C, a.eta, a.omega, a.x0, a.y0, a.T, a.n, a.h, &raw));
  SeriesPtr series(raw);
  const std::size_t len = gpdc_series_len(series.get());
  const double* t = gpdc_series_values(series.get(), 0);
  const double* x = gpdc_series_values(series.get(), 1);
  const double* y = gpdc_series_values(series.get(), 2);
  std::ofstream f(a.out, std::ios::binary);
  if (!f) {
    std::fprintf(stderr, "gpdc: cannot write %s\n", a.out.c_str());
    return 2;
  }
  for (std::size_t i = 0; i < len; ++i)
    f << fmt17(t[i]) << "," << fmt17(x[i]) << "," << fmt17(y[i]) << "\n";
  write_sidecar(a.out, ordered_json{{"generator", "doublegyre"},
                                    {"columns", {"t", "x", "y"}},
                                    {"C", a.C},
                                    {"eta", a.eta},
                                    {"omega", a.omega},
                                    {"x0", a.x0},
                                    {"y0", a.y0},
                                    {"T", a.T},
                                    {"n", a.n},
                                    {"h", a.h},
                                    {"dt", gpdc_series_dt(series.get())},
                                    {"box_excursion", gpdc_series_box_excursion(series.get())}});
  return 0;
}

struct DelayArgs {
  std::string series, out;
  std::size_t column = 1;
  double tau = 5.0;
  std::size_t tau_steps = 0;  // 0 derives from tau and the series spacing
  std::size_t m = 4;
  std::size_t d = 2;
};

int run_gen_delay(const DelayArgs& a) {
  CloudPtr table = load_cloud(a.series, "csv", 0);
  const std::size_t len = gpdc_cloud_n(table.get());
  const std::size_t cols = gpdc_cloud_dim_ambient(table.get());
  if (a.column >= cols) {
    std::fprintf(stderr, "gpdc: series has %zu columns, --column %zu out of range\n", cols,
                 a.column);
    return 2;
  }
  const double* coords = gpdc_cloud_coords(table.get());
  std::vector<double> values(len);
  for (std::size_t i = 0; i < len; ++i) values[i] = coords[i * cols + a.column];

  std::size_t steps = a.tau_steps;
  double spacing = 0.0;
  if (steps == 0) {
    if (cols < 2 || len < 2) {
      std::fprintf(stderr,
                   "gpdc: cannot derive --tau-steps, series needs a leading time column; "
                   "pass --tau-steps explicitly\n");
      return 2;
    }
    spacing = coords[cols] - coords[0];
    if (!(spacing > 0.0)) {
      std::fprintf(stderr, "gpdc: series time column is not increasing\n");
      return 2;
    }
    steps = static_cast<std::size_t>(std::llround(a.tau / spacing));
    if (steps == 0) {
      std::fprintf(stderr, "gpdc: tau %g is below the series spacing %g\n", a.tau, spacing);
      return 2;
    }
  }

  gpdc_cloud* raw = nullptr;
  check("delay embed", gpdc_delay_embed(values.data(), len, steps, a.m, &raw));
  CloudPtr cloud(raw);
  if (a.d > 0) check("set intrinsic dim", gpdc_cloud_set_dim_intrinsic(cloud.get(), a.d));
  check("write points", gpdc_cloud_save_csv(cloud.get(), a.out.c_str()));
  write_sidecar(a.out, ordered_json{{"generator", "delay"},
                                    {"series", a.series},
                                    {"column", a.column},
                                    {"tau", a.tau},
                                    {"series_spacing", spacing},
                                    {"tau_steps", steps},
                                    {"m", a.m},
                                    {"n", gpdc_cloud_n(cloud.get())},
                                    {"dim_intrinsic", a.d}});
  return 0;
}

/* ---- frames / orient ---- */

struct FramesArgs {
  std::string points, format = "csv", out;
  std::size_t d = 0, k = 0;
};

int run_frames(const FramesArgs& a) {
  CloudPtr cloud = load_cloud(a.points, a.format, a.d);
  gpdc_frames* raw = nullptr;
  check("estimate frames", gpdc_frames_estimate(cloud.get(), a.d, a.k, &raw));
  FramesPtr frames(raw);
  check("write frames", gpdc_frames_save(frames.get(), a.out.c_str()));
  return 0;
}

struct OrientArgs {
  std::string points, format = "csv", frames, out, report;
  std::size_t k = 0;
  double tau = 0.0;
};

int run_orient(const OrientArgs& a) {
  CloudPtr cloud = load_cloud(a.points, a.format, 0);
  gpdc_frames* in_raw = nullptr;
  check("load frames", gpdc_frames_load(a.frames.c_str(), &in_raw));
  FramesPtr input(in_raw);

  gpdc_frames* out_raw = nullptr;
  int consistent = 0;
  size_t violations = 0;
  char* report_text = nullptr;
  check("orient", gpdc_orient(input.get(), cloud.get(), a.k, a.tau, &out_raw, &consistent,
                              &violations, a.report.empty() ? nullptr : &report_text));
  FramesPtr oriented(out_raw);

  if (report_text) {
    std::ofstream f(a.report, std::ios::binary);
    if (!f) {
      std::fprintf(stderr, "gpdc: cannot write %s\n", a.report.c_str());
      gpdc_string_free(report_text);
      return 2;
    }
    f << report_text;
    gpdc_string_free(report_text);
  }
  if (!consistent) {
    std::fprintf(stderr, "gpdc orient: field is not consistently orientable (%zu violating edges)\n",
                 violations);
    return 4;
  }
  check("write frames", gpdc_frames_save(oriented.get(), a.out.c_str()));
  return 0;
}

/* ---- distmat ---- */

struct DistmatArgs {
  std::string points, format = "csv", metric = "dc", frames, c_text = "auto";
  std::string frames_on = "full", out, csv_out;
  std::size_t d = 0, sub = 0, k = 0;
  std::uint64_t seed = 0;
};

int run_distmat(const DistmatArgs& a) {
  if (a.metric != "dc" && a.metric != "euclidean") {
    std::fprintf(stderr, "gpdc: --metric must be dc or euclidean\n");
    return 2;
  }
  if (a.frames_on != "full" && a.frames_on != "subsample") {
    std::fprintf(stderr, "gpdc: --frames-on must be full or subsample\n");
    return 2;
  }
  const bool want_dc = a.metric == "dc";
  if (want_dc && a.frames.empty() && a.frames_on == "full") {
    std::fprintf(stderr, "gpdc: --metric dc needs --frames (or --frames-on subsample)\n");
    return 2;
  }

  CloudPtr cloud = load_cloud(a.points, a.format, a.d);
  const std::size_t n = gpdc_cloud_n(cloud.get());

  CloudPtr subset;
  FramesPtr frames;
  std::vector<std::size_t> idx;
  if (a.sub > 0 && a.sub < n) {
    idx = subsample(n, a.sub, a.seed);
    gpdc_cloud* sel = nullptr;
    check("subsample points", gpdc_cloud_select(cloud.get(), idx.data(), idx.size(), &sel));
    subset.reset(sel);
  }
  const gpdc_cloud* active = subset ? subset.get() : cloud.get();

  if (want_dc) {
    if (a.frames_on == "subsample") {
      if (gpdc_cloud_dim_intrinsic(active) == 0) {
        std::fprintf(stderr, "gpdc: --frames-on subsample needs --d\n");
        return 2;
      }
      // estimate and orient on the filtration points themselves
      gpdc_frames* est = nullptr;
      check("estimate frames", gpdc_frames_estimate(active, gpdc_cloud_dim_intrinsic(active),
                                                    a.k, &est));
      FramesPtr unoriented(est);
      gpdc_frames* oriented = nullptr;
      int consistent = 0;
      size_t violations = 0;
      check("orient", gpdc_orient(unoriented.get(), active, a.k, 0.0, &oriented, &consistent,
                                  &violations, nullptr));
      frames.reset(oriented);
      if (!consistent) {
        std::fprintf(stderr,
                     "gpdc distmat: frames on the subsample are not orientable "
                     "(%zu violating edges)\n",
                     violations);
        return 4;
      }
    } else {
      gpdc_frames* loaded = nullptr;
      check("load frames", gpdc_frames_load(a.frames.c_str(), &loaded));
      frames.reset(loaded);
      if (gpdc_frames_n(frames.get()) != n) {
        std::fprintf(stderr, "gpdc: frame file has %zu frames for %zu points\n",
                     gpdc_frames_n(frames.get()), n);
        return 2;
      }
      if (!idx.empty()) {
        gpdc_frames* sel = nullptr;
        check("subsample frames",
              gpdc_frames_select(frames.get(), idx.data(), idx.size(), &sel));
        frames.reset(sel);
      }
      const std::size_t frame_d = gpdc_frames_dim_intrinsic(frames.get());
      if (gpdc_cloud_dim_intrinsic(active) == 0) {
        gpdc_cloud* owner = subset ? subset.get() : cloud.get();
        check("set intrinsic dimension", gpdc_cloud_set_dim_intrinsic(owner, frame_d));
      } else if (gpdc_cloud_dim_intrinsic(active) != frame_d) {
        std::fprintf(stderr, "gpdc: --d %zu disagrees with the frame file (d = %zu)\n",
                     gpdc_cloud_dim_intrinsic(active), frame_d);
        return 2;
      }
    }
  }

  double c = parse_auto(a.c_text, "--c");
  if (want_dc && c < 0.0) {
    double diameter = 0.0;
    check("choose scale", gpdc_choose_scale(active, &c, &diameter));
  }

  gpdc_matrix* raw = nullptr;
  if (want_dc) {
    check("distance matrix", gpdc_matrix_dc(active, frames.get(), c, &raw));
  } else {
    check("distance matrix", gpdc_matrix_euclidean(active, &raw));
  }
  MatrixPtr matrix(raw);
  check("write matrix", gpdc_matrix_save(matrix.get(), a.out.c_str()));
  if (!a.csv_out.empty())
    check("write matrix csv", gpdc_matrix_save_csv(matrix.get(), a.csv_out.c_str()));

  ordered_json meta{{"points", a.points},
                    {"metric", a.metric},
                    {"n", gpdc_matrix_n(matrix.get())},
                    {"subsample", a.sub},
                    {"seed", a.seed}};
  if (want_dc) {
    meta["c"] = gpdc_matrix_c(matrix.get());
    meta["frames_on"] = a.frames_on;
    meta["degenerate_pairs"] = gpdc_matrix_degenerate_pairs(matrix.get());
  }
  write_sidecar(a.out, meta);
  return 0;
}

/* ---- ph / compare / checks ---- */

struct PhArgs {
  std::string matrix, threshold_text = "auto", out, svg, subtitle;
  int maxdim = 1;
};

int run_ph(const PhArgs& a) {
  gpdc_matrix* mraw = nullptr;
  check("load matrix", gpdc_matrix_load(a.matrix.c_str(), &mraw));
  MatrixPtr matrix(mraw);

  double threshold = parse_auto(a.threshold_text, "--threshold");
  gpdc_diagram* draw = nullptr;
  check("persistence", gpdc_ph(matrix.get(), a.maxdim, threshold, &draw));
  DiagramPtr diagram(draw);
  check("write diagram", gpdc_diagram_save_csv(diagram.get(), a.out.c_str()));
  if (!a.svg.empty()) {
    std::string subtitle = a.subtitle;
    if (subtitle.empty()) {
      char buf[160];
      std::snprintf(buf, sizeof buf, "%s metric, n=%zu, threshold=%.6g",
                    gpdc_matrix_metric(matrix.get()) == GPDC_METRIC_DC ? "d_c" : "euclidean",
                    gpdc_matrix_n(matrix.get()), gpdc_diagram_threshold(diagram.get()));
      subtitle = buf;
    }
    check("write svg", gpdc_diagram_save_svg(diagram.get(), a.svg.c_str(), subtitle.c_str()));
  }
  return 0;
}

struct CompareArgs {
  std::string a, b, out;
};

int run_compare(const CompareArgs& args) {
  gpdc_diagram* araw = nullptr;
  check("load diagram", gpdc_diagram_load_csv(args.a.c_str(), &araw));
  DiagramPtr da(araw);
  gpdc_diagram* braw = nullptr;
  check("load diagram", gpdc_diagram_load_csv(args.b.c_str(), &braw));
  DiagramPtr db(braw);

  const int maxdim = std::max(gpdc_diagram_maxdim(da.get()), gpdc_diagram_maxdim(db.get()));
  std::string lines;
  for (int deg = 0; deg <= maxdim; ++deg) {
    double dist = 0.0;
    check("bottleneck", gpdc_bottleneck(da.get(), db.get(), deg, &dist));
    char buf[64];
    if (std::isinf(dist)) {
      std::snprintf(buf, sizeof buf, "H%d inf\n", deg);
    } else {
      std::snprintf(buf, sizeof buf, "H%d %.17g\n", deg, dist);
    }
    lines += buf;
  }
  std::fputs(lines.c_str(), stdout);
  if (!args.out.empty()) {
    std::ofstream f(args.out, std::ios::binary);
    if (!f) {
      std::fprintf(stderr, "gpdc: cannot write %s\n", args.out.c_str());
      return 2;
    }
    f << lines;
  }
  return 0;
}

struct ChecksArgs {
  std::string filter, out;
};

int run_checks(const ChecksArgs& a) {
  gpdc_checks* raw = nullptr;
  check("checks", gpdc_run_checks(a.filter.empty() ? nullptr : a.filter.c_str(), &raw));
  ChecksPtr handle(raw);

  std::ofstream jsonl;
  if (!a.out.empty()) {
    jsonl.open(a.out, std::ios::binary);
    if (!jsonl) {
      std::fprintf(stderr, "gpdc: cannot write %s\n", a.out.c_str());
      return 2;
    }
  }

  const std::size_t count = gpdc_checks_count(handle.get());
  std::size_t failed = 0, skipped = 0;
  for (std::size_t i = 0; i < count; ++i) {
    const char* name = nullptr;
    const char* detail = nullptr;
    const char* note = nullptr;
    double lhs = 0.0, rhs = 0.0, margin = 0.0;
    int pass = 0, skip = 0;
    check("checks", gpdc_checks_get(handle.get(), i, &name, &detail, &lhs, &rhs, &margin,
                                    &pass, &skip, &note));
    const char* tag = skip ? "skip" : (pass ? "pass" : "FAIL");
    if (skip)
      ++skipped;
    else if (!pass)
      ++failed;
    std::printf("[%s] %-36s lhs=%-14.6g rhs=%-14.6g margin=%-11.3g %s\n", tag, name, lhs, rhs,
                margin, detail);
    if (jsonl.is_open()) {
      ordered_json rec{{"name", name},      {"detail", detail}, {"lhs", lhs},
                       {"rhs", rhs},        {"margin", margin}, {"pass", pass != 0},
                       {"skipped", skip != 0}, {"note", note}};
      jsonl << rec.dump() << "\n";
    }
  }
  std::printf("%zu checks: %zu passed, %zu failed, %zu skipped\n", count,
              count - failed - skipped, failed, skipped);
  return failed == 0 ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Grassmannian-bundle distance pipeline"};
  app.require_subcommand(1);

  TorusArgs torus;
  EllipseArgs ellipse;
  MobiusArgs mobius;
  GyreArgs gyre;
  DelayArgs delay;
  FramesArgs frames;
  OrientArgs orient;
  DistmatArgs distmat;
  PhArgs ph;
  CompareArgs compare;
  ChecksArgs checks;

  auto* gen = app.add_subcommand("gen", "Synthetic data generators");
  gen->require_subcommand(1);

  auto* g_torus = gen->add_subcommand("torus", "Sample a torus with analytic tangent frames");
  g_torus->add_option("--R", torus.R, "Major radius")->capture_default_str();
  g_torus->add_option("--r", torus.r, "Minor radius")->capture_default_str();
  g_torus->add_option("--n", torus.n, "Number of points")->required();
  g_torus->add_option("--seed", torus.seed, "Random seed")->capture_default_str();
  g_torus->add_option("--mode", torus.mode, "grid or random")->capture_default_str();
  g_torus->add_option("--out", torus.out, "Points CSV path")->required();
  g_torus->add_option("--frames-out", torus.frames_out, "Analytic frame file path");

  auto* g_ellipse = gen->add_subcommand("ellipse", "Sample an ellipse with tangent lines");
  g_ellipse->add_option("--a", ellipse.a, "Semi-axis a")->capture_default_str();
  g_ellipse->add_option("--b", ellipse.b, "Semi-axis b")->capture_default_str();
  g_ellipse->add_option("--n", ellipse.n, "Number of points")->required();
  g_ellipse->add_option("--out", ellipse.out, "Points CSV path")->required();
  g_ellipse->add_option("--frames-out", ellipse.frames_out, "Analytic frame file path");

  auto* g_mobius = gen->add_subcommand("mobius", "Sample a Mobius band (non-orientable control)");
  g_mobius->add_option("--R", mobius.R, "Center-circle radius")->capture_default_str();
  g_mobius->add_option("--w", mobius.w, "Half-width")->capture_default_str();
  g_mobius->add_option("--n", mobius.n, "Number of points")->required();
  g_mobius->add_option("--seed", mobius.seed, "Random seed")->capture_default_str();
  g_mobius->add_option("--out", mobius.out, "Points CSV path")->required();

  auto* g_gyre = gen->add_subcommand("doublegyre", "Integrate the driven double-gyre flow");
  g_gyre->add_option("--C", gyre.C, "Amplitude")->capture_default_str();
  g_gyre->add_option("--eta", gyre.eta, "Perturbation strength")->capture_default_str();
  g_gyre->add_option("--omega", gyre.omega, "Driving frequency")->capture_default_str();
  g_gyre->add_option("--x0", gyre.x0, "Initial x")->capture_default_str();
  g_gyre->add_option("--y0", gyre.y0, "Initial y")->capture_default_str();
  g_gyre->add_option("--T", gyre.T, "Final time")->capture_default_str();
  g_gyre->add_option("--n", gyre.n, "Number of samples")->capture_default_str();
  g_gyre->add_option("--step", gyre.h, "Integrator step h")->capture_default_str();
  g_gyre->add_option("--out", gyre.out, "Series CSV path (columns t,x,y)")->required();

  auto* g_delay = gen->add_subcommand("delay", "Sliding-window embedding of a series column");
  g_delay->add_option("--series", delay.series, "Series CSV path")->required();
  g_delay->add_option("--column", delay.column, "Column to embed (0-based)")
      ->capture_default_str();
  g_delay->add_option("--tau", delay.tau, "Delay in time units")->capture_default_str();
  g_delay->add_option("--tau-steps", delay.tau_steps,
                      "Delay in series steps (overrides --tau)");
  g_delay->add_option("--m", delay.m, "Embedding dimension")->capture_default_str();
  g_delay->add_option("--d", delay.d, "Declared intrinsic dimension")->capture_default_str();
  g_delay->add_option("--out", delay.out, "Points CSV path")->required();

  auto* s_frames = app.add_subcommand("frames", "Estimate tangent frames by local PCA");
  s_frames->add_option("--points", frames.points, "Points file")->required();
  s_frames->add_option("--format", frames.format, "csv, whitespace, or off")
      ->capture_default_str();
  s_frames->add_option("--d", frames.d, "Intrinsic dimension")->required();
  s_frames->add_option("--k", frames.k, "Neighborhood size (0 picks the default)")
      ->capture_default_str();
  s_frames->add_option("--out", frames.out, "Frame file path")->required();

  auto* s_orient = app.add_subcommand("orient", "Propagate a consistent orientation");
  s_orient->add_option("--points", orient.points, "Points file")->required();
  s_orient->add_option("--format", orient.format, "csv, whitespace, or off")
      ->capture_default_str();
  s_orient->add_option("--frames", orient.frames, "Input frame file")->required();
  s_orient->add_option("--k", orient.k, "Neighborhood size (0 picks the default)")
      ->capture_default_str();
  s_orient->add_option("--tau", orient.tau, "Reach estimate for edge-length warnings");
  s_orient->add_option("--out", orient.out, "Oriented frame file path")->required();
  s_orient->add_option("--report", orient.report, "Propagation report path");

  auto* s_distmat = app.add_subcommand("distmat", "Build a distance matrix");
  s_distmat->add_option("--points", distmat.points, "Points file")->required();
  s_distmat->add_option("--format", distmat.format, "csv, whitespace, or off")
      ->capture_default_str();
  s_distmat->add_option("--d", distmat.d, "Intrinsic dimension");
  s_distmat->add_option("--metric", distmat.metric, "dc or euclidean")->capture_default_str();
  s_distmat->add_option("--frames", distmat.frames, "Oriented frame file (dc metric)");
  s_distmat->add_option("--c", distmat.c_text, "Scale: auto or a nonnegative number")
      ->capture_default_str();
  s_distmat->add_option("--subsample", distmat.sub, "Subsample size (0 keeps all points)")
      ->capture_default_str();
  s_distmat->add_option("--seed", distmat.seed, "Subsample seed")->capture_default_str();
  s_distmat->add_option("--frames-on", distmat.frames_on,
                        "full: restrict --frames to the subsample; subsample: re-estimate "
                        "frames on the subsample")
      ->capture_default_str();
  s_distmat->add_option("--k", distmat.k, "Neighborhood size for --frames-on subsample")
      ->capture_default_str();
  s_distmat->add_option("--out", distmat.out, "Matrix file path")->required();
  s_distmat->add_option("--csv-out", distmat.csv_out, "Optional full-square CSV export");

  auto* s_ph = app.add_subcommand("ph", "Vietoris-Rips persistent homology of a matrix");
  s_ph->add_option("--matrix", ph.matrix, "Matrix file")->required();
  s_ph->add_option("--maxdim", ph.maxdim, "Top homology degree")->capture_default_str();
  s_ph->add_option("--threshold", ph.threshold_text,
                   "auto (enclosing radius) or a filtration cap")
      ->capture_default_str();
  s_ph->add_option("--out", ph.out, "Diagram CSV path")->required();
  s_ph->add_option("--svg", ph.svg, "Diagram SVG path");
  s_ph->add_option("--subtitle", ph.subtitle, "SVG subtitle override");

  auto* s_compare = app.add_subcommand("compare", "Bottleneck distances between two diagrams");
  s_compare->add_option("--a", compare.a, "First diagram CSV")->required();
  s_compare->add_option("--b", compare.b, "Second diagram CSV")->required();
  s_compare->add_option("--out", compare.out, "Optional output file for the distances");

  auto* s_checks = app.add_subcommand("checks", "Run the numerical verification suite");
  s_checks->add_option("--filter", checks.filter, "Keep only checks whose name contains this");
  s_checks->add_option("--out", checks.out, "JSONL verdicts path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (g_torus->parsed()) return run_gen_torus(torus);
  if (g_ellipse->parsed()) return run_gen_ellipse(ellipse);
  if (g_mobius->parsed()) return run_gen_mobius(mobius);
  if (g_gyre->parsed()) return run_gen_doublegyre(gyre);
  if (g_delay->parsed()) return run_gen_delay(delay);
  if (s_frames->parsed()) return run_frames(frames);
  if (s_orient->parsed()) return run_orient(orient);
  if (s_distmat->parsed()) return run_distmat(distmat);
  if (s_ph->parsed()) return run_ph(ph);
  if (s_compare->parsed()) return run_compare(compare);
  if (s_checks->parsed()) return run_checks(checks);
  return 2;
}
