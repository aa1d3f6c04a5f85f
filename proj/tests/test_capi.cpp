#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <limits>
#include <string>
#include <vector>

#include "gpdc.h"

namespace {

constexpr double kPi = 3.14159265358979323846;

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    auto base = std::filesystem::temp_directory_path() / "gpdc-capi-XXXXXX";
    std::string tmpl = base.string();
    REQUIRE(mkdtemp(tmpl.data()) != nullptr);
    path = tmpl;
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path, ec);
  }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

}  // namespace

TEST_CASE("version string") {
  CHECK(std::string(gpdc_version()) == "1.0.0");
}

TEST_CASE("null arguments fail with a parameter error and a message") {
  CHECK(gpdc_cloud_create(3, 2, 0, nullptr, nullptr) == GPDC_ERR_PARAMETER);
  CHECK(std::string(gpdc_last_error()).size() > 0);
  double coords[6] = {0, 0, 1, 0, 0, 1};
  CHECK(gpdc_cloud_create(3, 2, 0, coords, nullptr) == GPDC_ERR_PARAMETER);
  CHECK(gpdc_choose_scale(nullptr, nullptr, nullptr) == GPDC_ERR_PARAMETER);
  CHECK(gpdc_ph(nullptr, 1, -1.0, nullptr) == GPDC_ERR_PARAMETER);
}

TEST_CASE("clouds create, save, load and select") {
  TempDir tmp;
  double coords[8] = {0, 0, 1, 0, 0, 1, 1, 1};
  gpdc_cloud* cloud = nullptr;
  REQUIRE(gpdc_cloud_create(4, 2, 1, coords, &cloud) == GPDC_OK);
  CHECK(gpdc_cloud_n(cloud) == 4);
  CHECK(gpdc_cloud_dim_ambient(cloud) == 2);
  CHECK(gpdc_cloud_dim_intrinsic(cloud) == 1);
  const double* view = gpdc_cloud_coords(cloud);
  REQUIRE(view != nullptr);
  CHECK(std::memcmp(view, coords, sizeof coords) == 0);

  auto path = tmp.file("cloud.csv");
  REQUIRE(gpdc_cloud_save_csv(cloud, path.c_str()) == GPDC_OK);
  gpdc_cloud* loaded = nullptr;
  REQUIRE(gpdc_cloud_load(path.c_str(), GPDC_POINTS_CSV, &loaded) == GPDC_OK);
  CHECK(gpdc_cloud_n(loaded) == 4);
  CHECK(std::memcmp(gpdc_cloud_coords(loaded), coords, sizeof coords) == 0);

  size_t idx[2] = {1, 3};
  gpdc_cloud* sub = nullptr;
  REQUIRE(gpdc_cloud_select(cloud, idx, 2, &sub) == GPDC_OK);
  CHECK(gpdc_cloud_n(sub) == 2);
  CHECK(gpdc_cloud_coords(sub)[0] == 1.0);
  CHECK(gpdc_cloud_coords(sub)[2] == 1.0);
  CHECK(gpdc_cloud_coords(sub)[3] == 1.0);

  size_t bad = 9;
  gpdc_cloud* nope = nullptr;
  CHECK(gpdc_cloud_select(cloud, &bad, 1, &nope) == GPDC_ERR_PARAMETER);
  CHECK(nope == nullptr);

  gpdc_cloud_free(sub);
  gpdc_cloud_free(loaded);
  gpdc_cloud_free(cloud);
}

TEST_CASE("missing files surface as io errors") {
  gpdc_cloud* cloud = nullptr;
  CHECK(gpdc_cloud_load("/nonexistent/x.csv", GPDC_POINTS_CSV, &cloud) == GPDC_ERR_IO);
  CHECK(cloud == nullptr);
  gpdc_matrix* m = nullptr;
  CHECK(gpdc_matrix_load("/nonexistent/x.gpdm", &m) == GPDC_ERR_IO);
}

TEST_CASE("subsampling is deterministic and validates m") {
  std::vector<size_t> a(10), b(10);
  REQUIRE(gpdc_subsample_indices(100, 10, 5, a.data()) == GPDC_OK);
  REQUIRE(gpdc_subsample_indices(100, 10, 5, b.data()) == GPDC_OK);
  CHECK(a == b);
  for (size_t i = 1; i < a.size(); ++i) CHECK(a[i - 1] < a[i]);
  CHECK(gpdc_subsample_indices(5, 6, 5, a.data()) == GPDC_ERR_PARAMETER);
}

TEST_CASE("the torus generator returns oriented column-major frames") {
  gpdc_cloud* cloud = nullptr;
  gpdc_frames* frames = nullptr;
  REQUIRE(gpdc_gen_torus(1.0, 0.25, 50, 7, GPDC_TORUS_RANDOM, &cloud, &frames) == GPDC_OK);
  CHECK(gpdc_cloud_n(cloud) == 50);
  CHECK(gpdc_cloud_dim_intrinsic(cloud) == 2);
  REQUIRE(frames != nullptr);
  CHECK(gpdc_frames_n(frames) == 50);
  CHECK(gpdc_frames_dim_ambient(frames) == 3);
  CHECK(gpdc_frames_dim_intrinsic(frames) == 2);
  CHECK(gpdc_frames_oriented(frames) == 1);

  double block[6];
  REQUIRE(gpdc_frames_get(frames, 0, block) == GPDC_OK);
  // Column-major: two orthonormal 3-vectors back to back.
  double n0 = block[0] * block[0] + block[1] * block[1] + block[2] * block[2];
  double n1 = block[3] * block[3] + block[4] * block[4] + block[5] * block[5];
  double dot = block[0] * block[3] + block[1] * block[4] + block[2] * block[5];
  CHECK(n0 == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(n1 == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(dot) < 1e-12);
  CHECK(block[2] == 0.0);
  CHECK(gpdc_frames_get(frames, 50, block) == GPDC_ERR_PARAMETER);

  gpdc_frames_free(frames);
  gpdc_cloud_free(cloud);
}

TEST_CASE("frames save, load and select through the C surface") {
  TempDir tmp;
  gpdc_cloud* cloud = nullptr;
  gpdc_frames* frames = nullptr;
  REQUIRE(gpdc_gen_torus(1.0, 0.25, 30, 2, GPDC_TORUS_RANDOM, &cloud, &frames) == GPDC_OK);

  auto path = tmp.file("frames.txt");
  REQUIRE(gpdc_frames_save(frames, path.c_str()) == GPDC_OK);
  gpdc_frames* loaded = nullptr;
  REQUIRE(gpdc_frames_load(path.c_str(), &loaded) == GPDC_OK);
  CHECK(gpdc_frames_n(loaded) == 30);
  CHECK(gpdc_frames_oriented(loaded) == 1);
  double a[6], b[6];
  for (size_t i = 0; i < 30; ++i) {
    REQUIRE(gpdc_frames_get(frames, i, a) == GPDC_OK);
    REQUIRE(gpdc_frames_get(loaded, i, b) == GPDC_OK);
    CHECK(std::memcmp(a, b, sizeof a) == 0);
  }

  size_t idx[3] = {0, 10, 29};
  gpdc_frames* sub = nullptr;
  REQUIRE(gpdc_frames_select(frames, idx, 3, &sub) == GPDC_OK);
  CHECK(gpdc_frames_n(sub) == 3);
  REQUIRE(gpdc_frames_get(frames, 29, a) == GPDC_OK);
  REQUIRE(gpdc_frames_get(sub, 2, b) == GPDC_OK);
  CHECK(std::memcmp(a, b, sizeof a) == 0);

  gpdc_frames_free(sub);
  gpdc_frames_free(loaded);
  gpdc_frames_free(frames);
  gpdc_cloud_free(cloud);
}

TEST_CASE("the double gyre series and delay embedding round through C") {
  gpdc_series* s = nullptr;
  REQUIRE(gpdc_gen_double_gyre(0.1, 0.1, 0.62831853071795864769, 0.5, 0.625, 20.0, 200, 0.01,
                               &s) == GPDC_OK);
  CHECK(gpdc_series_len(s) == 200);
  CHECK(gpdc_series_dt(s) == doctest::Approx(20.0 / 199.0).epsilon(1e-15));
  CHECK(gpdc_series_box_excursion(s) <= 1e-6);
  const double* t = gpdc_series_values(s, 0);
  const double* x = gpdc_series_values(s, 1);
  const double* y = gpdc_series_values(s, 2);
  REQUIRE(t != nullptr);
  REQUIRE(x != nullptr);
  REQUIRE(y != nullptr);
  CHECK(t[0] == 0.0);
  CHECK(x[0] == 0.5);
  CHECK(y[0] == 0.625);
  CHECK(gpdc_series_values(s, 3) == nullptr);

  double series[5] = {1, 2, 3, 4, 5};
  gpdc_cloud* cloud = nullptr;
  REQUIRE(gpdc_delay_embed(series, 5, 1, 3, &cloud) == GPDC_OK);
  CHECK(gpdc_cloud_n(cloud) == 3);
  CHECK(gpdc_cloud_dim_ambient(cloud) == 3);
  CHECK(gpdc_cloud_coords(cloud)[0] == 1.0);
  CHECK(gpdc_cloud_coords(cloud)[8] == 5.0);
  gpdc_cloud_free(cloud);

  gpdc_cloud* tooshort = nullptr;
  CHECK(gpdc_delay_embed(series, 3, 2, 3, &tooshort) == GPDC_ERR_PARAMETER);
  gpdc_series_free(s);
}

TEST_CASE("orientation succeeds on the torus and fails on the mobius band") {
  gpdc_cloud* cloud = nullptr;
  gpdc_frames* frames = nullptr;
  REQUIRE(gpdc_gen_torus(1.0, 0.25, 500, 11, GPDC_TORUS_RANDOM, &cloud, &frames) == GPDC_OK);

  gpdc_frames* oriented = nullptr;
  int consistent = 0;
  size_t violations = 99;
  char* report = nullptr;
  REQUIRE(gpdc_orient(frames, cloud, 10, 0.0, &oriented, &consistent, &violations, &report) ==
          GPDC_OK);
  CHECK(consistent == 1);
  CHECK(violations == 0);
  CHECK(gpdc_frames_oriented(oriented) == 1);
  REQUIRE(report != nullptr);
  CHECK(std::string(report).find("consistent: yes") != std::string::npos);
  gpdc_string_free(report);
  gpdc_frames_free(oriented);
  gpdc_frames_free(frames);
  gpdc_cloud_free(cloud);

  gpdc_cloud* band = nullptr;
  REQUIRE(gpdc_gen_mobius(1.0, 0.3, 1000, 5, &band) == GPDC_OK);
  gpdc_frames* est = nullptr;
  REQUIRE(gpdc_frames_estimate(band, 2, 10, &est) == GPDC_OK);
  CHECK(gpdc_frames_oriented(est) == 0);

  gpdc_frames* out = nullptr;
  consistent = 1;
  violations = 0;
  report = nullptr;
  REQUIRE(gpdc_orient(est, band, 10, 0.0, &out, &consistent, &violations, &report) == GPDC_OK);
  CHECK(consistent == 0);
  CHECK(violations >= 1);
  CHECK(gpdc_frames_oriented(out) == 0);
  REQUIRE(report != nullptr);
  CHECK(std::string(report).find("consistent: no") != std::string::npos);
  gpdc_string_free(report);
  gpdc_frames_free(out);
  gpdc_frames_free(est);
  gpdc_cloud_free(band);
}

TEST_CASE("distance matrices flow through persistence and bottleneck") {
  TempDir tmp;
  gpdc_cloud* cloud = nullptr;
  gpdc_frames* frames = nullptr;
  REQUIRE(gpdc_gen_torus(1.0, 0.25, 120, 7, GPDC_TORUS_RANDOM, &cloud, &frames) == GPDC_OK);

  double c = 0.0, diam = 0.0;
  REQUIRE(gpdc_choose_scale(cloud, &c, &diam) == GPDC_OK);
  CHECK(c > 0.0);
  CHECK(diam > 2.0);
  CHECK(c == doctest::Approx(diam * diam / (kPi * kPi)).epsilon(1e-12));

  gpdc_matrix* dc = nullptr;
  gpdc_matrix* eu = nullptr;
  REQUIRE(gpdc_matrix_dc(cloud, frames, c, &dc) == GPDC_OK);
  REQUIRE(gpdc_matrix_euclidean(cloud, &eu) == GPDC_OK);
  CHECK(gpdc_matrix_n(dc) == 120);
  CHECK(gpdc_matrix_metric(dc) == GPDC_METRIC_DC);
  CHECK(gpdc_matrix_metric(eu) == GPDC_METRIC_EUCLIDEAN);
  CHECK(gpdc_matrix_c(dc) == c);
  CHECK(gpdc_matrix_degenerate_pairs(dc) == 0);

  double vdc = 0.0, veu = 0.0;
  REQUIRE(gpdc_matrix_get(dc, 3, 10, &vdc) == GPDC_OK);
  REQUIRE(gpdc_matrix_get(eu, 3, 10, &veu) == GPDC_OK);
  CHECK(vdc >= veu - 1e-15);
  double enc = 0.0;
  REQUIRE(gpdc_matrix_enclosing_radius(eu, &enc) == GPDC_OK);
  CHECK(enc > 0.0);

  auto gpdm = tmp.file("m.gpdm");
  REQUIRE(gpdc_matrix_save(dc, gpdm.c_str()) == GPDC_OK);
  gpdc_matrix* loaded = nullptr;
  REQUIRE(gpdc_matrix_load(gpdm.c_str(), &loaded) == GPDC_OK);
  CHECK(gpdc_matrix_n(loaded) == 120);
  CHECK(gpdc_matrix_c(loaded) == c);
  double v2 = 0.0;
  REQUIRE(gpdc_matrix_get(loaded, 3, 10, &v2) == GPDC_OK);
  CHECK(v2 == vdc);
  REQUIRE(gpdc_matrix_save_csv(dc, tmp.file("m.csv").c_str()) == GPDC_OK);

  gpdc_diagram* d1 = nullptr;
  REQUIRE(gpdc_ph(dc, 1, -1.0, &d1) == GPDC_OK);
  CHECK(gpdc_diagram_maxdim(d1) == 1);
  CHECK(gpdc_diagram_threshold(d1) > 0.0);
  size_t n0 = gpdc_diagram_count(d1, 0);
  CHECK(n0 == 120);
  std::vector<double> births(n0), deaths(n0);
  REQUIRE(gpdc_diagram_bars(d1, 0, births.data(), deaths.data()) == GPDC_OK);
  int infinite = 0;
  for (size_t i = 0; i < n0; ++i) {
    CHECK(births[i] == 0.0);
    if (deaths[i] == std::numeric_limits<double>::infinity()) ++infinite;
  }
  CHECK(infinite == 1);

  auto dcsv = tmp.file("d.csv");
  REQUIRE(gpdc_diagram_save_csv(d1, dcsv.c_str()) == GPDC_OK);
  gpdc_diagram* d2 = nullptr;
  REQUIRE(gpdc_diagram_load_csv(dcsv.c_str(), &d2) == GPDC_OK);
  CHECK(gpdc_diagram_count(d2, 0) == n0);
  CHECK(gpdc_diagram_count(d2, 1) == gpdc_diagram_count(d1, 1));
  REQUIRE(gpdc_diagram_save_svg(d1, tmp.file("d.svg").c_str(), "dc, n=120") == GPDC_OK);

  double bneck = -1.0;
  REQUIRE(gpdc_bottleneck(d1, d2, 0, &bneck) == GPDC_OK);
  CHECK(bneck == 0.0);
  REQUIRE(gpdc_bottleneck(d1, d2, 1, &bneck) == GPDC_OK);
  CHECK(bneck == 0.0);
  // Degrees beyond maxdim compare as empty.
  REQUIRE(gpdc_bottleneck(d1, d2, 5, &bneck) == GPDC_OK);
  CHECK(bneck == 0.0);

  gpdc_diagram_free(d2);
  gpdc_diagram_free(d1);
  gpdc_matrix_free(loaded);
  gpdc_matrix_free(eu);
  gpdc_matrix_free(dc);
  gpdc_frames_free(frames);
  gpdc_cloud_free(cloud);
}

TEST_CASE("dc matrices demand oriented frames") {
  gpdc_cloud* band = nullptr;
  REQUIRE(gpdc_gen_mobius(1.0, 0.3, 200, 5, &band) == GPDC_OK);
  gpdc_frames* est = nullptr;
  REQUIRE(gpdc_frames_estimate(band, 2, 10, &est) == GPDC_OK);
  gpdc_matrix* m = nullptr;
  CHECK(gpdc_matrix_dc(band, est, 0.5, &m) == GPDC_ERR_PRECONDITION);
  CHECK(m == nullptr);
  CHECK(std::string(gpdc_last_error()).size() > 0);
  gpdc_frames_free(est);
  gpdc_cloud_free(band);
}

TEST_CASE("theory checks report through the C accessors") {
  gpdc_checks* checks = nullptr;
  REQUIRE(gpdc_run_checks("torus-closed", &checks) == GPDC_OK);
  REQUIRE(gpdc_checks_count(checks) == 1);
  const char* name = nullptr;
  const char* detail = nullptr;
  double lhs = 0, rhs = 0, margin = 0;
  int pass = 0, skipped = 1;
  REQUIRE(gpdc_checks_get(checks, 0, &name, &detail, &lhs, &rhs, &margin, &pass, &skipped,
                          nullptr) == GPDC_OK);
  CHECK(std::string(name) == "torus-closed-forms");
  CHECK(pass == 1);
  CHECK(skipped == 0);
  CHECK(gpdc_checks_get(checks, 1, &name, nullptr, nullptr, nullptr, nullptr, nullptr, nullptr,
                        nullptr) == GPDC_ERR_PARAMETER);
  gpdc_checks_free(checks);

  double q[7] = {0};
  REQUIRE(gpdc_torus_quantities(1.0, 0.3, 0.0, q) == GPDC_OK);
  CHECK(q[2] == doctest::Approx(0.3).epsilon(1e-14));

  double ratio = 0.0;
  REQUIRE(gpdc_curvature_ratio(1.0, 0.25, 0.2, 0.9, 0.0, 1.0, 0.0, &ratio) == GPDC_OK);
  CHECK(ratio == doctest::Approx(4.0).epsilon(1e-12));

  double h[6] = {0};
  REQUIRE(gpdc_homotopy_radius(2.0, 1.0, 10.0, h) == GPDC_OK);
  CHECK(h[0] == doctest::Approx(0.7853981633974483).epsilon(1e-14));
  CHECK(h[5] == doctest::Approx(0.0).scale(1.0).epsilon(1e-15));

  double table[4] = {-1, -1, -1, -1};
  double deltas[2] = {0.02, 0.0};
  REQUIRE(gpdc_stability(1.0, 0.25, 60, 3, deltas, 2, 1, table) == GPDC_OK);
  CHECK(table[2] == 0.0);
  CHECK(table[3] == 0.0);
  CHECK(table[0] >= 0.0);
}
