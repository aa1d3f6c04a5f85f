#include <algorithm>
#include <cmath>

#include <doctest.h>

#include "gpdc/generators.hpp"
#include "gpdc/grassmann.hpp"
#include "gpdc/linalg.hpp"
#include "gpdc/neighbors.hpp"
#include "gpdc/orientation.hpp"
#include "test_util.hpp"

using gpdc::EdgeList;
using gpdc::estimate_frame_field;
using gpdc::FrameField;
using gpdc::gram_product;
using gpdc::knn;
using gpdc::Mat;
using gpdc::orientation_safety_radius;
using gpdc::propagate_orientation;
using gpdc::symmetrize;
using testutil::frame_from_columns;

namespace {

FrameField two_frame_field(const Mat& a, const Mat& b) {
  FrameField field;
  field.dim_ambient = a.rows();
  field.dim_intrinsic = a.cols();
  field.frames = {a, b};
  return field;
}

double edge_determinant(const Mat& a, const Mat& b) {
  return gpdc::determinant(gram_product(a, b));
}

}  // namespace

TEST_CASE("identical frames need no flips") {
  Mat f = frame_from_columns(3, {{1, 0, 0}, {0, 1, 0}});
  auto result = propagate_orientation(two_frame_field(f, f), {{0, 1}});
  CHECK(result.report.consistent);
  CHECK(result.report.flips == 0);
  CHECK(result.report.components == 1);
  CHECK(result.field.oriented);
}

TEST_CASE("a negated column is flipped back") {
  Mat a = frame_from_columns(3, {{1, 0, 0}, {0, 1, 0}});
  Mat b = frame_from_columns(3, {{1, 0, 0}, {0, -1, 0}});
  auto result = propagate_orientation(two_frame_field(a, b), {{0, 1}});
  CHECK(result.report.consistent);
  CHECK(result.report.flips == 1);
  CHECK(edge_determinant(result.field.frames[0], result.field.frames[1]) > 0.0);
  CHECK(result.field.oriented);
}

TEST_CASE("perpendicular lines are indeterminate, not violations") {
  Mat a = frame_from_columns(2, {{1, 0}});
  Mat b = frame_from_columns(2, {{0, 1}});
  auto result = propagate_orientation(two_frame_field(a, b), {{0, 1}});
  CHECK(result.report.consistent);
  CHECK(result.report.violations.empty());
  REQUIRE(result.report.indeterminate.size() == 1);
  CHECK(std::abs(std::get<2>(result.report.indeterminate[0])) <= 1e-12);
}

TEST_CASE("empty field is rejected") {
  FrameField empty;
  CHECK_THROWS_AS(propagate_orientation(empty, {}), gpdc::ParameterError);
}

TEST_CASE("analytic torus frames propagate cleanly at verified densities") {
  struct Combo {
    std::size_t n, k;
  };
  for (Combo combo : {Combo{500, 10}, Combo{1000, 15}, Combo{2000, 6}, Combo{2000, 45}}) {
    auto torus = gpdc::torus_sample(1.0, 0.25, combo.n, 11, gpdc::TorusMode::random);
    EdgeList edges = symmetrize(knn(torus.cloud, combo.k));
    auto result = propagate_orientation(torus.frames, edges);
    CAPTURE(combo.n);
    CAPTURE(combo.k);
    CHECK(result.report.consistent);
    CHECK(result.report.violations.empty());
    // the post-condition in its exact form: every edge determinant positive
    for (auto [i, j] : edges)
      CHECK(edge_determinant(result.field.frames[i], result.field.frames[j]) > 0.0);
  }
}

TEST_CASE("propagation is idempotent") {
  auto torus = gpdc::torus_sample(1.0, 0.25, 500, 11, gpdc::TorusMode::random);
  EdgeList edges = symmetrize(knn(torus.cloud, 10));
  auto first = propagate_orientation(torus.frames, edges);
  REQUIRE(first.report.consistent);
  auto second = propagate_orientation(first.field, edges);
  CHECK(second.report.consistent);
  CHECK(second.report.flips == 0);
}

TEST_CASE("globally reversed input yields the same field up to global reversal") {
  auto torus = gpdc::torus_sample(1.0, 0.25, 500, 11, gpdc::TorusMode::random);
  EdgeList edges = symmetrize(knn(torus.cloud, 10));

  FrameField reversed = torus.frames;
  for (Mat& f : reversed.frames)
    for (std::size_t i = 0; i < f.rows(); ++i)
      f(i, f.cols() - 1) = -f(i, f.cols() - 1);

  auto a = propagate_orientation(torus.frames, edges);
  auto b = propagate_orientation(reversed, edges);
  REQUIRE(a.report.consistent);
  REQUIRE(b.report.consistent);

  // the arccos of a singular value one ulp under 1 is ~2e-8, so "same" and
  // "antipodal" are only resolvable to that scale
  std::size_t same = 0, antipodal = 0;
  for (std::size_t i = 0; i < a.field.frames.size(); ++i) {
    double d = gpdc::oriented_grassmann_distance(a.field.frames[i], b.field.frames[i]).value;
    if (d < 1e-6) ++same;
    if (d > std::acos(-1.0) - 1e-6) ++antipodal;
  }
  bool identical = same == a.field.frames.size();
  bool reversed_everywhere = antipodal == a.field.frames.size();
  CHECK((identical || reversed_everywhere));
}

TEST_CASE("the Mobius band is flagged as inconsistent") {
  gpdc::PointCloud cloud = gpdc::mobius_sample(1.0, 0.3, 1000, 5);
  auto adj = knn(cloud, 10);
  FrameField field = estimate_frame_field(cloud, adj, 2);
  auto result = propagate_orientation(field, symmetrize(adj));
  CHECK_FALSE(result.report.consistent);
  CHECK(result.report.violations.size() >= 1);
  CHECK_FALSE(result.field.oriented);

  std::string text = gpdc::render_report(result.report);
  CHECK(text.find("consistent: no") != std::string::npos);
  CHECK(text.find("violations") != std::string::npos);
}

TEST_CASE("safety radius is half the reach") {
  CHECK(orientation_safety_radius(1.0) == doctest::Approx(0.5));
  CHECK(orientation_safety_radius(1.5) == doctest::Approx(0.75));
  CHECK(orientation_safety_radius(0.25) == doctest::Approx(0.125));
  CHECK_THROWS_AS(orientation_safety_radius(0.0), gpdc::ParameterError);
  CHECK_THROWS_AS(orientation_safety_radius(-2.0), gpdc::ParameterError);
}

TEST_CASE("edges beyond the safety radius are recorded when a reach is supplied") {
  gpdc::PointCloud cloud(2, 2, 1);
  cloud.point(0)[0] = 0.0;
  cloud.point(0)[1] = 0.0;
  cloud.point(1)[0] = 0.5;
  cloud.point(1)[1] = 0.0;
  Mat f = frame_from_columns(2, {{1, 0}});
  auto result = propagate_orientation(two_frame_field(f, f), {{0, 1}}, &cloud, 0.2);
  CHECK(result.report.consistent);
  REQUIRE(result.report.long_edges.size() == 1);
  CHECK(std::get<2>(result.report.long_edges[0]) == doctest::Approx(0.5));
}

TEST_CASE("typical knn edges at n = 2000 sit under the torus safety radius") {
  auto torus = gpdc::torus_sample(1.0, 0.25, 2000, 11, gpdc::TorusMode::random);
  EdgeList edges = symmetrize(knn(torus.cloud, 6));
  std::vector<double> lengths;
  lengths.reserve(edges.size());
  for (auto [i, j] : edges)
    lengths.push_back(std::sqrt(torus.cloud.squared_distance(i, j)));
  std::nth_element(lengths.begin(), lengths.begin() + lengths.size() / 2, lengths.end());
  double median = lengths[lengths.size() / 2];
  CHECK(median < orientation_safety_radius(0.25));
}
