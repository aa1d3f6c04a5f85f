#include "gpdc/orientation.hpp"

#include <cmath>
#include <cstdio>
#include <deque>

#include "gpdc/grassmann.hpp"

namespace gpdc {

namespace {
constexpr double kDetDeadZone = 1e-12;
}

OrientationResult propagate_orientation(const FrameField& field, const EdgeList& edges,
                                        const PointCloud* cloud, std::optional<double> tau) {
  const std::size_t n = field.frames.size();
  if (n == 0) throw ParameterError("propagate_orientation: empty field");
  if (tau && !cloud)
    throw ParameterError("propagate_orientation: tau given without a cloud for edge lengths");
  if (cloud && cloud->n != n)
    throw DimensionError("propagate_orientation: cloud and field sizes disagree");

  OrientationResult out;
  out.field = field;

  std::vector<std::vector<std::uint32_t>> adj(n);
  for (auto [i, j] : edges) {
    if (i >= n || j >= n) throw ParameterError("propagate_orientation: edge out of range");
    adj[i].push_back(j);
    adj[j].push_back(i);
  }

  std::vector<char> seen(n, 0);
  std::deque<std::uint32_t> queue;
  for (std::size_t root = 0; root < n; ++root) {
    if (seen[root]) continue;
    ++out.report.components;
    seen[root] = 1;
    queue.push_back(static_cast<std::uint32_t>(root));
    while (!queue.empty()) {
      std::uint32_t p = queue.front();
      queue.pop_front();
      for (std::uint32_t c : adj[p]) {
        if (seen[c]) continue;
        seen[c] = 1;
        double det = determinant(gram_product(out.field.frames[p], out.field.frames[c]));
        if (det < -kDetDeadZone) {
          Mat& f = out.field.frames[c];
          std::size_t last = f.cols() - 1;
          for (std::size_t r = 0; r < f.rows(); ++r) f(r, last) = -f(r, last);
          ++out.report.flips;
        }
        queue.push_back(c);
      }
    }
  }

  for (auto [i, j] : edges) {
    double det = determinant(gram_product(out.field.frames[i], out.field.frames[j]));
    if (det < -kDetDeadZone)
      out.report.violations.emplace_back(i, j, det);
    else if (det <= kDetDeadZone)
      out.report.indeterminate.emplace_back(i, j, det);
    if (tau) {
      double len = std::sqrt(cloud->squared_distance(i, j));
      if (len > orientation_safety_radius(*tau)) out.report.long_edges.emplace_back(i, j, len);
    }
  }

  out.report.consistent = out.report.violations.empty();
  out.field.oriented = out.report.consistent;
  return out;
}

double orientation_safety_radius(double tau) {
  if (!(tau > 0.0)) throw ParameterError("orientation_safety_radius: tau must be positive");
  return tau / 2.0;
}

std::string render_report(const OrientationReport& report) {
  std::string s;
  char line[160];
  std::snprintf(line, sizeof(line), "consistent: %s\ncomponents: %zu\nflips: %zu\n",
                report.consistent ? "yes" : "no", report.components, report.flips);
  s += line;
  std::snprintf(line, sizeof(line), "violations: %zu\n", report.violations.size());
  s += line;
  for (auto& [i, j, det] : report.violations) {
    std::snprintf(line, sizeof(line), "  edge %u %u det %.17g\n", i, j, det);
    s += line;
  }
  std::snprintf(line, sizeof(line), "indeterminate: %zu\n", report.indeterminate.size());
  s += line;
  for (auto& [i, j, det] : report.indeterminate) {
    std::snprintf(line, sizeof(line), "  edge %u %u det %.17g\n", i, j, det);
    s += line;
  }
  if (!report.long_edges.empty()) {
    std::snprintf(line, sizeof(line), "edges beyond safety radius: %zu\n",
                  report.long_edges.size());
    s += line;
    for (auto& [i, j, len] : report.long_edges) {
      std::snprintf(line, sizeof(line), "  edge %u %u length %.17g\n", i, j, len);
      s += line;
    }
  }
  return s;
}

}  // namespace gpdc
