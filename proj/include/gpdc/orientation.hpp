#pragma once

#include <optional>
#include <string>
#include <tuple>

#include "gpdc/neighbors.hpp"
#include "gpdc/tangent.hpp"

namespace gpdc {

struct OrientationReport {
  bool consistent = false;
  std::size_t components = 0;
  std::size_t flips = 0;
  // (i, j, det of the frame product) for edges that stayed negative after
  // propagation, and for edges whose det sat in the +-1e-12 dead zone.
  std::vector<std::tuple<std::uint32_t, std::uint32_t, double>> violations;
  std::vector<std::tuple<std::uint32_t, std::uint32_t, double>> indeterminate;
  // edges longer than tau/2 when a reach estimate was supplied
  std::vector<std::tuple<std::uint32_t, std::uint32_t, double>> long_edges;
};

struct OrientationResult {
  FrameField field;
  OrientationReport report;
};

/// Breadth-first orientation propagation over the graph edges. Roots are the
/// lowest-index vertex of each component and keep their frame; a tree edge
/// (parent, child) with det(B_p^T B_c) < 0 flips the sign of the child's last
/// column. Every edge is re-checked afterwards; surviving negative edges make
/// the field inconsistent (`report.consistent == false`, field left
/// unoriented). Supplying `tau` (and the cloud for edge lengths) records
/// edges longer than the tau/2 safety radius.
OrientationResult propagate_orientation(const FrameField& field, const EdgeList& edges,
                                        const PointCloud* cloud = nullptr,
                                        std::optional<double> tau = std::nullopt);

/// Half the reach: ambient closeness below this guarantees a positive frame
/// determinant, so propagation across such edges cannot flip erroneously.
double orientation_safety_radius(double tau);

std::string render_report(const OrientationReport& report);

}  // namespace gpdc
