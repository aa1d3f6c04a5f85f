#pragma once

#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "gpdc/metric.hpp"

namespace gpdc {

struct PersistenceBar {
  double birth;
  double death;  // +infinity for essential classes
  bool operator==(const PersistenceBar&) const = default;
};

inline bool bar_is_infinite(const PersistenceBar& b) {
  return b.death == std::numeric_limits<double>::infinity();
}

/// Bars grouped by degree (index 0 .. maxdim), each group sorted by
/// (birth, death). Zero-persistence pairs are never included.
struct PersistenceDiagram {
  std::vector<std::vector<PersistenceBar>> degrees;
  int maxdim = 0;
  double threshold = 0.0;

  const std::vector<PersistenceBar>& at(std::size_t degree) const { return degrees[degree]; }
};

/// Vietoris-Rips persistent homology over Z/2 up to homological degree
/// `maxdim`. Simplices enter at their diameter; only those with diameter at
/// most the threshold (default: the enclosing radius of the matrix) exist.
/// Coboundary-based column reduction with clearing and the emergent-pair
/// shortcut; classes alive at the threshold are reported with death +inf.
PersistenceDiagram vr_persistence(const DistanceMatrix& m, int maxdim,
                                  std::optional<double> threshold = std::nullopt);

/// Textbook boundary-matrix reduction over the same filtration, simplices
/// ordered by (value, dimension, lexicographic vertex tuple). Exists to check
/// the fast engine; refuses n > 40 with SizeError.
PersistenceDiagram brute_force_persistence(const DistanceMatrix& m, int maxdim,
                                           std::optional<double> threshold = std::nullopt);

/// Exact bottleneck distance between two diagrams of one degree. Infinite
/// bars must match in count (else +inf) and pair up by birth; the finite part
/// is solved by binary search over candidate costs with bipartite matching.
double bottleneck_distance(const std::vector<PersistenceBar>& a,
                           const std::vector<PersistenceBar>& b);

/// CSV with header "degree,birth,death", one bar per line, 17 significant
/// digits, "inf" for essential deaths. Loading re-validates and reproduces
/// the exact doubles, so save/load/save is byte-identical.
void save_diagram_csv(const PersistenceDiagram& d, const std::string& path);
PersistenceDiagram load_diagram_csv(const std::string& path);

/// Deterministic SVG scatter of the diagram: one marker shape per degree,
/// diagonal drawn, essential classes placed at 1.05 x the largest finite
/// value with a distinct marker. `subtitle` typically names the metric and c.
void save_diagram_svg(const PersistenceDiagram& d, const std::string& path,
                      const std::string& subtitle);

}  // namespace gpdc
