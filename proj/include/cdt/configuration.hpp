#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cdt/automorphism.hpp"
#include "cdt/graph.hpp"

namespace cdt {

/// Points 0..point_count-1 and lines given as sorted point sets.
struct IncidenceConfiguration {
  int point_count = 0;
  std::vector<std::vector<int>> lines;
  std::vector<std::string> point_names;  // optional

  /// Sorts each line and rejects unknown points, empty lines and repeated
  /// lines.
  static IncidenceConfiguration make(int point_count, std::vector<std::vector<int>> lines,
                                     std::vector<std::string> point_names = {});

  int line_count() const { return static_cast<int>(lines.size()); }
  /// (point, line) pairs in point-major order.
  std::vector<std::pair<int, int>> flags() const;
  std::vector<int> lines_through(int point) const;
};

/// Lines become points and vice versa; point p of the dual is line p.
IncidenceConfiguration dual(const IncidenceConfiguration& cfg);

/// Bipartite incidence graph: points first, then lines.
Graph levi_graph(const IncidenceConfiguration& cfg);

/// Points, adjacent when some line holds both.
Graph menger_graph(const IncidenceConfiguration& cfg);

struct ConfigurationShape {
  bool uniform = false;     // constant points per line and lines per point
  int points_per_line = 0;  // valid when uniform
  int lines_per_point = 0;
  bool linear = false;      // two points share at most one line
  int points = 0;
  int lines = 0;
  /// An (n_r) configuration: n points, n lines, r per line and point, linear.
  bool is_symmetric(int n, int r) const;
};

ConfigurationShape configuration_shape(const IncidenceConfiguration& cfg);

/// Part-swapping automorphism of the Levi graph (points map to lines and
/// lines to points, incidence preserved), if one exists. Throws
/// PreconditionFailed when the point and line counts differ.
std::optional<Permutation> self_duality(const IncidenceConfiguration& cfg);
bool is_self_dual(const IncidenceConfiguration& cfg);

/// Checks a claimed self-duality returned by self_duality.
bool is_duality(const IncidenceConfiguration& cfg, std::span<const Vertex> levi_perm);

/// Incidence-preserving bijections between two configurations.
std::optional<IsoMapping> configuration_isomorphism(const IncidenceConfiguration& a,
                                                    const IncidenceConfiguration& b);

}  // namespace cdt
