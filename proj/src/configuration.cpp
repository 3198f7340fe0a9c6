#include "cdt/configuration.hpp"

#include <algorithm>
#include <set>

#include "cdt/error.hpp"

namespace cdt {

IncidenceConfiguration IncidenceConfiguration::make(int point_count, std::vector<std::vector<int>> lines,
                                                    std::vector<std::string> point_names) {
  if (point_count < 0) throw InvalidInput("negative point count");
  if (!point_names.empty() && static_cast<int>(point_names.size()) != point_count)
    throw InvalidInput("point name count mismatch");
  std::set<std::vector<int>> seen;
  for (auto& line : lines) {
    if (line.empty()) throw InvalidInput("empty line");
    std::sort(line.begin(), line.end());
    if (std::adjacent_find(line.begin(), line.end()) != line.end()) throw InvalidInput("line repeats a point");
    if (line.front() < 0 || line.back() >= point_count) throw InvalidInput("line mentions an unknown point");
    if (!seen.insert(line).second) throw InvalidInput("repeated line");
  }
  IncidenceConfiguration cfg;
  cfg.point_count = point_count;
  cfg.lines = std::move(lines);
  cfg.point_names = std::move(point_names);
  return cfg;
}

std::vector<std::pair<int, int>> IncidenceConfiguration::flags() const {
  std::vector<std::pair<int, int>> out;
  for (int l = 0; l < line_count(); ++l)
    for (int p : lines[static_cast<std::size_t>(l)]) out.emplace_back(p, l);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> IncidenceConfiguration::lines_through(int point) const {
  std::vector<int> out;
  for (int l = 0; l < line_count(); ++l)
    if (std::binary_search(lines[static_cast<std::size_t>(l)].begin(), lines[static_cast<std::size_t>(l)].end(), point))
      out.push_back(l);
  return out;
}

IncidenceConfiguration dual(const IncidenceConfiguration& cfg) {
  std::vector<std::vector<int>> lines(static_cast<std::size_t>(cfg.point_count));
  for (const auto& [p, l] : cfg.flags()) lines[static_cast<std::size_t>(p)].push_back(l);
  // Points on no line would become empty lines; drop them.
  std::erase_if(lines, [](const auto& l) { return l.empty(); });
  return IncidenceConfiguration::make(cfg.line_count(), std::move(lines));
}

Graph levi_graph(const IncidenceConfiguration& cfg) {
  Graph g(cfg.point_count + cfg.line_count());
  for (const auto& [p, l] : cfg.flags()) g.add_edge(p, cfg.point_count + l);
  return g;
}

Graph menger_graph(const IncidenceConfiguration& cfg) {
  std::set<std::pair<int, int>> pairs;
  for (const auto& line : cfg.lines)
    for (std::size_t i = 0; i < line.size(); ++i)
      for (std::size_t j = i + 1; j < line.size(); ++j) pairs.emplace(line[i], line[j]);
  Graph g(cfg.point_count);
  for (const auto& [a, b] : pairs) g.add_edge(a, b);
  if (!cfg.point_names.empty()) g.set_labels(cfg.point_names);
  return g;
}

bool ConfigurationShape::is_symmetric(int n, int r) const {
  return uniform && linear && points == n && lines == n && points_per_line == r && lines_per_point == r;
}

ConfigurationShape configuration_shape(const IncidenceConfiguration& cfg) {
  ConfigurationShape s;
  s.points = cfg.point_count;
  s.lines = cfg.line_count();
  std::set<std::size_t> sizes;
  for (const auto& l : cfg.lines) sizes.insert(l.size());
  std::vector<int> through(static_cast<std::size_t>(cfg.point_count), 0);
  for (const auto& [p, l] : cfg.flags()) ++through[static_cast<std::size_t>(p)];
  const std::set<int> degrees(through.begin(), through.end());
  s.uniform = sizes.size() == 1 && degrees.size() == 1;
  if (s.uniform) {
    s.points_per_line = static_cast<int>(*sizes.begin());
    s.lines_per_point = *degrees.begin();
  }
  s.linear = true;
  std::set<std::pair<int, int>> covered;
  for (const auto& line : cfg.lines)
    for (std::size_t i = 0; i < line.size(); ++i)
      for (std::size_t j = i + 1; j < line.size(); ++j)
        if (!covered.emplace(line[i], line[j]).second) s.linear = false;
  return s;
}

namespace {

std::vector<int> part_colors(const IncidenceConfiguration& cfg) {
  std::vector<int> colors(static_cast<std::size_t>(cfg.point_count + cfg.line_count()), 1);
  std::fill_n(colors.begin(), cfg.point_count, 0);
  return colors;
}

}  // namespace

std::optional<Permutation> self_duality(const IncidenceConfiguration& cfg) {
  if (cfg.point_count != cfg.line_count())
    throw PreconditionFailed("self-duality needs as many points as lines");
  const auto d = dual(cfg);
  if (d.point_count != cfg.point_count || d.line_count() != cfg.line_count()) return std::nullopt;
  // An isomorphism levi(cfg) -> levi(dual) respecting parts sends point p to
  // dual point = line of cfg, and line l to dual line = point of cfg.
  const auto a = levi_graph(cfg);
  const auto b = levi_graph(d);
  const auto colors = part_colors(cfg);
  const auto iso = find_isomorphism(a, b, colors, colors);
  if (!iso) return std::nullopt;
  const int n = cfg.point_count;
  Permutation perm(iso->mapping.size());
  for (int v = 0; v < 2 * n; ++v) {
    const int image = iso->mapping[static_cast<std::size_t>(v)];
    perm[static_cast<std::size_t>(v)] = image < n ? image + n : image - n;
  }
  return perm;
}

bool is_self_dual(const IncidenceConfiguration& cfg) { return self_duality(cfg).has_value(); }

bool is_duality(const IncidenceConfiguration& cfg, std::span<const Vertex> levi_perm) {
  const int n = cfg.point_count;
  if (cfg.line_count() != n || static_cast<int>(levi_perm.size()) != 2 * n) return false;
  for (int v = 0; v < 2 * n; ++v) {
    const int image = levi_perm[static_cast<std::size_t>(v)];
    if ((v < n) == (image < n)) return false;
  }
  return is_automorphism(levi_graph(cfg), levi_perm);
}

std::optional<IsoMapping> configuration_isomorphism(const IncidenceConfiguration& a,
                                                    const IncidenceConfiguration& b) {
  if (a.point_count != b.point_count || a.line_count() != b.line_count()) return std::nullopt;
  return find_isomorphism(levi_graph(a), levi_graph(b), part_colors(a), part_colors(b));
}

}  // namespace cdt
