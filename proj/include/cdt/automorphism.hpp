#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "cdt/graph.hpp"

namespace cdt {

/// perm[v] is the image of v.
using Permutation = std::vector<Vertex>;

struct GroupDescription {
  std::vector<Permutation> generators;
  std::uint64_t order = 1;
  /// Base points of the stabiliser chain and the orbit length at each level;
  /// order is the product of the orbit lengths.
  std::vector<Vertex> base;
  std::vector<std::uint64_t> orbit_lengths;
};

struct IsoMapping {
  Permutation mapping;  // vertex of the first graph -> vertex of the second
};

/// Automorphism group of g, optionally restricted to colour-preserving
/// permutations. Deterministic for a fixed vertex numbering.
GroupDescription automorphism_group(const Graph& g, std::span<const int> colors = {});

/// Colour- and adjacency-preserving bijection a -> b, if one exists.
std::optional<IsoMapping> find_isomorphism(const Graph& a, const Graph& b,
                                           std::span<const int> colors_a = {},
                                           std::span<const int> colors_b = {});

std::optional<IsoMapping> are_isomorphic(const Graph& a, const Graph& b);

/// An automorphism of g sending each prescribed.first to prescribed.second.
std::optional<Permutation> extend_to_automorphism(
    const Graph& g, std::span<const std::pair<Vertex, Vertex>> prescribed,
    std::span<const int> colors = {});

bool is_automorphism(const Graph& g, std::span<const Vertex> perm);
bool is_isomorphism(const Graph& a, const Graph& b, std::span<const Vertex> mapping);

Permutation compose(std::span<const Vertex> first, std::span<const Vertex> then);
Permutation inverse(std::span<const Vertex> perm);

/// Orbit of a point under the group generated by gens, sorted.
std::vector<Vertex> orbit(std::span<const Permutation> gens, Vertex point);

/// Orbit of an ordered tuple (e.g. an arc) under the generated group.
std::vector<std::vector<Vertex>> tuple_orbit(std::span<const Permutation> gens,
                                             const std::vector<Vertex>& tuple);

/// Orbit of a vertex set (acted on setwise) under the generated group.
std::vector<std::vector<Vertex>> set_orbit(std::span<const Permutation> gens,
                                           std::vector<Vertex> set);

/// Largest s such that the group acts transitively on s-arcs. Throws
/// PreconditionFailed when the group is not vertex-transitive.
int arc_transitivity(const Graph& g, const GroupDescription& aut);

/// All s-arcs (walks of s steps without immediate reversal).
std::vector<std::vector<Vertex>> s_arcs(const Graph& g, int s);

}  // namespace cdt
