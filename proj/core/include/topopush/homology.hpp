#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "topopush/geometry.hpp"

namespace topopush {

/// Disjoint-set forest with path compression and union by size.
class UnionFind {
 public:
  explicit UnionFind(std::size_t n);

  std::size_t find(std::size_t i);
  /// Merges the sets of a and b; returns the surviving root, or find(a) if already joined.
  std::size_t unite(std::size_t a, std::size_t b);
  std::size_t size_of(std::size_t i) { return size_[find(i)]; }
  std::size_t set_count() const { return sets_; }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
  std::size_t sets_;
};

/// Two connected components meeting as the ball radius grows.
struct MergeEvent {
  double death_radius = 0.0;
  std::vector<std::size_t> component_a;  ///< sorted point indices
  std::vector<std::size_t> component_b;  ///< sorted point indices
  std::size_t survivor = 0;              ///< representative index of the merged component
};

/// Zero-dimensional persistence of a planar point set. Every component is
/// born at radius 0; events lists the deaths in ascending order.
struct PersistenceDiagram {
  std::vector<MergeEvent> events;
  std::size_t point_count = 0;

  std::vector<double> deaths() const;
};

/// Partition of point indices into connected components. Blocks are sorted
/// internally and ordered by their smallest index.
struct Partition {
  std::vector<std::vector<std::size_t>> blocks;

  std::size_t size() const { return blocks.size(); }
};

/// Single-linkage merge events: balls of radius r around two points overlap
/// once their distance is at most 2r, so each minimum-spanning-tree edge of
/// length d contributes a death at d / 2. Equal distances are processed in
/// (i, j) index order. Throws EmptyInput for an empty point set.
PersistenceDiagram persistence_diagram(std::span<const Vec2> points);

/// Connected components of the graph joining i and j iff |p_i - p_j| <= 2r.
Partition components_at(std::span<const Vec2> points, double r);

/// Number of components at radius r; cheaper than components_at when the
/// blocks themselves are not needed.
std::size_t component_count(std::span<const Vec2> points, double r);

/// Persistent radii filtered by the gripper width.
///
/// A death radius d persists when no other death falls in (d, d + nu]. Radii
/// below h are dropped. The largest death always persists. When nothing
/// survives the filter the result is {h}, so callers always get at least
/// one radius. Output is ascending and duplicate free.
std::vector<double> persistent_radii(std::span<const double> deaths, double nu, double h);
std::vector<double> persistent_radii(const PersistenceDiagram& diagram, double nu, double h);

}  // namespace topopush
