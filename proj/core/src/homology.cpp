#include "topopush/homology.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>

#include "topopush/errors.hpp"

namespace topopush {

UnionFind::UnionFind(std::size_t n) : parent_(n), size_(n, 1), sets_(n) {
  std::iota(parent_.begin(), parent_.end(), std::size_t{0});
}

std::size_t UnionFind::find(std::size_t i) {
  std::size_t root = i;
  while (parent_[root] != root) root = parent_[root];
  while (parent_[i] != root) {
    const std::size_t next = parent_[i];
    parent_[i] = root;
    i = next;
  }
  return root;
}

std::size_t UnionFind::unite(std::size_t a, std::size_t b) {
  a = find(a);
  b = find(b);
  if (a == b) return a;
  // larger set wins; on equal size the smaller index survives
  if (size_[a] < size_[b] || (size_[a] == size_[b] && b < a)) std::swap(a, b);
  parent_[b] = a;
  size_[a] += size_[b];
  --sets_;
  return a;
}

std::vector<double> PersistenceDiagram::deaths() const {
  std::vector<double> out;
  out.reserve(events.size());
  for (const auto& e : events) out.push_back(e.death_radius);
  return out;
}

namespace {

struct Edge {
  double length;
  std::size_t i;
  std::size_t j;
};

std::vector<Edge> all_pairs(std::span<const Vec2> points) {
  std::vector<Edge> edges;
  edges.reserve(points.size() * (points.size() - 1) / 2);
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      edges.push_back({distance(points[i], points[j]), i, j});
    }
  }
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
    if (a.length != b.length) return a.length < b.length;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  });
  return edges;
}

std::vector<std::size_t> members_of(UnionFind& uf, std::size_t root, std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < n; ++k) {
    if (uf.find(k) == root) out.push_back(k);
  }
  return out;
}

}  // namespace

PersistenceDiagram persistence_diagram(std::span<const Vec2> points) {
  if (points.empty()) throw EmptyInput("persistence_diagram: empty point set");
  PersistenceDiagram diag;
  diag.point_count = points.size();
  if (points.size() == 1) return diag;

  UnionFind uf(points.size());
  for (const Edge& e : all_pairs(points)) {
    const std::size_t ra = uf.find(e.i);
    const std::size_t rb = uf.find(e.j);
    if (ra == rb) continue;
    MergeEvent ev;
    ev.death_radius = e.length / 2.0;
    ev.component_a = members_of(uf, ra, points.size());
    ev.component_b = members_of(uf, rb, points.size());
    ev.survivor = uf.unite(ra, rb);
    diag.events.push_back(std::move(ev));
    if (uf.set_count() == 1) break;
  }
  return diag;
}

Partition components_at(std::span<const Vec2> points, double r) {
  UnionFind uf(points.size());
  const double threshold = 2.0 * r;
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      if (distance(points[i], points[j]) <= threshold) uf.unite(i, j);
    }
  }
  Partition part;
  std::vector<std::size_t> block_of(points.size(), SIZE_MAX);
  for (std::size_t k = 0; k < points.size(); ++k) {
    const std::size_t root = uf.find(k);
    if (block_of[root] == SIZE_MAX) {
      block_of[root] = part.blocks.size();
      part.blocks.emplace_back();
    }
    part.blocks[block_of[root]].push_back(k);
  }
  return part;
}

std::size_t component_count(std::span<const Vec2> points, double r) {
  UnionFind uf(points.size());
  const double threshold = 2.0 * r;
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      if (distance(points[i], points[j]) <= threshold) uf.unite(i, j);
    }
  }
  return uf.set_count();
}

std::vector<double> persistent_radii(std::span<const double> deaths, double nu, double h) {
  std::vector<double> sorted(deaths.begin(), deaths.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  std::vector<double> out;
  for (std::size_t k = 0; k < sorted.size(); ++k) {
    const double d = sorted[k];
    // sorted is strictly increasing, so only the next death can fall in (d, d + nu]
    const bool persists = k + 1 == sorted.size() || sorted[k + 1] > d + nu;
    if (persists && d >= h) out.push_back(d);
  }
  if (out.empty()) out.push_back(h);
  return out;
}

std::vector<double> persistent_radii(const PersistenceDiagram& diagram, double nu, double h) {
  const auto d = diagram.deaths();
  return persistent_radii(std::span<const double>(d), nu, h);
}

}  // namespace topopush
