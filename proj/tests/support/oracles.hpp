#pragma once

// Independent reference implementations used to check the library.
// None of these call into topopush algorithms beyond plain data types.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <numbers>
#include <queue>
#include <vector>

#include "topopush/geometry.hpp"

namespace oracle {

using topopush::Disk;
using topopush::Rect;
using topopush::Vec2;

inline double dist(Vec2 a, Vec2 b) { return std::hypot(a.x - b.x, a.y - b.y); }

// Prim's algorithm; returns the MST edge lengths sorted ascending.
inline std::vector<double> prim_mst(const std::vector<Vec2>& p) {
  const std::size_t n = p.size();
  std::vector<double> out;
  if (n < 2) return out;
  std::vector<bool> in(n, false);
  std::vector<double> best(n, std::numeric_limits<double>::infinity());
  best[0] = 0.0;
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t u = n;
    for (std::size_t v = 0; v < n; ++v) {
      if (!in[v] && (u == n || best[v] < best[u])) u = v;
    }
    in[u] = true;
    if (step > 0) out.push_back(best[u]);
    for (std::size_t v = 0; v < n; ++v) {
      if (!in[v]) best[v] = std::min(best[v], dist(p[u], p[v]));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Exhaustive MST: enumerates every labeled spanning tree through its Pruefer
// sequence and keeps the lightest. Practical up to n = 8 (8^6 trees).
inline std::vector<double> brute_force_mst(const std::vector<Vec2>& p) {
  const std::size_t n = p.size();
  if (n < 2) return {};
  if (n == 2) return {dist(p[0], p[1])};
  std::vector<std::size_t> seq(n - 2, 0);
  double best_weight = std::numeric_limits<double>::infinity();
  std::vector<double> best_edges;
  for (;;) {
    std::vector<std::size_t> degree(n, 1);
    for (const std::size_t s : seq) ++degree[s];
    std::vector<double> edges;
    double weight = 0.0;
    std::vector<std::size_t> deg = degree;
    for (const std::size_t s : seq) {
      std::size_t leaf = 0;
      while (deg[leaf] != 1) ++leaf;
      const double w = dist(p[leaf], p[s]);
      edges.push_back(w);
      weight += w;
      --deg[leaf];
      --deg[s];
    }
    std::size_t u = n, v = n;
    for (std::size_t k = 0; k < n; ++k) {
      if (deg[k] == 1) (u == n ? u : v) = k;
    }
    const double w = dist(p[u], p[v]);
    edges.push_back(w);
    weight += w;
    if (weight < best_weight) {
      best_weight = weight;
      best_edges = edges;
    }
    std::size_t k = 0;
    while (k < seq.size() && ++seq[k] == n) seq[k++] = 0;
    if (k == seq.size()) break;
  }
  std::sort(best_edges.begin(), best_edges.end());
  return best_edges;
}

// Components of the graph with an edge iff distance <= 2r, by BFS.
// Blocks sorted internally and ordered by smallest member.
inline std::vector<std::vector<std::size_t>> bfs_components(const std::vector<Vec2>& p, double r) {
  const std::size_t n = p.size();
  std::vector<int> label(n, -1);
  std::vector<std::vector<std::size_t>> blocks;
  for (std::size_t s = 0; s < n; ++s) {
    if (label[s] >= 0) continue;
    const int id = static_cast<int>(blocks.size());
    blocks.emplace_back();
    std::queue<std::size_t> q;
    q.push(s);
    label[s] = id;
    while (!q.empty()) {
      const std::size_t u = q.front();
      q.pop();
      blocks.back().push_back(u);
      for (std::size_t v = 0; v < n; ++v) {
        if (label[v] < 0 && dist(p[u], p[v]) <= 2.0 * r) {
          label[v] = id;
          q.push(v);
        }
      }
    }
    std::sort(blocks.back().begin(), blocks.back().end());
  }
  return blocks;
}

// Disk/rectangle contact by sampling the disk boundary and its center.
inline bool sampled_disk_rect(const Disk& d, const Rect& r, int samples = 10000) {
  auto inside = [&](Vec2 q) { return q.x >= r.x_min && q.x <= r.x_max && q.y >= r.y_min && q.y <= r.y_max; };
  if (inside(d.center)) return true;
  for (int k = 0; k < samples; ++k) {
    const double a = 2.0 * std::numbers::pi * k / samples;
    if (inside({d.center.x + d.radius * std::cos(a), d.center.y + d.radius * std::sin(a)})) return true;
  }
  // a rectangle lying entirely inside the disk touches neither boundary nor center
  return dist({r.x_min, r.y_min}, d.center) <= d.radius;
}

// Axis sweep resolution in a frame where the push moves along +y. `hit[i]`
// marks disks the gripper touches; they must end at `floor_y + r_i`.
// Disks are settled in ascending start height: a disk can only be pushed by
// disks that started below it, so one ordered pass reaches the fixpoint.
inline std::vector<double> settle_sweep(const std::vector<Disk>& disks, const std::vector<bool>& hit,
                                        double floor_y) {
  const std::size_t n = disks.size();
  std::vector<std::size_t> order(n);
  for (std::size_t k = 0; k < n; ++k) order[k] = k;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return disks[a].center.y < disks[b].center.y; });
  std::vector<double> y(n);
  for (std::size_t k = 0; k < n; ++k) y[k] = disks[k].center.y;
  for (std::size_t a = 0; a < n; ++a) {
    const std::size_t j = order[a];
    double need = disks[j].center.y;
    if (hit[j]) need = std::max(need, floor_y + disks[j].radius);
    for (std::size_t b = 0; b < a; ++b) {
      const std::size_t i = order[b];
      if (!(disks[i].center.y < disks[j].center.y) || !(y[i] > disks[i].center.y)) continue;
      const double reach = disks[i].radius + disks[j].radius;
      const double dx = disks[j].center.x - disks[i].center.x;
      if (std::abs(dx) >= reach) continue;
      need = std::max(need, y[i] + std::sqrt(reach * reach - dx * dx));
    }
    y[j] = need;
  }
  return y;
}

}  // namespace oracle
