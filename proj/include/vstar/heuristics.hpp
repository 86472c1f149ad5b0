// Admissible time-to-go estimators: the Euclidean baseline and the waterflow
// cost field flooded outward from the goal through free space.
#pragma once

#include <cmath>
#include <fstream>
#include <limits>
#include <queue>
#include <vector>

#include "vstar/environment.hpp"
#include "vstar/geometry.hpp"

namespace vstar {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// Straight-line travel time lower bound: ||p - goal|| / v_max.
inline double euclidean_h(const Vec2& p, const Vec2& goal, double v_max) {
  if (!(v_max > 0.0)) throw Error("euclidean_h: v_max must be > 0");
  return distance(p, goal) / v_max;
}

/// Precomputed grid of geodesic distances to the goal through free space,
/// in meters. Occupied and unreachable cells hold +inf. The grid blocks a
/// cell only when it lies entirely inside an inflated static obstacle, so
/// every continuum-free point sits in a free cell and the geodesic stays an
/// underestimate of any collision-free path length.
struct HeuristicField {
  Vec2 origin;
  double cell = 0.5;
  int width = 0;
  int height = 0;
  std::vector<double> values;                    // row-major, [iy * width + ix]
  double admissibility_scale = std::cos(kPi / 8.0);  // kappa

  bool in_bounds(const Vec2& p) const {
    return p.x >= origin.x && p.y >= origin.y &&
           p.x <= origin.x + static_cast<double>(width) * cell &&
           p.y <= origin.y + static_cast<double>(height) * cell;
  }

  int cell_index_of(const Vec2& p) const {
    if (!in_bounds(p)) throw Error("HeuristicField: point outside field bounds");
    int ix = static_cast<int>(std::floor((p.x - origin.x) / cell));
    int iy = static_cast<int>(std::floor((p.y - origin.y) / cell));
    ix = std::min(std::max(ix, 0), width - 1);
    iy = std::min(std::max(iy, 0), height - 1);
    return iy * width + ix;
  }

  double value_at(const Vec2& p) const { return values[static_cast<std::size_t>(cell_index_of(p))]; }

  Vec2 cell_center(int ix, int iy) const {
    return {origin.x + (static_cast<double>(ix) + 0.5) * cell,
            origin.y + (static_cast<double>(iy) + 0.5) * cell};
  }
};

/// Priority-ordered flood (Dijkstra) from the goal cell over 8-connected
/// free cells with edge weights cell (orthogonal) and cell*sqrt(2)
/// (diagonal). Static obstacles only; movers are intentionally ignored so
/// the field stays an underestimate over time.
inline HeuristicField build_waterflow(const Scenario& sc, double cell) {
  if (!(cell > 0.0)) throw Error("build_waterflow: cell must be > 0");
  HeuristicField f;
  f.origin = sc.bounds.min;
  f.cell = cell;
  f.width = std::max(1, static_cast<int>(std::ceil(sc.bounds.width() / cell)));
  f.height = std::max(1, static_cast<int>(std::ceil(sc.bounds.height() / cell)));
  const std::size_t n = static_cast<std::size_t>(f.width) * static_cast<std::size_t>(f.height);
  f.values.assign(n, kInf);

  // Cell blocked iff fully inside an inflated obstacle: center deeper than
  // half the cell diagonal.
  const double erosion = cell * std::sqrt(2.0) / 2.0;
  std::vector<char> occupied(n, 0);
  for (int iy = 0; iy < f.height; ++iy)
    for (int ix = 0; ix < f.width; ++ix) {
      const Vec2 c = f.cell_center(ix, iy);
      for (const auto& ob : sc.static_obstacles)
        if (ob.blocks(c, erosion)) {
          occupied[static_cast<std::size_t>(iy * f.width + ix)] = 1;
          break;
        }
    }

  const int goal_idx = f.cell_index_of(sc.goal);
  if (occupied[static_cast<std::size_t>(goal_idx)])
    throw Error("build_waterflow: goal cell is occupied");

  using Entry = std::pair<double, int>;  // (distance, cell index)
  std::priority_queue<Entry, std::vector<Entry>, std::greater<Entry>> heap;
  f.values[static_cast<std::size_t>(goal_idx)] = 0.0;
  heap.push({0.0, goal_idx});

  const double w_ortho = cell;
  const double w_diag = cell * std::sqrt(2.0);
  while (!heap.empty()) {
    const auto [d, idx] = heap.top();
    heap.pop();
    if (d > f.values[static_cast<std::size_t>(idx)]) continue;  // stale
    const int ix = idx % f.width;
    const int iy = idx / f.width;
    for (int dy = -1; dy <= 1; ++dy)
      for (int dx = -1; dx <= 1; ++dx) {
        if (dx == 0 && dy == 0) continue;
        const int nx = ix + dx;
        const int ny = iy + dy;
        if (nx < 0 || ny < 0 || nx >= f.width || ny >= f.height) continue;
        const int nidx = ny * f.width + nx;
        if (occupied[static_cast<std::size_t>(nidx)]) continue;
        const double nd = d + ((dx == 0 || dy == 0) ? w_ortho : w_diag);
        if (nd < f.values[static_cast<std::size_t>(nidx)]) {
          f.values[static_cast<std::size_t>(nidx)] = nd;
          heap.push({nd, nidx});
        }
      }
  }
  return f;
}

/// Waterflow time-to-go: the kappa-scaled grid geodesic floored by the
/// Euclidean bound. +inf when the containing cell cannot reach the goal.
inline double waterflow_h(const HeuristicField& field, const Vec2& p, const Vec2& goal,
                          double v_max) {
  const double e = euclidean_h(p, goal, v_max);
  const double g = field.value_at(p);
  if (g == kInf) return kInf;
  return std::max(e, field.admissibility_scale * g / v_max);
}

/// Debug export as an ASCII portable graymap. Darker pixels are closer to
/// the goal; occupied/unreachable cells are white.
inline void write_pgm(const HeuristicField& f, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("write_pgm: cannot open " + path);
  double vmax = 0.0;
  for (double v : f.values)
    if (v != kInf) vmax = std::max(vmax, v);
  out << "P2\n" << f.width << " " << f.height << "\n255\n";
  for (int iy = f.height - 1; iy >= 0; --iy) {
    for (int ix = 0; ix < f.width; ++ix) {
      const double v = f.values[static_cast<std::size_t>(iy * f.width + ix)];
      int gray = 255;
      if (v != kInf && vmax > 0.0)
        gray = static_cast<int>(std::lround(235.0 * v / vmax));
      else if (v == 0.0)
        gray = 0;
      out << gray << (ix + 1 == f.width ? "" : " ");
    }
    out << "\n";
  }
}

}  // namespace vstar
