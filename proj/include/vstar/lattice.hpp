// Hexagonal lattice geometry: basis vectors, point generation and the
// canonical identity of search states on the lattice.
#pragma once

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <limits>
#include <numeric>
#include <utility>
#include <vector>

#include "vstar/geometry.hpp"
#include "vstar/types.hpp"

namespace vstar {

/// Hexagonal lattice with edge length m. Basis vectors are
/// u1 = [m, 0] and u2 = [m/2, m*sqrt(3)/2]; the angle between them is pi/3.
struct LatticeSpec {
  double m = 1.0;

  void validate() const {
    if (!(m > 0.0)) throw Error("lattice.m must be > 0");
  }

  Vec2 u1() const { return {m, 0.0}; }
  Vec2 u2() const { return {0.5 * m, 0.5 * std::sqrt(3.0) * m}; }

  /// Index bound I_max for one-step neighbour enumeration: the farthest
  /// reachable displacement in one step of duration tau at speed v_max,
  /// in lattice units, plus one.
  int candidate_index_bound(double v_max, double tau) const {
    return static_cast<int>(std::ceil(v_max * tau / m)) + 1;
  }
};

struct LatticeCoord {
  std::int64_t i = 0;
  std::int64_t j = 0;
};

/// p = M * [i, j]^T with M = [u1 | u2].
inline Vec2 lattice_point(const LatticeSpec& spec, const LatticeCoord& c) {
  const double i = static_cast<double>(c.i);
  const double j = static_cast<double>(c.j);
  return {spec.m * (i + 0.5 * j), spec.m * (0.5 * std::sqrt(3.0) * j)};
}

/// Exhaustive minimum Euclidean distance over all distinct lattice points
/// with |i|,|j| <= index_radius. For the pi/3 hex basis this equals m.
inline double min_pairwise_distance(const LatticeSpec& spec, int index_radius) {
  if (index_radius < 1) throw Error("min_pairwise_distance: index_radius must be >= 1");
  std::vector<Vec2> pts;
  pts.reserve(static_cast<std::size_t>(2 * index_radius + 1) *
              static_cast<std::size_t>(2 * index_radius + 1));
  for (int i = -index_radius; i <= index_radius; ++i)
    for (int j = -index_radius; j <= index_radius; ++j)
      pts.push_back(lattice_point(spec, {i, j}));
  double best_sq = std::numeric_limits<double>::infinity();
  for (std::size_t a = 0; a < pts.size(); ++a)
    for (std::size_t b = a + 1; b < pts.size(); ++b)
      best_sq = std::min(best_sq, (pts[a] - pts[b]).norm_sq());
  return std::sqrt(best_sq);
}

/// Area of the hexagonal unit cell: 3*sqrt(3)*m^2.
inline double hex_cell_area(const LatticeSpec& spec) {
  return 3.0 * std::sqrt(3.0) * spec.m * spec.m;
}

/// Reduce a lattice index displacement to its primitive direction pair.
/// (0,0) stays (0,0).
inline std::pair<int, int> reduce_direction(int i, int j) {
  const int g = std::gcd(std::abs(i), std::abs(j));
  if (g == 0) return {0, 0};
  return {i / g, j / g};
}

/// Identity quantization for the search's closed set. Headings are keyed by
/// the reduced integer direction pair carried on the state (exact), speeds
/// are bucketed at speed_quantum, positions snap to the lattice generated
/// from `origin`.
struct QuantizationConfig {
  Vec2 origin;
  double speed_quantum = 0.25;
  double snap_tolerance = 1e-6;

  static QuantizationConfig defaults(const LatticeSpec& spec, double tau, Vec2 origin) {
    QuantizationConfig q;
    q.origin = origin;
    q.speed_quantum = spec.m / (4.0 * tau);
    q.snap_tolerance = 1e-6 * spec.m;
    return q;
  }
};

/// Canonical identity of a state: lattice coordinates, heading direction,
/// speed bucket and time index. Two states compare equal iff all components
/// match.
struct StateKey {
  std::int64_t i = 0;
  std::int64_t j = 0;
  int di = 0;
  int dj = 0;
  std::int64_t v_bucket = 0;
  int t = 0;

  bool operator==(const StateKey&) const = default;
};

struct StateKeyHash {
  std::size_t operator()(const StateKey& k) const {
    std::size_t h = 0xcbf29ce484222325ull;
    auto mix = [&h](std::uint64_t v) {
      h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    };
    mix(static_cast<std::uint64_t>(k.i));
    mix(static_cast<std::uint64_t>(k.j));
    mix(static_cast<std::uint64_t>(static_cast<std::int64_t>(k.di)));
    mix(static_cast<std::uint64_t>(static_cast<std::int64_t>(k.dj)));
    mix(static_cast<std::uint64_t>(k.v_bucket));
    mix(static_cast<std::uint64_t>(static_cast<std::int64_t>(k.t)));
    return h;
  }
};

/// Recover the lattice coordinates of a point generated from `origin`.
/// Throws if the point is farther than the snapping tolerance from the
/// nearest lattice point.
inline LatticeCoord lattice_coords_of(const LatticeSpec& spec, const Vec2& origin,
                                      const Vec2& p, double snap_tolerance) {
  const Vec2 d = p - origin;
  const double jr = 2.0 * d.y / (spec.m * std::sqrt(3.0));
  const std::int64_t j = std::llround(jr);
  const double ir = d.x / spec.m - 0.5 * static_cast<double>(j);
  const std::int64_t i = std::llround(ir);
  const Vec2 snapped = origin + lattice_point(spec, {i, j});
  if (distance(snapped, p) > snap_tolerance)
    throw Error("lattice_coords_of: point is off-lattice beyond the snapping tolerance");
  return {i, j};
}

inline StateKey canonical_state_key(const State& s, const LatticeSpec& spec,
                                    const QuantizationConfig& q) {
  const LatticeCoord c = lattice_coords_of(spec, q.origin, s.pos(), q.snap_tolerance);
  StateKey k;
  k.i = c.i;
  k.j = c.j;
  k.di = s.dir_i;
  k.dj = s.dir_j;
  k.v_bucket = std::llround(s.v / q.speed_quantum);
  k.t = s.t;
  return k;
}

}  // namespace vstar
