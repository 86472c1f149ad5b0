// Obstacle representation, time-indexed safety zones, and collision queries
// against points and swept arc segments.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "vstar/geometry.hpp"
#include "vstar/kinematics.hpp"
#include "vstar/lattice.hpp"
#include "vstar/types.hpp"

namespace vstar {

struct Circle {
  Vec2 center;
  double radius = 0.0;
};

struct Rect {
  Vec2 min;
  Vec2 max;

  bool contains(const Vec2& p) const {
    return p.x >= min.x && p.x <= max.x && p.y >= min.y && p.y <= max.y;
  }
  double width() const { return max.x - min.x; }
  double height() const { return max.y - min.y; }
};

struct ConvexPolygon {
  std::vector<Vec2> vertices;  // counter-clockwise
};

/// Signed distance to the shape boundary: negative inside, positive outside.
inline double signed_distance(const Circle& c, const Vec2& p) {
  return distance(p, c.center) - c.radius;
}

inline double signed_distance(const Rect& r, const Vec2& p) {
  const double dx = std::max({r.min.x - p.x, 0.0, p.x - r.max.x});
  const double dy = std::max({r.min.y - p.y, 0.0, p.y - r.max.y});
  if (dx > 0.0 || dy > 0.0) return std::hypot(dx, dy);
  const double inside = std::min(std::min(p.x - r.min.x, r.max.x - p.x),
                                 std::min(p.y - r.min.y, r.max.y - p.y));
  return -inside;
}

inline double point_segment_distance(const Vec2& p, const Vec2& a, const Vec2& b) {
  const Vec2 ab = b - a;
  const double len_sq = ab.norm_sq();
  if (len_sq == 0.0) return distance(p, a);
  const double s = clamp01((p - a).dot(ab) / len_sq);
  return distance(p, a + ab * s);
}

inline double signed_distance(const ConvexPolygon& poly, const Vec2& p) {
  const auto& v = poly.vertices;
  bool inside = true;
  double boundary = std::numeric_limits<double>::infinity();
  for (std::size_t a = 0; a < v.size(); ++a) {
    const std::size_t b = (a + 1) % v.size();
    if ((v[b] - v[a]).cross(p - v[a]) < 0.0) inside = false;
    boundary = std::min(boundary, point_segment_distance(p, v[a], v[b]));
  }
  return inside ? -boundary : boundary;
}

/// Static obstacle: a shape plus an inflation margin (the safety radius that
/// absorbs the vehicle extent). A point is blocked when its signed distance
/// to the shape does not exceed the inflation.
struct StaticObstacle {
  std::variant<Circle, Rect, ConvexPolygon> shape;
  double inflation = 0.0;

  double signed_distance_to(const Vec2& p) const {
    return std::visit([&](const auto& s) { return signed_distance(s, p); }, shape);
  }
  bool blocks(const Vec2& p, double erosion = 0.0) const {
    return signed_distance_to(p) <= inflation - erosion;
  }
  void validate(const std::string& where) const {
    if (inflation < 0.0) throw Error(where + ": inflation must be >= 0");
    if (const auto* c = std::get_if<Circle>(&shape)) {
      if (!(c->radius > 0.0)) throw Error(where + ": circle radius must be > 0");
    } else if (const auto* r = std::get_if<Rect>(&shape)) {
      if (!(r->min.x < r->max.x && r->min.y < r->max.y))
        throw Error(where + ": rect min must be componentwise below max");
    } else {
      const auto& poly = std::get<ConvexPolygon>(shape);
      const auto& v = poly.vertices;
      if (v.size() < 3) throw Error(where + ": polygon needs >= 3 vertices");
      int sign = 0;
      for (std::size_t a = 0; a < v.size(); ++a) {
        const Vec2 e1 = v[(a + 1) % v.size()] - v[a];
        const Vec2 e2 = v[(a + 2) % v.size()] - v[(a + 1) % v.size()];
        const double cr = e1.cross(e2);
        if (cr == 0.0) continue;
        const int s = cr > 0.0 ? 1 : -1;
        if (sign == 0) sign = s;
        else if (sign != s) throw Error(where + ": polygon must be convex");
      }
      if (sign < 0) throw Error(where + ": polygon vertices must be counter-clockwise");
    }
  }
};

/// Moving obstacle on a predefined fixed trajectory, sampled at t*tau for
/// t = 0..horizon. safety_radius is the stationary safety zone radius s.
struct MovingObstacle {
  std::vector<Vec2> trajectory;
  double safety_radius = 1.0;

  int horizon() const { return static_cast<int>(trajectory.size()) - 1; }

  Vec2 position_at(int t) const {
    if (t < 0 || t > horizon())
      throw Error("MovingObstacle::position_at: t outside trajectory horizon");
    return trajectory[static_cast<std::size_t>(t)];
  }

  /// Central finite difference, one-sided at the trajectory ends.
  Vec2 velocity_at(int t, double tau) const {
    if (t < 0 || t > horizon())
      throw Error("MovingObstacle::velocity_at: t outside trajectory horizon");
    const int lo = std::max(0, t - 1);
    const int hi = std::min(horizon(), t + 1);
    if (hi == lo) return {0.0, 0.0};
    return (trajectory[static_cast<std::size_t>(hi)] -
            trajectory[static_cast<std::size_t>(lo)]) /
           (static_cast<double>(hi - lo) * tau);
  }

  void validate(const std::string& where) const {
    if (trajectory.empty()) throw Error(where + ": trajectory must be non-empty");
    if (!(safety_radius > 0.0)) throw Error(where + ": safety_radius must be > 0");
  }
};

/// Elliptical safety zone around a moving obstacle. Stationary obstacles get
/// the circle semi_major == semi_minor == s; motion stretches the major axis
/// along the velocity direction.
struct SafetyZone {
  Vec2 center;
  double semi_minor = 1.0;
  double semi_major = 1.0;
  double orientation = 0.0;  // major axis direction, rad

  bool contains(const Vec2& p) const {
    const Vec2 d = (p - center).rotated(-orientation);
    const double nx = d.x / semi_major;
    const double ny = d.y / semi_minor;
    return nx * nx + ny * ny <= 1.0;
  }
};

/// Safety zone of `obstacle` at step index t. The focal distance is
/// v_o / (focal_factor * |b|) with the paper's factor 2 as the default;
/// tau converts per-step trajectory samples into a speed in m/s.
inline SafetyZone safety_zone_at(const MovingObstacle& obstacle, int t,
                                 const VehicleParams& params, double tau = 1.0,
                                 double focal_factor = 2.0) {
  SafetyZone z;
  z.center = obstacle.position_at(t);
  const Vec2 vel = obstacle.velocity_at(t, tau);
  const double v_o = vel.norm();
  z.semi_minor = obstacle.safety_radius;
  z.orientation = v_o > 0.0 ? vel.angle() : 0.0;
  const double c = v_o / (focal_factor * std::abs(params.b));
  z.semi_major = std::sqrt(obstacle.safety_radius * obstacle.safety_radius + c * c);
  return z;
}

struct Scenario;  // fwd

/// Map bounds plus all obstacles. Positions outside the bounds are blocked.
struct Scenario {
  Rect bounds;
  std::vector<StaticObstacle> static_obstacles;
  std::vector<MovingObstacle> moving_obstacles;
  State start;
  Vec2 goal;
  VehicleParams vehicle;
  LatticeSpec lattice;
  PlannerConfig planner;

  void validate() const;
};

inline bool point_blocked(const Vec2& p, int t, const Scenario& sc) {
  if (!sc.bounds.contains(p)) return true;
  for (const auto& ob : sc.static_obstacles)
    if (ob.blocks(p)) return true;
  for (const auto& mo : sc.moving_obstacles) {
    const int ti = std::min(t, mo.horizon());
    if (safety_zone_at(mo, ti, sc.vehicle, sc.planner.tau, sc.planner.focal_factor)
            .contains(p))
      return true;
  }
  return false;
}

inline bool point_blocked(const State& s, const Scenario& sc) {
  return point_blocked(s.pos(), s.t, sc);
}

/// Point on the transition path at arc-length fraction s in [0, 1]. Straight
/// transitions interpolate the chord; turning transitions follow the circular
/// arc through both endpoints whose tangent rotates by phi.
inline Vec2 transition_point(const Vec2& from, const Vec2& to, const TurnGeometry& g,
                             double s) {
  if (g.is_straight()) return from + (to - from) * s;
  const double chord_dir = (to - from).angle();
  const double entry_tangent = chord_dir - 0.5 * g.phi;
  const double side = g.phi > 0.0 ? 1.0 : -1.0;
  const Vec2 center = from + *g.radius * unit_from_angle(entry_tangent + side * kPi / 2.0);
  return center + (from - center).rotated(s * g.phi);
}

/// Default number of collision samples along an edge: spacing of a quarter
/// lattice cell, at least 4.
inline int default_edge_samples(double arc_length, double m) {
  return std::max(4, static_cast<int>(std::ceil(arc_length / (m / 4.0))));
}

/// Samples the edge uniformly in arc length at n_samples points (endpoints
/// included), interpolating time linearly across the step and rounding to
/// the nearest obstacle-trajectory sample.
inline bool transition_blocked(const State& from, const State& to, const TurnGeometry& g,
                               const Scenario& sc, int n_samples) {
  if (n_samples < 2) throw Error("transition_blocked: n_samples must be >= 2");
  for (int k = 0; k < n_samples; ++k) {
    const double s = static_cast<double>(k) / static_cast<double>(n_samples - 1);
    const Vec2 p = transition_point(from.pos(), to.pos(), g, s);
    const int t = static_cast<int>(std::llround(static_cast<double>(from.t) + s));
    if (point_blocked(p, t, sc)) return true;
  }
  return false;
}

inline void Scenario::validate() const {
  if (!(bounds.min.x < bounds.max.x && bounds.min.y < bounds.max.y))
    throw Error("scenario.bounds: min must be componentwise below max");
  vehicle.validate();
  lattice.validate();
  planner.validate();
  for (std::size_t i = 0; i < static_obstacles.size(); ++i)
    static_obstacles[i].validate("scenario.static_obstacles[" + std::to_string(i) + "]");
  for (std::size_t i = 0; i < moving_obstacles.size(); ++i)
    moving_obstacles[i].validate("scenario.moving_obstacles[" + std::to_string(i) + "]");
  if (!bounds.contains(goal)) throw Error("scenario.goal: outside map bounds");
  if (!bounds.contains(start.pos())) throw Error("scenario.start: outside map bounds");
  if (start.t != 0) throw Error("scenario.start: t must be 0");
  if (start.v < 0.0 || start.v > vehicle.v_max)
    throw Error("scenario.start: v must be within [0, v_max]");
  if (point_blocked(start.pos(), 0, *this))
    throw Error("scenario.start: blocked at t = 0");
}

}  // namespace vstar
