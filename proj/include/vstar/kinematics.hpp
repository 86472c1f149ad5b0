// Kinematic bicycle model: turn geometry and feasibility checks used while
// searching, plus the transient steering model used to synthesize
// continuous trajectories from discrete waypoints.
#pragma once

#include <cmath>
#include <optional>
#include <vector>

#include "vstar/geometry.hpp"
#include "vstar/lattice.hpp"

namespace vstar {

struct VehicleParams {
  double L = 2.0;          // wheelbase, m
  double v_max = 4.0;      // max speed, m/s
  double a_max = 1.0;      // max speed change per step, m/s per step
  double delta_max = 0.5;  // angular threshold, rad
  double b = 2.0;          // comfort deceleration, m/s^2 (magnitude is used)
  double k = 0.4;          // steering convergence calibration constant

  void validate() const {
    if (!(L > 0.0)) throw Error("vehicle.wheelbase must be > 0");
    if (!(v_max > 0.0)) throw Error("vehicle.v_max must be > 0");
    if (!(a_max > 0.0)) throw Error("vehicle.a_max must be > 0");
    if (!(delta_max > 0.0 && delta_max < kPi / 2.0))
      throw Error("vehicle.delta_max must be in (0, pi/2)");
    if (b == 0.0) throw Error("vehicle.comfort_deceleration must be nonzero");
    if (!(k > 0.0)) throw Error("vehicle.steering_k must be > 0");
  }
};

/// Minimum feasible turning radius of the bicycle model, L / tan(delta_max).
inline double min_turn_radius(const VehicleParams& p) {
  return p.L / std::tan(p.delta_max);
}

/// Circular-arc geometry of one step. `radius` is empty for straight motion
/// (the explicit "infinite radius" encoding).
struct TurnGeometry {
  double chord = 0.0;           // ||displacement||
  double phi = 0.0;             // signed heading change, (-pi, pi]
  std::optional<double> radius; // empty => straight
  double arc_length = 0.0;

  bool is_straight() const { return !radius.has_value(); }
};

inline constexpr double kStraightPhiEps = 1e-9;

inline TurnGeometry turn_geometry(const Vec2& displacement, double current_heading,
                                  double new_heading) {
  const double chord = displacement.norm();
  if (chord == 0.0) throw Error("turn_geometry: displacement must be nonzero");
  TurnGeometry g;
  g.chord = chord;
  g.phi = wrap_angle(new_heading - current_heading);
  if (std::abs(g.phi) < kStraightPhiEps) {
    g.phi = 0.0;
    g.arc_length = chord;
    return g;
  }
  g.radius = chord / (2.0 * std::sin(std::abs(g.phi) / 2.0));
  g.arc_length = *g.radius * std::abs(g.phi);
  return g;
}

/// Average speed over a step of duration T covering the arc.
inline double speed_from_arc(const TurnGeometry& g, double T) {
  if (!(T > 0.0)) throw Error("speed_from_arc: T must be > 0");
  return g.arc_length / T;
}

enum class FeasibilityReason {
  ok,
  negative_speed,
  accel_bound,
  speed_limit,
  turn_radius,
  angular_rate,
};

struct Feasibility {
  bool ok = true;
  FeasibilityReason reason = FeasibilityReason::ok;

  explicit operator bool() const { return ok; }
};

inline Feasibility reject(FeasibilityReason r) { return {false, r}; }

struct FeasibilityOptions {
  bool legacy_radius_rule = false;  // r > L/m instead of r >= L/tan(delta_max)
  bool angular_rate_check = true;   // |phi|/T <= v_max/r_min
  double tau = 1.0;                 // step duration for the rate check
};

inline constexpr double kFeasEps = 1e-9;

/// Per-step feasibility of a speed transition over the given arc geometry.
inline Feasibility transition_feasible(double v, double v_next, const TurnGeometry& g,
                                       const VehicleParams& params, const LatticeSpec& spec,
                                       const FeasibilityOptions& opt = {}) {
  if (v_next < -kFeasEps) return reject(FeasibilityReason::negative_speed);
  if (std::abs(v_next - v) > params.a_max + kFeasEps)
    return reject(FeasibilityReason::accel_bound);
  if (v_next > params.v_max + kFeasEps) return reject(FeasibilityReason::speed_limit);
  const double r_min =
      opt.legacy_radius_rule ? params.L / spec.m : min_turn_radius(params);
  if (!g.is_straight()) {
    if (*g.radius < r_min * (1.0 - 1e-12)) return reject(FeasibilityReason::turn_radius);
    if (opt.angular_rate_check) {
      const double rate_cap = params.v_max / min_turn_radius(params);
      if (std::abs(g.phi) / opt.tau > rate_cap + kFeasEps)
        return reject(FeasibilityReason::angular_rate);
    }
  }
  return {};
}

/// True iff the angle between the displacement and the current heading is
/// at most delta_max. Forward motion only: reversals always fail for
/// delta_max < pi.
inline bool heading_cone_check(const Vec2& displacement, double heading,
                               double delta_max) {
  if (displacement.norm() == 0.0)
    throw Error("heading_cone_check: displacement must be nonzero");
  const double deviation = std::abs(wrap_angle(displacement.angle() - heading));
  return deviation <= delta_max + 1e-9;
}

/// Exponential steering transient for a front wheel tracing a circle of
/// radius r at angular speed omega: delta(t) = delta_inf * (1 - exp(-beta t)).
struct SteeringProfile {
  double delta_inf = 0.0;  // steady-state steering angle, rad
  double beta = 0.0;       // convergence rate, 1/s
  double omega = 0.0;      // front wheel angular speed, rad/s
  double r = 0.0;          // front wheel path radius, m
};

inline SteeringProfile steering_profile(double r, double omega, const VehicleParams& p) {
  if (!(r > p.L))
    throw Error("steering_profile: front radius r must exceed the wheelbase L");
  SteeringProfile sp;
  sp.r = r;
  sp.omega = omega;
  sp.delta_inf = std::acos(std::sqrt(r * r - p.L * p.L) / r);
  sp.beta = p.k * omega * r / p.L;
  return sp;
}

inline double steering_angle_at(double t, const SteeringProfile& sp) {
  return sp.delta_inf * (1.0 - std::exp(-sp.beta * t));
}

/// Rear wheel speed r*omega*cos(delta(t)); starts at r*omega and converges
/// to omega*sqrt(r^2 - L^2).
inline double rear_speed_at(double t, const SteeringProfile& sp) {
  return sp.r * sp.omega * std::cos(steering_angle_at(t, sp));
}

/// Integrate d(theta)/dt = (r*omega/L) * sin(delta(t)) from 0 to t_end with
/// classic RK4 at fixed step dt. Returns samples at multiples of dt; the
/// last sample lands exactly on t_end. theta(0) = 0.
inline std::vector<double> integrate_heading(double t_end, double dt,
                                             const SteeringProfile& sp,
                                             const VehicleParams& p) {
  if (!(dt > 0.0 && dt <= t_end))
    throw Error("integrate_heading: need 0 < dt <= t_end");
  auto rate = [&](double t) {
    return (sp.r * sp.omega / p.L) * std::sin(steering_angle_at(t, sp));
  };
  std::vector<double> samples;
  samples.push_back(0.0);
  double theta = 0.0;
  double t = 0.0;
  while (t < t_end - 1e-12) {
    const double h = std::min(dt, t_end - t);
    const double k1 = rate(t);
    const double k2 = rate(t + 0.5 * h);
    const double k3 = k2;  // integrand does not depend on theta
    const double k4 = rate(t + h);
    theta += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    t += h;
    samples.push_back(theta);
  }
  return samples;
}

/// Rear axle position for a front wheel at `front` with body heading theta.
inline Vec2 rear_position(const Vec2& front, double theta, double L) {
  return {front.x - L * std::cos(theta), front.y - L * std::sin(theta)};
}

}  // namespace vstar
