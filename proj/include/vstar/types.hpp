// Core state and planner configuration types.
#pragma once

#include <string>

#include "vstar/geometry.hpp"

namespace vstar {

/// One lattice node of the space-time-velocity search: position, heading,
/// forward speed and discrete time index (time = t * tau seconds).
///
/// dir_i/dir_j hold the gcd-reduced lattice index pair of the displacement
/// that produced this state's heading. Headings of lattice-generated states
/// are rational directions, so keying them by the integer pair avoids any
/// float comparison. (0,0) marks the start state whose heading is free.
struct State {
  double x = 0.0;
  double y = 0.0;
  double theta = 0.0;  // radians, in (-pi, pi]
  double v = 0.0;      // m/s, >= 0
  int t = 0;           // time step index

  int dir_i = 0;
  int dir_j = 0;

  Vec2 pos() const { return {x, y}; }
};

enum class HeuristicKind { euclidean, waterflow };

inline std::string to_string(HeuristicKind k) {
  return k == HeuristicKind::euclidean ? "euclidean" : "waterflow";
}

/// Search-level knobs. Distances in meters, times in seconds.
struct PlannerConfig {
  double goal_tolerance = 1.0;  // termination radius around the goal
  double tau = 1.0;             // duration of one planning step
  int t_max = 0;                // planning horizon in steps; 0 = derive from
                                // the start-to-goal distance (see search.hpp)
  HeuristicKind heuristic = HeuristicKind::waterflow;
  bool allow_waiting = true;

  bool require_stop_at_goal = false;  // also demand v == 0 at termination
  bool legacy_radius_rule = false;    // use the r > L/m pruning rule instead
                                      // of the bicycle bound L/tan(delta_max)
  bool angular_rate_check = true;     // cap |phi|/tau at v_max/r_min
  double waterflow_cell = 0.0;        // grid resolution; 0 = m/2
  double focal_factor = 2.0;          // safety ellipse focal distance is
                                      // v_o / (focal_factor * |b|)
  int edge_samples = 0;               // collision samples per edge; 0 = auto
  bool record_expansions = false;     // keep per-expansion trace in stats

  void validate() const {
    if (!(goal_tolerance > 0.0)) throw Error("planner.goal_tolerance must be > 0");
    if (!(tau > 0.0)) throw Error("planner.tau must be > 0");
    if (t_max < 0) throw Error("planner.t_max must be >= 1 (or 0 for auto)");
    if (!(focal_factor > 0.0)) throw Error("planner.focal_factor must be > 0");
    if (waterflow_cell < 0.0) throw Error("planner.waterflow_cell must be >= 0");
    if (edge_samples != 0 && edge_samples < 2)
      throw Error("planner.edge_samples must be >= 2 (or 0 for auto)");
  }
};

}  // namespace vstar
