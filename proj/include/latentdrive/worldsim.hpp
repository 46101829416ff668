#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "latentdrive/geometry.hpp"
#include "latentdrive/image.hpp"

// Seeded top-down urban driving world: grid road network, routed NPC traffic,
// a kinematic-bicycle ego vehicle and ego-centric sensor rendering.
namespace latentdrive::sim {

struct LaneSegment {
  int id = 0;
  int from_node = 0;
  int to_node = 0;
  Polyline centerline;
  bool operator==(const LaneSegment&) const = default;
};

struct Intersection {
  int id = 0;
  Vec2 position{};
  std::vector<int> segments;  // incident lane segments, incoming and outgoing
  bool operator==(const Intersection&) const = default;
};

/// Rectangle of drivable surface around the axis a->b, extended by `extend`
/// past both ends so that junction squares are covered.
struct RoadStrip {
  Vec2 a{};
  Vec2 b{};
  double half_width = 0.0;
  double extend = 0.0;
  bool operator==(const RoadStrip&) const = default;

  bool contains(Vec2 p) const;
};

struct MapSpec {
  double size_m = 0.0;
  double lane_width = 3.5;
  double junction_trim = 5.5;  // distance from a node centre to where lane segments start
  std::vector<LaneSegment> lane_segments;
  std::vector<Intersection> intersections;  // indexed by node id
  std::vector<RoadStrip> drivable_region;
  std::vector<std::vector<int>> route_graph;  // successors per lane segment
  bool operator==(const MapSpec&) const = default;

  bool is_drivable(Vec2 p) const;
};

/// Grid road network of two-way, one-lane-per-direction roads (right-hand
/// traffic). Throws ConfigError when size_m < 100.
MapSpec generate_map(std::uint64_t seed, double size_m, double lane_width = 3.5);

/// Interior of a junction traversed by a track, as an arc-length interval.
struct JunctionSpan {
  int node = 0;
  double s_begin = 0.0;
  double s_end = 0.0;
  bool operator==(const JunctionSpan&) const = default;
};

/// A route: the concatenated waypoint polyline plus the segment ids it follows.
struct Track {
  Polyline line;
  std::vector<int> segments;
  std::vector<JunctionSpan> junctions;
  bool truncated = false;
  bool operator==(const Track&) const = default;
};

Polyline connector_between(const MapSpec& map, int from_segment, int to_segment);

/// Appends one junction connector and a randomly chosen successor segment.
/// Returns false (and sets `truncated`) when the last segment has no successor.
bool extend_track(const MapSpec& map, Track& track, std::mt19937_64& rng);

/// Random walk over route_graph starting at the beginning of `start_segment`
/// until the polyline is at least `min_length` long. Throws ContractError for an
/// unknown segment; a dead end yields the maximal prefix with `truncated` set.
Track plan_route(const MapSpec& map, int start_segment, std::mt19937_64& rng,
                 double min_length = 700.0);

struct VehicleState {
  Vec2 position{};
  double heading = 0.0;
  double v_lon = 0.0;
  double length = 4.5;
  double width = 2.0;
  double steer_angle = 0.0;
  bool operator==(const VehicleState&) const = default;

  OrientedBox box() const { return {position, heading, length / 2.0, width / 2.0}; }
};

struct Action {
  double accel_cmd = 0.0;
  double steer_cmd = 0.0;

  Action clamped() const;
};

struct Pose {
  Vec2 position{};
  double heading = 0.0;
  bool operator==(const Pose&) const = default;
};

struct Npc {
  VehicleState vehicle;
  Track track;
  double s = 0.0;               // arc position of the box centre on the track
  int held_junction = -1;       // node id reserved by this vehicle, -1 for none
  std::vector<Pose> history;    // most recent first
  bool operator==(const Npc&) const = default;
};

enum class DoneReason { kNone, kCollision, kOutOfLane, kTimeout };
std::string to_string(DoneReason r);

struct EnvConfig {
  std::uint64_t map_seed = 0;
  double map_size_m = 200.0;
  double lane_width = 3.5;
  int npc_count = 8;
  int image_size = 64;
  int max_episode_length = 500;
  double dt = 0.1;

  // Ego dynamics.
  double a_max = 3.0;
  double steer_max = 0.3;
  double wheelbase = 2.7;
  double v_cap = 20.0;
  double out_of_lane_margin = 0.5;

  // NPC behaviour.
  double npc_cruise_speed = 6.0;
  double npc_accel = 2.0;
  double npc_comfort_brake = 4.0;
  double npc_lookahead = 20.0;

  double route_min_length = 700.0;
  int placement_retries = 200;

  // Rendering.
  double view_range_m = 40.0;
  int lidar_rays = 360;
  double lidar_range_m = 20.0;
  double lidar_ring_spacing_m = 1.0;
  double camera_fov_deg = 90.0;
  double camera_near_m = 2.0;
  double camera_far_m = 40.0;
  int history_len = 3;
  int history_stride = 2;

  /// Throws ConfigError on out-of-range values.
  void validate() const;
};

struct EnvState {
  VehicleState ego;
  Track ego_route;
  double ego_progress = 0.0;  // arc position of the ego projection on its route
  std::vector<Npc> npcs;
  std::vector<int> junction_holder;  // per node: NPC index holding it, -1 when free
  int step_count = 0;
  bool done = false;
  std::mt19937_64 rng;
  bool operator==(const EnvState&) const = default;
};

struct Observation {
  Image camera;
  Image lidar;
  bool operator==(const Observation&) const = default;
};

struct Mask {
  Image image;
  bool operator==(const Mask&) const = default;
};

/// Per-term values of the driving reward. The weights are fixed:
/// r = 200 collision + v_lon + 10 fast + out - 5 alpha^2 + 0.2 lat - 0.1.
struct RewardBreakdown {
  double collision = 0.0;  // -1 on collision
  double v_lon = 0.0;
  double fast = 0.0;  // -1 above the desired speed
  double out = 0.0;   // -1 when out of lane
  double steer = 0.0;  // alpha in rad
  double lat = 0.0;   // -|alpha| v_lon^2
  bool operator==(const RewardBreakdown&) const = default;

  double total() const;
};

inline constexpr double kDesiredSpeed = 8.0;

RewardBreakdown compute_reward(bool collided, bool out_of_lane, double v_lon, double steer_angle);

struct StepResult {
  Observation observation;
  Mask mask;
  double reward = 0.0;
  RewardBreakdown reward_breakdown;
  bool done = false;
  DoneReason done_reason = DoneReason::kNone;
  bool operator==(const StepResult&) const = default;
};

/// Places the ego and NPCs for a new episode. Throws PlacementError when the
/// requested NPC count cannot be placed without overlap.
std::pair<EnvState, StepResult> reset(const MapSpec& map, const EnvConfig& config,
                                      std::uint64_t seed);

/// Advances one tick of `config.dt`. Throws UsageError when the episode is over.
StepResult step(const MapSpec& map, const EnvConfig& config, EnvState& state, Action action);

/// Longitudinal accelerations for every NPC; updates junction reservations.
std::vector<double> npc_policy(const MapSpec& map, const EnvConfig& config, EnvState& state);

/// Moves every NPC one tick with the accelerations from npc_policy.
void advance_npcs(const MapSpec& map, const EnvConfig& config, EnvState& state,
                  const std::vector<double>& accels);

bool ego_collides(const EnvState& state);
double ego_lateral_offset(const EnvState& state);

/// Renders observation and mask for the current state (no transition).
StepResult observe(const MapSpec& map, const EnvConfig& config, const EnvState& state);

/// Applies a rigid transform to every world-frame quantity (map and state).
void transform_world(MapSpec& map, EnvState& state, const Rigid2& t);

/// Convenience owner of a map, a config and one episode's state.
class DrivingEnv {
 public:
  explicit DrivingEnv(EnvConfig config);

  StepResult reset(std::uint64_t seed);
  StepResult step(Action action);

  const EnvConfig& config() const { return config_; }
  const MapSpec& map() const { return map_; }
  const EnvState& state() const { return state_; }
  EnvState& mutable_state() { return state_; }

 private:
  EnvConfig config_;
  MapSpec map_;
  EnvState state_;
};

}  // namespace latentdrive::sim
