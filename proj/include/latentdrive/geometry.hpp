#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>
#include <vector>

namespace latentdrive {

inline constexpr double kPi = 3.14159265358979323846;

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  constexpr Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
  constexpr Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
  constexpr Vec2 operator*(double s) const { return {x * s, y * s}; }
  constexpr bool operator==(const Vec2&) const = default;
};

inline constexpr double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline constexpr double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Vec2 a) { return std::hypot(a.x, a.y); }
inline Vec2 unit_from_heading(double h) { return {std::cos(h), std::sin(h)}; }
inline double wrap_angle(double a) {
  a = std::fmod(a + kPi, 2.0 * kPi);
  if (a < 0) a += 2.0 * kPi;
  return a - kPi;
}

/// Rigid transform p -> R(angle) p + offset.
struct Rigid2 {
  double angle = 0.0;
  Vec2 offset{};

  Vec2 apply(Vec2 p) const {
    const double c = std::cos(angle), s = std::sin(angle);
    return {c * p.x - s * p.y + offset.x, s * p.x + c * p.y + offset.y};
  }
};

/// Maps world points into a frame centered on `origin` with `heading` pointing
/// along +y (forward) and +x to the right.
struct EgoFrame {
  Vec2 origin{};
  double heading = 0.0;

  Vec2 to_local(Vec2 p) const {
    const Vec2 d = p - origin;
    const double c = std::cos(heading), s = std::sin(heading);
    const double fwd = c * d.x + s * d.y;
    const double left = -s * d.x + c * d.y;
    return {-left, fwd};
  }
  double heading_to_local(double h) const { return wrap_angle(h - heading + kPi / 2.0); }
};

struct OrientedBox {
  Vec2 center{};
  double heading = 0.0;
  double half_length = 0.0;
  double half_width = 0.0;

  std::array<Vec2, 4> corners() const {
    const Vec2 f = unit_from_heading(heading) * half_length;
    const Vec2 l = Vec2{-std::sin(heading), std::cos(heading)} * half_width;
    return {center + f + l, center + f - l, center - f - l, center - f + l};
  }

  bool contains(Vec2 p) const {
    const Vec2 d = p - center;
    const Vec2 u = unit_from_heading(heading);
    const double a = dot(d, u);
    const double b = cross(u, d);
    return std::abs(a) <= half_length && std::abs(b) <= half_width;
  }

  OrientedBox inflated(double margin) const {
    return {center, heading, half_length + margin, half_width + margin};
  }
};

/// Separating-axis test for two oriented rectangles. Touching counts as overlap.
inline bool boxes_overlap(const OrientedBox& a, const OrientedBox& b) {
  const auto ca = a.corners();
  const auto cb = b.corners();
  const std::array<Vec2, 4> axes{unit_from_heading(a.heading),
                                 unit_from_heading(a.heading + kPi / 2.0),
                                 unit_from_heading(b.heading),
                                 unit_from_heading(b.heading + kPi / 2.0)};
  for (const Vec2& axis : axes) {
    double amin = dot(ca[0], axis), amax = amin;
    double bmin = dot(cb[0], axis), bmax = bmin;
    for (int i = 1; i < 4; ++i) {
      const double pa = dot(ca[i], axis);
      const double pb = dot(cb[i], axis);
      amin = std::min(amin, pa);
      amax = std::max(amax, pa);
      bmin = std::min(bmin, pb);
      bmax = std::max(bmax, pb);
    }
    if (amax < bmin || bmax < amin) return false;
  }
  return true;
}

/// Distance along a unit ray to the first boundary crossing of `box`, if any
/// within [0, max_range]. Origins inside the box report 0.
inline std::optional<double> ray_box_hit(Vec2 origin, Vec2 dir, const OrientedBox& box,
                                         double max_range) {
  const Vec2 u = unit_from_heading(box.heading);
  const Vec2 v{-u.y, u.x};
  const Vec2 d = origin - box.center;
  const double o[2] = {dot(d, u), dot(d, v)};
  const double r[2] = {dot(dir, u), dot(dir, v)};
  const double h[2] = {box.half_length, box.half_width};
  double t_enter = 0.0;
  double t_exit = max_range;
  for (int k = 0; k < 2; ++k) {
    if (std::abs(r[k]) < 1e-15) {
      if (std::abs(o[k]) > h[k]) return std::nullopt;
      continue;
    }
    double t0 = (-h[k] - o[k]) / r[k];
    double t1 = (h[k] - o[k]) / r[k];
    if (t0 > t1) std::swap(t0, t1);
    t_enter = std::max(t_enter, t0);
    t_exit = std::min(t_exit, t1);
    if (t_enter > t_exit) return std::nullopt;
  }
  return t_enter;
}

struct Projection {
  double s = 0.0;        // arc length of the closest point
  double lateral = 0.0;  // signed offset, positive to the left of travel
  double distance = 0.0;
};

/// Piecewise-linear curve parameterized by arc length.
class Polyline {
 public:
  Polyline() = default;
  explicit Polyline(std::vector<Vec2> points) {
    for (const Vec2& p : points) push_back(p);
  }

  void push_back(Vec2 p) {
    if (!points_.empty()) {
      const double step = norm(p - points_.back());
      if (step < 1e-9) return;
      cumulative_.push_back(cumulative_.back() + step);
    } else {
      cumulative_.push_back(0.0);
    }
    points_.push_back(p);
  }

  const std::vector<Vec2>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }
  double length() const { return cumulative_.empty() ? 0.0 : cumulative_.back(); }
  Vec2 front() const { return points_.front(); }
  Vec2 back() const { return points_.back(); }
  bool operator==(const Polyline&) const = default;

  Vec2 point_at(double s) const {
    const std::size_t i = segment_index(s);
    if (points_.size() < 2) return points_.empty() ? Vec2{} : points_[0];
    const double len = cumulative_[i + 1] - cumulative_[i];
    const double t = std::clamp((s - cumulative_[i]) / len, 0.0, 1.0);
    return points_[i] + (points_[i + 1] - points_[i]) * t;
  }

  double heading_at(double s) const {
    if (points_.size() < 2) return 0.0;
    const std::size_t i = segment_index(s);
    const Vec2 d = points_[i + 1] - points_[i];
    return std::atan2(d.y, d.x);
  }

  /// Closest point restricted to segments overlapping the arc window [s_lo, s_hi].
  Projection project(Vec2 p, double s_lo = -1e300, double s_hi = 1e300) const {
    Projection best{0.0, 0.0, 1e300};
    for (std::size_t i = 0; i + 1 < points_.size(); ++i) {
      if (cumulative_[i + 1] < s_lo || cumulative_[i] > s_hi) continue;
      const Vec2 a = points_[i];
      const Vec2 ab = points_[i + 1] - a;
      const double len2 = dot(ab, ab);
      const double t = std::clamp(dot(p - a, ab) / len2, 0.0, 1.0);
      const Vec2 q = a + ab * t;
      const double dist = norm(p - q);
      if (dist < best.distance) {
        const double side = cross(ab, p - a) >= 0 ? 1.0 : -1.0;
        best = {cumulative_[i] + t * std::sqrt(len2), side * dist, dist};
      }
    }
    return best;
  }

 private:
  std::size_t segment_index(double s) const {
    if (points_.size() < 2) return 0;
    auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), s);
    std::size_t i = it == cumulative_.begin() ? 0 : static_cast<std::size_t>(it - cumulative_.begin()) - 1;
    return std::min(i, points_.size() - 2);
  }

  std::vector<Vec2> points_;
  std::vector<double> cumulative_;
};

}  // namespace latentdrive
