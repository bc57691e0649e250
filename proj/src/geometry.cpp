#include "dcsim/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace dcsim {

double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
double norm(Vec2 v) { return std::hypot(v.x, v.y); }
double distance(Vec2 a, Vec2 b) { return norm(a - b); }

Vec2 polar(double radius, double angle_rad) {
  return {radius * std::cos(angle_rad), radius * std::sin(angle_rad)};
}

double deg_to_rad(double deg) { return deg * std::numbers::pi / 180.0; }
double rad_to_deg(double rad) { return rad * 180.0 / std::numbers::pi; }

double wrap_degrees(double deg) {
  double w = std::fmod(deg + 180.0, 360.0);
  if (w < 0.0) w += 360.0;
  return w - 180.0;
}

ConvexPolygon::ConvexPolygon(std::vector<Vec2> vertices) : vertices_(std::move(vertices)) {
  const std::size_t n = vertices_.size();
  if (n < 3) throw std::invalid_argument("polygon needs at least 3 vertices");
  if (area() <= 1e-9) throw std::invalid_argument("polygon has zero area or clockwise winding");
  inward_normals_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 a = vertices_[i];
    const Vec2 b = vertices_[(i + 1) % n];
    const Vec2 c = vertices_[(i + 2) % n];
    const Vec2 edge = b - a;
    const double len = norm(edge);
    if (len <= 0.0) throw std::invalid_argument("polygon has a repeated vertex");
    if (cross(edge, c - b) < -1e-12) throw std::invalid_argument("polygon is not convex");
    inward_normals_.push_back({-edge.y / len, edge.x / len});
  }
}

double ConvexPolygon::area() const {
  double twice = 0.0;
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    twice += cross(vertices_[i], vertices_[(i + 1) % vertices_.size()]);
  }
  return 0.5 * twice;
}

Vec2 ConvexPolygon::bbox_min() const {
  Vec2 m{std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity()};
  for (const auto& v : vertices_) m = {std::min(m.x, v.x), std::min(m.y, v.y)};
  return m;
}

Vec2 ConvexPolygon::bbox_max() const {
  Vec2 m{-std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()};
  for (const auto& v : vertices_) m = {std::max(m.x, v.x), std::max(m.y, v.y)};
  return m;
}

double ConvexPolygon::inset_distance(Vec2 p) const {
  double d = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    d = std::min(d, dot(inward_normals_[i], p - vertices_[i]));
  }
  return d;
}

bool ConvexPolygon::contains(Vec2 p, double tolerance) const {
  return inset_distance(p) >= -tolerance;
}

double ConvexPolygon::exit_distance(Vec2 p, Vec2 dir) const {
  double t_exit = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    const double approach = dot(inward_normals_[i], dir);
    if (approach >= 0.0) continue;
    const double slack = std::max(0.0, dot(inward_normals_[i], p - vertices_[i]));
    t_exit = std::min(t_exit, slack / -approach);
  }
  return t_exit;
}

bool ConvexPolygon::points_inward(Vec2 p, Vec2 dir, double on_edge_tol) const {
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    const double slack = dot(inward_normals_[i], p - vertices_[i]);
    if (slack <= on_edge_tol && dot(inward_normals_[i], dir) <= 0.0) return false;
  }
  return true;
}

}  // namespace dcsim
