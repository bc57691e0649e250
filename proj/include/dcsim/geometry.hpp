#pragma once

#include <optional>
#include <vector>

namespace dcsim {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  friend Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
  friend Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
  friend Vec2 operator*(double s, Vec2 v) { return {s * v.x, s * v.y}; }
  friend bool operator==(Vec2, Vec2) = default;
};

double dot(Vec2 a, Vec2 b);
double cross(Vec2 a, Vec2 b);
double norm(Vec2 v);
double distance(Vec2 a, Vec2 b);
Vec2 polar(double radius, double angle_rad);
double deg_to_rad(double deg);
double rad_to_deg(double rad);

/// Wraps an angle in degrees into [-180, 180).
double wrap_degrees(double deg);

/// Convex polygon with counter-clockwise vertices. Closed set: boundary
/// points count as inside.
class ConvexPolygon {
 public:
  ConvexPolygon() = default;
  /// Throws std::invalid_argument for fewer than 3 vertices, zero area,
  /// clockwise winding or a reflex vertex.
  explicit ConvexPolygon(std::vector<Vec2> vertices);

  const std::vector<Vec2>& vertices() const { return vertices_; }
  double area() const;
  Vec2 bbox_min() const;
  Vec2 bbox_max() const;

  /// Signed distance of p from the supporting line of every edge, taken as
  /// the minimum; positive strictly inside, zero on the boundary.
  double inset_distance(Vec2 p) const;
  bool contains(Vec2 p, double tolerance = 1e-9) const;

  /// Distance travelled from p along unit direction dir before leaving the
  /// polygon. p must be inside (within tolerance).
  double exit_distance(Vec2 p, Vec2 dir) const;

  /// True if a short step from boundary/interior point p along dir stays
  /// inside, i.e. dir points strictly into every edge p lies on.
  bool points_inward(Vec2 p, Vec2 dir, double on_edge_tol = 1e-7) const;

 private:
  std::vector<Vec2> vertices_;
  std::vector<Vec2> inward_normals_;  // unit, one per edge i -> i+1
};

}  // namespace dcsim
