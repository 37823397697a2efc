#pragma once

#include <span>
#include <vector>

namespace dubious
{

struct Point2
{
  double x = 0.0;
  double y = 0.0;

  friend constexpr Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
  friend constexpr Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
  friend constexpr Point2 operator*(double s, Point2 p) { return {s * p.x, s * p.y}; }
  friend constexpr bool operator==(Point2, Point2) = default;
};

constexpr double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
constexpr double cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }
constexpr double squared_norm(Point2 p) { return dot(p, p); }
double norm(Point2 p);

bool is_finite(Point2 p);

/// Axis-aligned closed box.
struct Bounds
{
  Point2 min;
  Point2 max;

  /// Throws InvalidArgument unless min < max componentwise.
  void validate() const;

  friend bool operator==(const Bounds&, const Bounds&) = default;
};

/// Convex polygon stored counter-clockwise. Clockwise input is reversed on construction.
class ConvexPolygon
{
public:
  explicit ConvexPolygon(std::vector<Point2> vertices);

  static ConvexPolygon from_bounds(const Bounds& b);

  const std::vector<Point2>& vertices() const { return vertices_; }

  friend bool operator==(const ConvexPolygon&, const ConvexPolygon&) = default;

private:
  std::vector<Point2> vertices_;
};

/// Closed containment: boundary points are inside.
bool point_in_polygon(Point2 p, const ConvexPolygon& poly);

bool point_in_bounds(Point2 p, const Bounds& b);

Point2 clamp_to_bounds(Point2 p, const Bounds& b);

/// True when the polygon and the box share at least one point.
bool intersects(const ConvexPolygon& poly, const Bounds& b);

/// Sum of consecutive segment lengths.
double path_length(std::span<const Point2> points);

}  // namespace dubious
