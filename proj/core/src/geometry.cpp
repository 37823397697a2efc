#include "dubious/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "dubious/error.hpp"

namespace dubious
{

double norm(Point2 p) { return std::hypot(p.x, p.y); }

bool is_finite(Point2 p) { return std::isfinite(p.x) && std::isfinite(p.y); }

void Bounds::validate() const
{
  if (!is_finite(min) || !is_finite(max))
    throw InvalidArgument("bounds must be finite");
  if (!(min.x < max.x) || !(min.y < max.y))
    throw InvalidArgument("bounds require min < max in both coordinates");
}

ConvexPolygon::ConvexPolygon(std::vector<Point2> vertices) : vertices_(std::move(vertices))
{
  const auto n = vertices_.size();
  if (n < 3)
    throw InvalidArgument("polygon needs at least 3 vertices");
  for (std::size_t i = 0; i < n; ++i)
  {
    if (!is_finite(vertices_[i]))
      throw InvalidArgument("polygon vertices must be finite");
    if (vertices_[i] == vertices_[(i + 1) % n])
      throw InvalidArgument("polygon has repeated consecutive vertices");
  }

  bool any_positive = false;
  bool any_negative = false;
  for (std::size_t i = 0; i < n; ++i)
  {
    const Point2 a = vertices_[i];
    const Point2 b = vertices_[(i + 1) % n];
    const Point2 c = vertices_[(i + 2) % n];
    const double turn = cross(b - a, c - b);
    any_positive |= turn > 0.0;
    any_negative |= turn < 0.0;
  }
  if (any_positive && any_negative)
    throw InvalidArgument("non-convex region");
  if (!any_positive && !any_negative)
    throw InvalidArgument("degenerate region (all vertices collinear)");
  if (any_negative)
    std::reverse(vertices_.begin(), vertices_.end());

  // A star-shaped vertex ordering passes the local turn test but winds more than once.
  double winding = 0.0;
  for (std::size_t i = 0; i < n; ++i)
  {
    const Point2 a = vertices_[i];
    const Point2 b = vertices_[(i + 1) % n];
    const Point2 c = vertices_[(i + 2) % n];
    winding += std::atan2(cross(b - a, c - b), dot(b - a, c - b));
  }
  if (std::abs(winding) > 2.0 * std::numbers::pi + 1e-6)
    throw InvalidArgument("non-convex region (self-intersecting)");
}

ConvexPolygon ConvexPolygon::from_bounds(const Bounds& b)
{
  b.validate();
  return ConvexPolygon({b.min, {b.max.x, b.min.y}, b.max, {b.min.x, b.max.y}});
}

bool point_in_polygon(Point2 p, const ConvexPolygon& poly)
{
  const auto& v = poly.vertices();
  const auto n = v.size();
  for (std::size_t i = 0; i < n; ++i)
  {
    if (cross(v[(i + 1) % n] - v[i], p - v[i]) < 0.0)
      return false;
  }
  return true;
}

bool point_in_bounds(Point2 p, const Bounds& b)
{
  return p.x >= b.min.x && p.x <= b.max.x && p.y >= b.min.y && p.y <= b.max.y;
}

Point2 clamp_to_bounds(Point2 p, const Bounds& b)
{
  return {std::clamp(p.x, b.min.x, b.max.x), std::clamp(p.y, b.min.y, b.max.y)};
}

bool intersects(const ConvexPolygon& poly, const Bounds& b)
{
  // Separating axis test over the box axes and the polygon edge normals.
  const auto& v = poly.vertices();
  double lo_x = v[0].x, hi_x = v[0].x, lo_y = v[0].y, hi_y = v[0].y;
  for (const auto& p : v)
  {
    lo_x = std::min(lo_x, p.x);
    hi_x = std::max(hi_x, p.x);
    lo_y = std::min(lo_y, p.y);
    hi_y = std::max(hi_y, p.y);
  }
  if (hi_x < b.min.x || lo_x > b.max.x || hi_y < b.min.y || lo_y > b.max.y)
    return false;

  const Point2 corners[4] = {b.min, {b.max.x, b.min.y}, b.max, {b.min.x, b.max.y}};
  const auto n = v.size();
  for (std::size_t i = 0; i < n; ++i)
  {
    const Point2 edge = v[(i + 1) % n] - v[i];
    bool all_outside = true;
    for (const auto& c : corners)
      all_outside &= cross(edge, c - v[i]) < 0.0;
    if (all_outside)
      return false;
  }
  return true;
}

double path_length(std::span<const Point2> points)
{
  double total = 0.0;
  for (std::size_t i = 1; i < points.size(); ++i)
    total += norm(points[i] - points[i - 1]);
  return total;
}

}  // namespace dubious
