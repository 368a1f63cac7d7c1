#pragma once

#include <variant>
#include <vector>

#include "plstab/errors.hpp"

namespace plstab {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

inline Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
inline Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
inline Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }

struct Interval {
  double a = 0.0;
  double b = 0.0;  // requires a <= b
};

// Strictly convex polygon, counterclockwise vertex list.
class Polygon {
 public:
  // Validates: >= 3 vertices, ccw orientation, strictly convex turning.
  explicit Polygon(std::vector<Vec2> vertices);

  // Convex hull of arbitrary points with duplicate/collinear cleanup, then
  // the same validation.  Preferred constructor for computed vertex sets.
  static Polygon hull_of(std::vector<Vec2> points);

  const std::vector<Vec2>& vertices() const { return pts_; }
  std::size_t size() const { return pts_.size(); }

 private:
  Polygon() = default;
  std::vector<Vec2> pts_;
};

using ConvexBody = std::variant<Interval, Polygon>;

// Ambient dimension of the representation: 1 for intervals, 2 for polygons.
int body_dimension(const ConvexBody& k);

double volume(const Interval& k);
double volume(const Polygon& k);
double volume(const ConvexBody& k);

double body_diameter(const ConvexBody& k);
Vec2 body_centroid(const ConvexBody& k);

ConvexBody translate(const ConvexBody& k, Vec2 t);
ConvexBody scale(const ConvexBody& k, double s);  // about the origin

// alpha K + beta C (Minkowski combination); throws MixedVariants.
ConvexBody minkowski_combine(const ConvexBody& k, const ConvexBody& c, double alpha, double beta);

// |K ∩ C| for same-variant bodies.
double intersection_volume(const ConvexBody& k, const ConvexBody& c);

// |K Δ C| = |K| + |C| - 2 |K ∩ C|.
double symmetric_difference_volume(const ConvexBody& k, const ConvexBody& c);

// Signed containment margin: >= 0 when x lies in K (distance-like, positive
// inside).  For polygons: min over edges of the inward cross product / edge
// length; for intervals: min(x - a, b - x).
double containment_margin(const ConvexBody& k, Vec2 x);

bool contains_body(const ConvexBody& outer, const ConvexBody& inner, double tol);

}  // namespace plstab
