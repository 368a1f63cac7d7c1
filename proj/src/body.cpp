#include "plstab/body.hpp"

#include <algorithm>
#include <cmath>

namespace plstab {

namespace {

double coord_scale(const std::vector<Vec2>& pts) {
  double s = 1.0;
  for (const Vec2& p : pts) s = std::max({s, std::abs(p.x), std::abs(p.y)});
  return s;
}

double shoelace(const std::vector<Vec2>& pts) {
  double twice = 0.0;
  const std::size_t n = pts.size();
  for (std::size_t i = 0; i < n; ++i) twice += cross(pts[i], pts[(i + 1) % n]);
  return 0.5 * twice;
}

std::vector<Vec2> convex_hull(std::vector<Vec2> pts) {
  std::sort(pts.begin(), pts.end(), [](Vec2 a, Vec2 b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  });
  pts.erase(std::unique(pts.begin(), pts.end(),
                        [](Vec2 a, Vec2 b) { return a.x == b.x && a.y == b.y; }),
            pts.end());
  const std::size_t n = pts.size();
  if (n < 3) return pts;
  const double eps = 1e-12 * coord_scale(pts) * coord_scale(pts);
  std::vector<Vec2> hull(2 * n);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {  // lower
    while (k >= 2 && cross(hull[k - 1] - hull[k - 2], pts[i] - hull[k - 2]) <= eps) --k;
    hull[k++] = pts[i];
  }
  for (std::size_t i = n - 1, t = k + 1; i-- > 0;) {  // upper
    while (k >= t && cross(hull[k - 1] - hull[k - 2], pts[i] - hull[k - 2]) <= eps) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return hull;
}

// Sutherland-Hodgman clip of a convex subject by one half-plane
// {x : cross(b - a, x - a) >= 0}.
std::vector<Vec2> clip_halfplane(const std::vector<Vec2>& subject, Vec2 a, Vec2 b) {
  std::vector<Vec2> out;
  const std::size_t n = subject.size();
  out.reserve(n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 p = subject[i];
    const Vec2 q = subject[(i + 1) % n];
    const double sp = cross(b - a, p - a);
    const double sq = cross(b - a, q - a);
    if (sp >= 0.0) out.push_back(p);
    if ((sp > 0.0 && sq < 0.0) || (sp < 0.0 && sq > 0.0)) {
      const double t = sp / (sp - sq);
      out.push_back(p + t * (q - p));
    }
  }
  return out;
}

double polygon_intersection_area(const Polygon& k, const Polygon& c) {
  std::vector<Vec2> subject = k.vertices();
  const std::vector<Vec2>& clip = c.vertices();
  for (std::size_t i = 0; i < clip.size() && subject.size() >= 3; ++i)
    subject = clip_halfplane(subject, clip[i], clip[(i + 1) % clip.size()]);
  if (subject.size() < 3) return 0.0;
  return std::abs(shoelace(subject));
}

const char* kMixed = "bodies must both be intervals or both polygons";

}  // namespace

Polygon::Polygon(std::vector<Vec2> vertices) : pts_(std::move(vertices)) {
  if (pts_.size() < 3) throw DegenerateBody("polygon needs at least 3 vertices");
  const double scale = coord_scale(pts_);
  const double eps = 1e-12 * scale * scale;
  double area2 = 0.0;
  const std::size_t n = pts_.size();
  for (std::size_t i = 0; i < n; ++i) area2 += cross(pts_[i], pts_[(i + 1) % n]);
  if (area2 <= 0.0) throw DegenerateBody("polygon vertices must be counterclockwise");
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 e0 = pts_[(i + 1) % n] - pts_[i];
    const Vec2 e1 = pts_[(i + 2) % n] - pts_[(i + 1) % n];
    if (cross(e0, e1) <= eps)
      throw DegenerateBody("polygon must be strictly convex (ccw turns only)");
  }
}

Polygon Polygon::hull_of(std::vector<Vec2> points) {
  std::vector<Vec2> h = convex_hull(std::move(points));
  if (h.size() < 3) throw DegenerateBody("hull degenerates to fewer than 3 vertices");
  return Polygon(std::move(h));
}

int body_dimension(const ConvexBody& k) {
  return std::holds_alternative<Interval>(k) ? 1 : 2;
}

double volume(const Interval& k) { return k.b - k.a; }
double volume(const Polygon& k) { return shoelace(k.vertices()); }
double volume(const ConvexBody& k) {
  return std::visit([](const auto& b) { return volume(b); }, k);
}

double body_diameter(const ConvexBody& k) {
  if (const auto* iv = std::get_if<Interval>(&k)) return iv->b - iv->a;
  const auto& pts = std::get<Polygon>(k).vertices();
  double best = 0.0;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      const Vec2 d = pts[i] - pts[j];
      best = std::max(best, std::sqrt(dot(d, d)));
    }
  return best;
}

Vec2 body_centroid(const ConvexBody& k) {
  if (const auto* iv = std::get_if<Interval>(&k)) return {0.5 * (iv->a + iv->b), 0.0};
  const auto& pts = std::get<Polygon>(k).vertices();
  const std::size_t n = pts.size();
  double a2 = 0.0, cx = 0.0, cy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 p = pts[i], q = pts[(i + 1) % n];
    const double w = cross(p, q);
    a2 += w;
    cx += (p.x + q.x) * w;
    cy += (p.y + q.y) * w;
  }
  return {cx / (3.0 * a2), cy / (3.0 * a2)};
}

ConvexBody translate(const ConvexBody& k, Vec2 t) {
  if (const auto* iv = std::get_if<Interval>(&k)) return Interval{iv->a + t.x, iv->b + t.x};
  std::vector<Vec2> pts = std::get<Polygon>(k).vertices();
  for (Vec2& p : pts) p = p + t;
  return Polygon(std::move(pts));
}

ConvexBody scale(const ConvexBody& k, double s) {
  if (!(s > 0.0)) throw DegenerateBody("scale factor must be positive");
  if (const auto* iv = std::get_if<Interval>(&k)) return Interval{s * iv->a, s * iv->b};
  std::vector<Vec2> pts = std::get<Polygon>(k).vertices();
  for (Vec2& p : pts) p = s * p;
  return Polygon(std::move(pts));
}

ConvexBody minkowski_combine(const ConvexBody& k, const ConvexBody& c, double alpha,
                             double beta) {
  if (!(alpha > 0.0) || !(beta > 0.0))
    throw DegenerateBody("minkowski_combine: coefficients must be positive");
  if (body_dimension(k) != body_dimension(c)) throw MixedVariants(kMixed);
  if (const auto* ik = std::get_if<Interval>(&k)) {
    const auto& ic = std::get<Interval>(c);
    return Interval{alpha * ik->a + beta * ic.a, alpha * ik->b + beta * ic.b};
  }
  // Edge merge by turn angle: both vertex cycles are ccw, so walking edges of
  // alpha K and beta C in slope order produces the sum's edge sequence.
  auto edges_from = [](const Polygon& poly, double s) {
    const auto& pts = poly.vertices();
    const std::size_t n = pts.size();
    std::size_t start = 0;
    for (std::size_t i = 1; i < n; ++i)
      if (pts[i].y < pts[start].y || (pts[i].y == pts[start].y && pts[i].x < pts[start].x))
        start = i;
    std::vector<Vec2> edges(n);
    for (std::size_t i = 0; i < n; ++i) {
      const Vec2 a = pts[(start + i) % n];
      const Vec2 b = pts[(start + i + 1) % n];
      edges[i] = s * (b - a);
    }
    return std::make_pair(s * pts[start], edges);
  };
  const auto [pk, ek] = edges_from(std::get<Polygon>(k), alpha);
  const auto [pc, ec] = edges_from(std::get<Polygon>(c), beta);
  std::vector<Vec2> out;
  out.reserve(ek.size() + ec.size() + 1);
  out.push_back(pk + pc);
  std::size_t i = 0, j = 0;
  while (i < ek.size() || j < ec.size()) {
    Vec2 step;
    if (i == ek.size())
      step = ec[j++];
    else if (j == ec.size())
      step = ek[i++];
    else {
      const double turn = cross(ek[i], ec[j]);
      if (turn > 0.0)
        step = ek[i++];
      else if (turn < 0.0)
        step = ec[j++];
      else
        step = ek[i++] + ec[j++];  // parallel edges combine
    }
    out.push_back(out.back() + step);
  }
  out.pop_back();  // closing vertex duplicates the first
  return Polygon::hull_of(std::move(out));
}

double intersection_volume(const ConvexBody& k, const ConvexBody& c) {
  if (body_dimension(k) != body_dimension(c)) throw MixedVariants(kMixed);
  if (const auto* ik = std::get_if<Interval>(&k)) {
    const auto& ic = std::get<Interval>(c);
    return std::max(0.0, std::min(ik->b, ic.b) - std::max(ik->a, ic.a));
  }
  return polygon_intersection_area(std::get<Polygon>(k), std::get<Polygon>(c));
}

double symmetric_difference_volume(const ConvexBody& k, const ConvexBody& c) {
  return std::max(0.0, volume(k) + volume(c) - 2.0 * intersection_volume(k, c));
}

double containment_margin(const ConvexBody& k, Vec2 x) {
  if (const auto* iv = std::get_if<Interval>(&k))
    return std::min(x.x - iv->a, iv->b - x.x);
  const auto& pts = std::get<Polygon>(k).vertices();
  const std::size_t n = pts.size();
  double margin = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 a = pts[i], b = pts[(i + 1) % n];
    const Vec2 e = b - a;
    const double len = std::sqrt(dot(e, e));
    margin = std::min(margin, cross(e, x - a) / len);
  }
  return margin;
}

bool contains_body(const ConvexBody& outer, const ConvexBody& inner, double tol) {
  if (body_dimension(outer) != body_dimension(inner)) throw MixedVariants(kMixed);
  if (const auto* iv = std::get_if<Interval>(&inner)) {
    const auto& out = std::get<Interval>(outer);
    return iv->a >= out.a - tol && iv->b <= out.b + tol;
  }
  for (const Vec2& v : std::get<Polygon>(inner).vertices())
    if (containment_margin(outer, v) < -tol) return false;
  return true;
}

}  // namespace plstab
