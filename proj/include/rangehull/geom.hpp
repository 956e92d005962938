#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace rangehull {

using Int128 = __int128;

std::string to_string(Int128 v);

/// Planar point with integer coordinates. Exactness throughout the library
/// assumes |x|, |y| <= kCoordLimit, which ingestion paths enforce.
struct Point {
  std::int64_t x = 0;
  std::int64_t y = 0;
  friend bool operator==(const Point&, const Point&) = default;
};

inline constexpr std::int64_t kCoordLimit = std::int64_t{1} << 30;

inline bool coord_in_range(Point p) {
  return p.x >= -kCoordLimit && p.x <= kCoordLimit && p.y >= -kCoordLimit &&
         p.y <= kCoordLimit;
}

struct EmptyInput : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct CoordinateOutOfRange : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// (x, y) and (y, x) lexicographic orders. The tree and all tie-breaks are
// built on these, so equal coordinates never need a general-position
// assumption.
inline bool lex_xy_less(Point a, Point b) {
  return a.x != b.x ? a.x < b.x : a.y < b.y;
}
inline bool lex_yx_less(Point a, Point b) {
  return a.y != b.y ? a.y < b.y : a.x < b.x;
}

/// Sign of (b - a) x (c - a): +1 left turn, 0 collinear, -1 right turn.
int orient(Point a, Point b, Point c);

/// Exact doubled signed area of triangle (a, b, c); positive iff CCW.
Int128 tri2(Point a, Point b, Point c);

/// Exact origin cross product a.x*b.y - a.y*b.x (shoelace edge term).
Int128 cross2(Point a, Point b);

/// Euclidean distance: exact integer squared distance, then one sqrt.
double dist(Point a, Point b);

enum class Quadrant : std::uint8_t { q1 = 0, q2 = 1, q3 = 2, q4 = 3 };

inline constexpr Quadrant kAllQuadrants[] = {Quadrant::q1, Quadrant::q2,
                                             Quadrant::q3, Quadrant::q4};

const char* name(Quadrant q);

/// Axis reflections mapping each quadrant's monotone chain onto the Q1
/// configuration (x strictly decreasing, y strictly increasing along the
/// chain). All chain logic runs in these normalized coordinates.
struct Frame {
  bool neg_x = false;
  bool neg_y = false;

  static Frame of(Quadrant q) {
    switch (q) {
      case Quadrant::q1: return {false, false};
      case Quadrant::q2: return {true, false};
      case Quadrant::q3: return {true, true};
      case Quadrant::q4: return {false, true};
    }
    return {};
  }

  std::int64_t nx(Point p) const { return neg_x ? -p.x : p.x; }
  std::int64_t ny(Point p) const { return neg_y ? -p.y : p.y; }
  Point norm(Point p) const { return {nx(p), ny(p)}; }
  /// Sign of oriented areas under the reflection.
  int flip() const { return neg_x != neg_y ? -1 : 1; }

  /// orient() in normalized coordinates.
  int orient_n(Point a, Point b, Point c) const {
    return flip() * orient(a, b, c);
  }

  // Normalized lexicographic orders: (nx, ny) pins chain x-extremes,
  // (ny, nx) pins chain y-extremes.
  bool lex_xy_less_n(Point a, Point b) const {
    auto ax = nx(a), bx = nx(b);
    return ax != bx ? ax < bx : ny(a) < ny(b);
  }
  bool lex_yx_less_n(Point a, Point b) const {
    auto ay = ny(a), by = ny(b);
    return ay != by ? ay < by : nx(a) < nx(b);
  }
};

/// Convex hull of one canonical subset plus the auxiliary arrays the query
/// algorithms read. Vertices are strict corners only, CCW, with position 0
/// the maximum-y vertex (ties broken toward larger x).
struct CanonicalHull {
  std::vector<Point> verts;
  std::uint32_t idx_xmax = 0;  // max-x vertex, ties toward larger y
  std::uint32_t idx_xmin = 0;  // min-x vertex, ties toward smaller y
  std::uint32_t idx_ymin = 0;  // min-y vertex, ties toward smaller x
  Point pmax{};                // max-x point of the subset (= verts[idx_xmax])
  std::vector<double> prefix_perim;  // size n+1; [i] = length of edges 0..i-1
  std::vector<Int128> prefix_cross;  // size n+1; [i] = shoelace sum of edges 0..i-1

  std::size_t size() const { return verts.size(); }
  Point vertex(std::size_t i) const { return verts[i]; }
  std::uint32_t next(std::uint32_t i) const {
    return i + 1 == verts.size() ? 0 : i + 1;
  }
  std::uint32_t prev(std::uint32_t i) const {
    return i == 0 ? static_cast<std::uint32_t>(verts.size() - 1) : i - 1;
  }

  /// Total edge length / shoelace sum over `steps` edges walking CCW from
  /// vertex position `from` (wraps around the cycle).
  double perim_ccw(std::size_t from, std::size_t steps) const;
  Int128 cross_ccw(std::size_t from, std::size_t steps) const;
};

/// Build the canonical hull of a non-empty set of distinct points.
/// Throws EmptyInput on an empty span.
CanonicalHull build_hull(std::span<const Point> pts);

/// Same, but `pts` must already be (x, y)-sorted and duplicate-free.
CanonicalHull build_hull_sorted(std::span<const Point> pts);

/// One quadrant's monotone arc of a stored hull: the run of vertices from the
/// quadrant's normalized x-extreme corner to its normalized y-extreme corner.
/// Along the arc (k = 0 .. len-1), normalized x strictly decreases and
/// normalized y strictly increases. Vertices on a flat extreme edge that are
/// not one of those two corners belong to no arc.
struct ArcView {
  const CanonicalHull* hull = nullptr;
  Quadrant quad = Quadrant::q1;
  std::uint32_t first = 0;  // hull position of arc index 0
  std::uint32_t len = 0;
  std::int8_t step = 1;  // +1 walks the hull CCW, -1 CW

  std::uint32_t hull_pos(std::uint32_t k) const {
    auto n = static_cast<std::uint32_t>(hull->size());
    return step > 0 ? (first + k) % n : (first + n - k % n) % n;
  }
  Point vertex(std::uint32_t k) const { return hull->verts[hull_pos(k)]; }
  Point front() const { return vertex(0); }
  Point back() const { return vertex(len - 1); }
};

ArcView arc_view(const CanonicalHull& h, Quadrant q);

/// Arc consisting of a single hull vertex (used to seed chains).
ArcView singleton_arc(const CanonicalHull& h, std::uint32_t pos, Quadrant q);

}  // namespace rangehull
