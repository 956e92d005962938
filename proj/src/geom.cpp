#include "rangehull/geom.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

namespace rangehull {

std::string to_string(Int128 v) {
  if (v == 0) return "0";
  bool neg = v < 0;
  unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : v;
  std::string s;
  while (u > 0) {
    s.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
    u /= 10;
  }
  if (neg) s.push_back('-');
  std::reverse(s.begin(), s.end());
  return s;
}

int orient(Point a, Point b, Point c) {
  // Differences fit in 63 bits under the coordinate bound; the products are
  // taken in 128 bits so even out-of-contract inputs stay exact.
  Int128 v = Int128(b.x - a.x) * Int128(c.y - a.y) -
             Int128(b.y - a.y) * Int128(c.x - a.x);
  return v > 0 ? 1 : v < 0 ? -1 : 0;
}

Int128 tri2(Point a, Point b, Point c) {
  return Int128(b.x - a.x) * Int128(c.y - a.y) -
         Int128(b.y - a.y) * Int128(c.x - a.x);
}

Int128 cross2(Point a, Point b) {
  return Int128(a.x) * Int128(b.y) - Int128(a.y) * Int128(b.x);
}

double dist(Point a, Point b) {
  Int128 dx = a.x - b.x;
  Int128 dy = a.y - b.y;
  Int128 sq = dx * dx + dy * dy;
  return std::sqrt(static_cast<double>(sq));
}

const char* name(Quadrant q) {
  switch (q) {
    case Quadrant::q1: return "Q1";
    case Quadrant::q2: return "Q2";
    case Quadrant::q3: return "Q3";
    case Quadrant::q4: return "Q4";
  }
  return "?";
}

namespace {

// Monotone chain with strict turns: collinear boundary points are dropped, so
// the output is exactly the set of corners.
std::vector<Point> hull_of_sorted(std::span<const Point> pts) {
  const std::size_t n = pts.size();
  if (n <= 2) return {pts.begin(), pts.end()};
  std::vector<Point> h(2 * n);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {  // lower chain
    while (k >= 2 && orient(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  for (std::size_t i = n - 1, lo = k + 1; i-- > 0;) {  // upper chain
    while (k >= lo && orient(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);  // last point equals the first
  return h;
}

}  // namespace

double CanonicalHull::perim_ccw(std::size_t from, std::size_t steps) const {
  const std::size_t n = verts.size();
  assert(steps <= n);
  std::size_t to = from + steps;
  if (to <= n) return prefix_perim[to] - prefix_perim[from];
  return (prefix_perim[n] - prefix_perim[from]) + prefix_perim[to - n];
}

Int128 CanonicalHull::cross_ccw(std::size_t from, std::size_t steps) const {
  const std::size_t n = verts.size();
  std::size_t to = from + steps;
  if (to <= n) return prefix_cross[to] - prefix_cross[from];
  return (prefix_cross[n] - prefix_cross[from]) + prefix_cross[to - n];
}

CanonicalHull build_hull_sorted(std::span<const Point> pts) {
  if (pts.empty()) throw EmptyInput("build_hull: empty point set");

  std::vector<Point> cycle = hull_of_sorted(pts);
  const std::size_t n = cycle.size();

  // Rotate so position 0 is the max-y vertex, ties toward larger x.
  std::size_t top = 0;
  for (std::size_t i = 1; i < n; ++i)
    if (lex_yx_less(cycle[top], cycle[i])) top = i;
  std::rotate(cycle.begin(), cycle.begin() + static_cast<std::ptrdiff_t>(top),
              cycle.end());

  CanonicalHull h;
  h.verts = std::move(cycle);
  for (std::uint32_t i = 1; i < n; ++i) {
    const Point v = h.verts[i];
    Point xmax = h.verts[h.idx_xmax];
    if (v.x > xmax.x || (v.x == xmax.x && v.y > xmax.y)) h.idx_xmax = i;
    Point xmin = h.verts[h.idx_xmin];
    if (v.x < xmin.x || (v.x == xmin.x && v.y < xmin.y)) h.idx_xmin = i;
    Point ymin = h.verts[h.idx_ymin];
    if (v.y < ymin.y || (v.y == ymin.y && v.x < ymin.x)) h.idx_ymin = i;
  }
  h.pmax = h.verts[h.idx_xmax];

  h.prefix_perim.resize(n + 1);
  h.prefix_cross.resize(n + 1);
  h.prefix_perim[0] = 0.0;
  h.prefix_cross[0] = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const Point a = h.verts[i];
    const Point b = h.verts[(i + 1) % n];
    h.prefix_perim[i + 1] = h.prefix_perim[i] + dist(a, b);
    h.prefix_cross[i + 1] = h.prefix_cross[i] + cross2(a, b);
  }
  return h;
}

CanonicalHull build_hull(std::span<const Point> pts) {
  if (pts.empty()) throw EmptyInput("build_hull: empty point set");
  std::vector<Point> sorted(pts.begin(), pts.end());
  std::sort(sorted.begin(), sorted.end(), lex_xy_less);
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  return build_hull_sorted(sorted);
}

namespace {

std::uint32_t arc_len(std::uint32_t first, std::uint32_t last, int step,
                      std::uint32_t n) {
  std::int64_t d = (std::int64_t(last) - std::int64_t(first)) * step;
  d %= n;
  if (d < 0) d += n;
  return static_cast<std::uint32_t>(d) + 1;
}

}  // namespace

ArcView arc_view(const CanonicalHull& h, Quadrant q) {
  const auto n = static_cast<std::uint32_t>(h.size());
  if (n == 1) return ArcView{&h, q, 0, 1, 1};

  std::uint32_t first = 0, last = 0;
  std::int8_t step = 1;
  switch (q) {
    case Quadrant::q1:
      // max-x (ties up) CCW to max-y (ties right); both stored directly.
      first = h.idx_xmax;
      last = 0;
      step = 1;
      break;
    case Quadrant::q2: {
      // min-x ties-up corner: the CCW predecessor of idx_xmin on a vertical
      // left edge, otherwise idx_xmin itself. Ends at max-y ties-left.
      std::uint32_t p = h.prev(h.idx_xmin);
      first = h.verts[p].x == h.verts[h.idx_xmin].x ? p : h.idx_xmin;
      last = h.verts[h.next(0)].y == h.verts[0].y ? h.next(0) : 0;
      step = -1;
      break;
    }
    case Quadrant::q3:
      first = h.idx_xmin;
      last = h.idx_ymin;
      step = 1;
      break;
    case Quadrant::q4: {
      // max-x ties-down to min-y ties-right.
      std::uint32_t p = h.prev(h.idx_xmax);
      first = h.verts[p].x == h.verts[h.idx_xmax].x ? p : h.idx_xmax;
      std::uint32_t nx = h.next(h.idx_ymin);
      last = h.verts[nx].y == h.verts[h.idx_ymin].y ? nx : h.idx_ymin;
      step = -1;
      break;
    }
  }
  ArcView arc{&h, q, first, arc_len(first, last, step, n), step};
#ifndef NDEBUG
  Frame f = Frame::of(q);
  for (std::uint32_t k = 0; k + 1 < arc.len; ++k) {
    assert(f.nx(arc.vertex(k)) > f.nx(arc.vertex(k + 1)));
    assert(f.ny(arc.vertex(k)) < f.ny(arc.vertex(k + 1)));
  }
#endif
  return arc;
}

ArcView singleton_arc(const CanonicalHull& h, std::uint32_t pos, Quadrant q) {
  return ArcView{&h, q, pos, 1, 1};
}

}  // namespace rangehull
