#include "rangehull/oracle.hpp"

#include <algorithm>
#include <cmath>

namespace rangehull::oracle {

namespace {

// Local primitives, deliberately not shared with the fast path.
int side(Point o, Point a, Point b) {
  Int128 v = Int128(a.x - o.x) * Int128(b.y - o.y) -
             Int128(a.y - o.y) * Int128(b.x - o.x);
  return v > 0 ? 1 : v < 0 ? -1 : 0;
}

double euclid(Point a, Point b) {
  Int128 dx = a.x - b.x, dy = a.y - b.y;
  return std::sqrt(static_cast<double>(dx * dx + dy * dy));
}

bool by_xy(Point a, Point b) { return a.x != b.x ? a.x < b.x : a.y < b.y; }

}  // namespace

std::vector<Point> oracle_filter(std::span<const Point> pts,
                                 const QueryRect& q) {
  std::vector<Point> out;
  for (const Point& p : pts)
    if (p.x >= q.x_lo && p.x <= q.x_hi && p.y >= q.y_lo && p.y <= q.y_hi)
      out.push_back(p);
  return out;
}

std::vector<Point> oracle_hull(std::span<const Point> pts) {
  std::vector<Point> s(pts.begin(), pts.end());
  std::sort(s.begin(), s.end(), by_xy);
  s.erase(std::unique(s.begin(), s.end()), s.end());
  const std::size_t n = s.size();
  if (n > 2) {
    std::vector<Point> h;
    h.reserve(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
      while (h.size() >= 2 && side(h[h.size() - 2], h[h.size() - 1], s[i]) <= 0)
        h.pop_back();
      h.push_back(s[i]);
    }
    const std::size_t base = h.size() + 1;
    for (std::size_t i = n - 1; i-- > 0;) {
      while (h.size() >= base &&
             side(h[h.size() - 2], h[h.size() - 1], s[i]) <= 0)
        h.pop_back();
      h.push_back(s[i]);
    }
    h.pop_back();
    s = std::move(h);
  }
  // Start the cycle at the max-y vertex, ties toward larger x.
  std::size_t top = 0;
  for (std::size_t i = 1; i < s.size(); ++i)
    if (s[i].y > s[top].y || (s[i].y == s[top].y && s[i].x > s[top].x))
      top = i;
  if (!s.empty())
    std::rotate(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(top),
                s.end());
  return s;
}

Measures oracle_measures(std::span<const Point> hull) {
  Measures m;
  m.count = hull.size();
  const std::size_t n = hull.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point a = hull[i];
    const Point b = hull[(i + 1) % n];
    m.area2 += Int128(a.x) * Int128(b.y) - Int128(a.y) * Int128(b.x);
    if (n > 1) m.perimeter += euclid(a, b);
  }
  return m;
}

std::optional<TangentRecord> tangent_oracle(const ArcView& a,
                                            const ArcView& b) {
  const Frame f = Frame::of(a.quad);
  auto left_of_all = [&](Point p, Point q) {
    for (std::uint32_t k = 0; k < a.len; ++k)
      if (side(f.norm(p), f.norm(q), f.norm(a.vertex(k))) < 0) return false;
    for (std::uint32_t k = 0; k < b.len; ++k)
      if (side(f.norm(p), f.norm(q), f.norm(b.vertex(k))) < 0) return false;
    return true;
  };
  // Every valid pair lies on one support line; scanning i up and j down
  // lands on the maximal bridge first.
  for (std::uint32_t i = 0; i < a.len; ++i)
    for (std::uint32_t j = b.len; j-- > 0;)
      if (left_of_all(a.vertex(i), b.vertex(j))) return TangentRecord{i, j};
  return std::nullopt;
}

}  // namespace rangehull::oracle
