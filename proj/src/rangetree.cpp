#include "rangehull/rangetree.hpp"

#include <algorithm>
#include <cassert>

namespace rangehull {

namespace {

// Builds the secondary tree over one primary node's points. `yx` is the
// node's (y, x)-sorted slice. Each recursion hands back its points in
// (x, y) order so parent hulls come from an O(k) merge instead of a sort.
std::uint32_t build_secondary(std::span<const Point> yx, std::uint32_t begin,
                              std::uint32_t end,
                              std::vector<SecondaryNode>& out,
                              std::vector<Point>& xy_sorted) {
  auto idx = static_cast<std::uint32_t>(out.size());
  out.emplace_back();
  out[idx].begin = begin;
  out[idx].end = end;

  if (end - begin == 1) {
    xy_sorted = {yx[begin]};
    out[idx].hull = build_hull_sorted(xy_sorted);
    return idx;
  }

  std::uint32_t mid = begin + (end - begin) / 2;
  std::vector<Point> lx, rx;
  std::uint32_t l = build_secondary(yx, begin, mid, out, lx);
  std::uint32_t r = build_secondary(yx, mid, end, out, rx);
  out[idx].left = l;
  out[idx].right = r;

  xy_sorted.resize(lx.size() + rx.size());
  std::merge(lx.begin(), lx.end(), rx.begin(), rx.end(), xy_sorted.begin(),
             lex_xy_less);
  out[idx].hull = build_hull_sorted(xy_sorted);
  return idx;
}

std::uint32_t build_primary(RangeHullTree& t, std::uint32_t begin,
                            std::uint32_t end) {
  auto idx = static_cast<std::uint32_t>(t.nodes.size());
  t.nodes.emplace_back();

  {
    std::vector<Point> yx(t.pts_xy.begin() + begin, t.pts_xy.begin() + end);
    std::sort(yx.begin(), yx.end(), lex_yx_less);
    PrimaryNode& v = t.nodes[idx];
    v.begin = begin;
    v.end = end;
    v.pts_yx = std::move(yx);
    std::vector<Point> scratch;
    v.sec_root = build_secondary(v.pts_yx, 0,
                                 static_cast<std::uint32_t>(v.pts_yx.size()),
                                 v.sec, scratch);
  }

  if (end - begin > 1) {
    std::uint32_t mid = begin + (end - begin) / 2;
    std::uint32_t l = build_primary(t, begin, mid);
    std::uint32_t r = build_primary(t, mid, end);
    t.nodes[idx].left = l;
    t.nodes[idx].right = r;
  }
  return idx;
}

}  // namespace

RangeHullTree build_tree(std::span<const Point> pts) {
  if (pts.empty()) throw EmptyInput("build_tree: no points");
  for (const Point& p : pts)
    if (!coord_in_range(p))
      throw CoordinateOutOfRange("build_tree: coordinate exceeds 2^30 bound");

  RangeHullTree t;
  t.pts_xy.assign(pts.begin(), pts.end());
  std::sort(t.pts_xy.begin(), t.pts_xy.end(), lex_xy_less);
  auto last = std::unique(t.pts_xy.begin(), t.pts_xy.end());
  t.dedup_count = static_cast<std::size_t>(t.pts_xy.end() - last);
  t.pts_xy.erase(last, t.pts_xy.end());
  t.n = t.pts_xy.size();

  t.nodes.reserve(2 * t.n);
  t.root = build_primary(t, 0, static_cast<std::uint32_t>(t.n));
  return t;
}

namespace {

void collect_x(const RangeHullTree& t, std::uint32_t idx, std::int64_t lo,
               std::int64_t hi, std::vector<const PrimaryNode*>& out) {
  const PrimaryNode& v = t.nodes[idx];
  std::int64_t vmin = t.pts_xy[v.begin].x;
  std::int64_t vmax = t.pts_xy[v.end - 1].x;
  if (vmax < lo || vmin > hi) return;
  if (lo <= vmin && vmax <= hi) {
    out.push_back(&v);
    return;
  }
  if (v.left == kNoChild) return;  // leaf partially outside
  collect_x(t, v.left, lo, hi, out);
  collect_x(t, v.right, lo, hi, out);
}

void collect_y(const PrimaryNode& v, std::uint32_t idx, std::int64_t lo,
               std::int64_t hi, std::vector<const SecondaryNode*>& out) {
  const SecondaryNode& w = v.sec[idx];
  std::int64_t wmin = v.pts_yx[w.begin].y;
  std::int64_t wmax = v.pts_yx[w.end - 1].y;
  if (wmax < lo || wmin > hi) return;
  if (lo <= wmin && wmax <= hi) {
    out.push_back(&w);
    return;
  }
  if (w.left == kNoChild) return;
  collect_y(v, w.left, lo, hi, out);
  collect_y(v, w.right, lo, hi, out);
}

}  // namespace

std::vector<const PrimaryNode*> decompose_x(const RangeHullTree& t,
                                            std::int64_t x_lo,
                                            std::int64_t x_hi) {
  std::vector<const PrimaryNode*> out;
  if (x_lo > x_hi || t.n == 0) return out;
  collect_x(t, t.root, x_lo, x_hi, out);
  return out;
}

std::vector<const SecondaryNode*> decompose_y(const PrimaryNode& v,
                                              std::int64_t y_lo,
                                              std::int64_t y_hi) {
  std::vector<const SecondaryNode*> out;
  if (y_lo > y_hi) return out;
  collect_y(v, v.sec_root, y_lo, y_hi, out);
  return out;
}

StorageStats storage_stats(const RangeHullTree& t) {
  StorageStats s;
  s.primary_nodes = t.nodes.size();
  for (const PrimaryNode& v : t.nodes) {
    s.secondary_nodes += v.sec.size();
    s.bytes_estimate += sizeof(PrimaryNode) + v.pts_yx.size() * sizeof(Point);
    for (const SecondaryNode& w : v.sec) {
      s.stored_vertices += w.hull.size();
      s.bytes_estimate += sizeof(SecondaryNode) +
                          w.hull.verts.size() * sizeof(Point) +
                          w.hull.prefix_perim.size() * sizeof(double) +
                          w.hull.prefix_cross.size() * sizeof(Int128);
    }
  }
  return s;
}

}  // namespace rangehull
