#include "rangehull/chains.hpp"

#include <algorithm>
#include <cassert>

namespace rangehull {

namespace {

Separation separation_of(const HullStackEntry& lower,
                         const HullStackEntry& upper) {
  return {lower.primary_order != upper.primary_order
              ? Separation::Axis::vertical
              : Separation::Axis::horizontal};
}

// Bridge between hs[k] and hs[k+1]. Under the skip_lone_tangent mutation the
// tangent stack runs short; a synthetic full-span bridge keeps the walkers
// well defined (and visibly wrong) instead of out of bounds.
TangentRecord bridge_rec(const ChainResult& c, std::size_t k) {
  if (k < c.ts.size()) return c.ts[k];
  return {c.hs[k].arc.len - 1, 0};
}

// Visits the chain from its y-extreme end down to its x-extreme end.
// seg(k, lo, hi): arc positions lo..hi of hs[k] lie on the chain (hi is the
// chain-upper end). bridge(k) joins hs[k] to hs[k+1] and is visited between
// the two hulls' segments.
template <typename SegFn, typename BridgeFn>
void walk_chain(const ChainResult& c, SegFn&& seg, BridgeFn&& bridge) {
  const std::size_t m = c.hs.size();
  for (std::size_t k = m; k-- > 0;) {
    std::uint32_t hi =
        k + 1 == m ? c.hs[k].arc.len - 1 : bridge_rec(c, k).i1;
    std::uint32_t lo = k == 0 ? 0 : bridge_rec(c, k - 1).i2;
    if (hi < lo) hi = lo;  // only reachable under mutations
    seg(k, lo, hi);
    if (k > 0) bridge(k - 1);
  }
}

}  // namespace

void merge_step(std::vector<HullStackEntry>& hs, std::vector<TangentRecord>& ts,
                const HullStackEntry& incoming, QueryStats& stats,
                Mutation mut) {
  const Frame f = Frame::of(incoming.arc.quad);
  bool bridged = false;
  while (hs.size() >= 2 && !ts.empty()) {
    const HullStackEntry& c1 = hs[hs.size() - 2];
    const HullStackEntry& c2 = hs.back();
    const TangentRecord& t1 = ts.back();
    TangentRecord t2 = supporting_tangent(c2.arc, incoming.arc,
                                          separation_of(c2, incoming), &stats);
    const Point pa = c1.arc.vertex(t1.i1);
    const Point pb = c2.arc.vertex(t1.i2);
    const Point pd = incoming.arc.vertex(t2.i2);
    ++stats.orient_calls;
    const int o = f.orient_n(pa, pb, pd);
    const bool pop = mut == Mutation::pop_strict ? o < 0 : o <= 0;
    if (!pop) {
      ts.push_back(t2);
      bridged = true;
      break;
    }
    hs.pop_back();
    ts.pop_back();
    ++stats.pops;
  }
  if (!bridged && !hs.empty()) {
    if (!(mut == Mutation::skip_lone_tangent && hs.size() == 1)) {
      ts.push_back(supporting_tangent(hs.back().arc, incoming.arc,
                                      separation_of(hs.back(), incoming),
                                      &stats));
    }
  }
  hs.push_back(incoming);
  ++stats.pushes;
}

namespace {

struct SeedHit {
  const CanonicalHull* hull = nullptr;
  std::uint32_t pos = 0;
  std::uint32_t slab = 0;
  Point pt{};
};

struct ChainEngine {
  const RangeHullTree& tree;
  QueryRect rect;
  Quadrant quad;
  Frame f;
  QueryStats& stats;
  Mutation mut;

  // Primary canonical nodes in chain order: normalized x descending.
  std::vector<const PrimaryNode*> slabs;

  ChainEngine(const RangeHullTree& t, const QueryRect& q, Quadrant qd,
              QueryStats& s, Mutation m)
      : tree(t), rect(q), quad(qd), f(Frame::of(qd)), stats(s), mut(m) {
    slabs = decompose_x(tree, rect.x_lo, rect.x_hi);
    if (!f.neg_x) std::reverse(slabs.begin(), slabs.end());
  }

  // Secondary canonical nodes of `v` strictly above ny_low (normalized),
  // normalized bottom to top.
  std::vector<const SecondaryNode*> blocks_above(const PrimaryNode& v,
                                                 std::int64_t ny_low) const {
    std::int64_t lo, hi;
    if (!f.neg_y) {
      lo = ny_low + 1;
      hi = rect.y_hi;
    } else {
      lo = rect.y_lo;
      hi = -ny_low - 1;
    }
    auto ws = decompose_y(v, lo, hi);
    if (f.neg_y) std::reverse(ws.begin(), ws.end());
    return ws;
  }

  // The normalized (nx, ny)-lexicographic maximum of the range: the chain's
  // x-extreme. Scanning every canonical node keeps all tie configurations
  // correct (an x-tie can straddle primary nodes under composite keys).
  std::optional<SeedHit> find_seed() {
    std::optional<SeedHit> best;
    for (std::uint32_t k = 0; k < slabs.size(); ++k) {
      for (const SecondaryNode* w : decompose_y(*slabs[k], rect.y_lo,
                                                rect.y_hi)) {
        ++stats.canonical_nodes_visited;
        ArcView arc = arc_view(w->hull, quad);
        const Point cand = arc.front();
        if (!best || f.lex_xy_less_n(best->pt, cand))
          best = SeedHit{arc.hull, arc.hull_pos(0), k, cand};
      }
    }
    return best;
  }

  ChainResult run() {
    ChainResult c;
    c.quad = quad;
    if (!rect.valid() || slabs.empty()) return c;

    auto seed = find_seed();
    if (!seed) return c;

    c.hs.push_back(
        {singleton_arc(*seed->hull, seed->pos, quad), seed->slab, 0});
    ++stats.pushes;
    // Running chain top: the (ny, nx)-maximal fed point. Slabs are queried
    // strictly above it, which keeps every cross-slab tie out.
    Point top = seed->pt;

    for (std::uint32_t k = 0; k < slabs.size(); ++k) {
      auto ws = blocks_above(*slabs[k], f.ny(top));
      for (std::uint32_t j = 0; j < ws.size(); ++j) {
        ++stats.canonical_nodes_visited;
        ArcView arc = arc_view(ws[j]->hull, quad);
        // Within one slab the (y, x)-keyed blocks cannot always be emitted
        // in reflected order: for the orientation-reversing quadrants an
        // equal-y class straddling two blocks feeds its dominated (smaller
        // normalized x) vertex after the keeper. That vertex is always the
        // incoming arc's first one; drop it instead of merging it.
        if (f.ny(arc.front()) == f.ny(top) && f.nx(arc.front()) < f.nx(top)) {
          if (arc.len == 1) continue;
          arc = ArcView{arc.hull, arc.quad, arc.hull_pos(1), arc.len - 1,
                        arc.step};
        }
        assert(f.ny(arc.front()) >= f.ny(top));
        merge_step(c.hs, c.ts, HullStackEntry{arc, k, j + 1}, stats, mut);
        if (f.lex_yx_less_n(top, arc.back())) top = arc.back();
      }
    }
    assert(mut != Mutation::none || c.ts.size() + 1 == c.hs.size());
    return c;
  }
};

}  // namespace

ChainResult build_chain(const RangeHullTree& t, const QueryRect& q,
                        Quadrant quad, QueryStats& stats, Mutation mut) {
  return ChainEngine(t, q, quad, stats, mut).run();
}

std::vector<Point> report_chain(const ChainResult& c, QueryStats* stats) {
  std::vector<Point> out;
  if (c.empty()) return out;
  walk_chain(
      c,
      [&](std::size_t k, std::uint32_t lo, std::uint32_t hi) {
        const ArcView& a = c.hs[k].arc;
        for (std::uint32_t p = hi + 1; p-- > lo;) {
          out.push_back(a.vertex(p));
          if (stats) ++stats->report_touches;
        }
      },
      [&](std::size_t) {
        if (stats) ++stats->report_touches;
      });
  return out;
}

std::uint64_t count_chain(const ChainResult& c, QueryStats* stats) {
  std::uint64_t n = 0;
  walk_chain(
      c,
      [&](std::size_t, std::uint32_t lo, std::uint32_t hi) {
        n += hi - lo + 1;
        if (stats) ++stats->walk_steps;
      },
      [&](std::size_t) {
        if (stats) ++stats->walk_steps;
      });
  return n;
}

double perimeter_chain(const ChainResult& c, QueryStats* stats) {
  double total = 0;
  walk_chain(
      c,
      [&](std::size_t k, std::uint32_t lo, std::uint32_t hi) {
        if (stats) ++stats->walk_steps;
        const ArcView& a = c.hs[k].arc;
        const std::uint32_t steps = hi - lo;
        if (steps == 0) return;
        // The arc's edges are hull edges; length is direction-free.
        total += a.step > 0 ? a.hull->perim_ccw(a.hull_pos(lo), steps)
                            : a.hull->perim_ccw(a.hull_pos(hi), steps);
      },
      [&](std::size_t k) {
        if (stats) ++stats->walk_steps;
        const TangentRecord t = bridge_rec(c, k);
        total += dist(c.hs[k].arc.vertex(t.i1), c.hs[k + 1].arc.vertex(t.i2));
      });
  return total;
}

Int128 complement_area_chain(const ChainResult& c, Point corner,
                             QueryStats* stats) {
  if (c.empty()) return 0;
  // Shoelace of the closed polygon corner -> y-extreme -> (chain, descending)
  // -> x-extreme -> corner, evaluated in real coordinates; the frame's
  // reflection sign turns it into the normalized-positive value.
  Int128 sum = cross2(corner, c.y_extreme());
  walk_chain(
      c,
      [&](std::size_t k, std::uint32_t lo, std::uint32_t hi) {
        if (stats) ++stats->walk_steps;
        const ArcView& a = c.hs[k].arc;
        const std::uint32_t steps = hi - lo;
        if (steps == 0) return;
        // Walking the chain downward traverses hull edges backwards when the
        // arc follows the hull CCW, forwards when it follows it CW.
        sum += a.step > 0 ? -a.hull->cross_ccw(a.hull_pos(lo), steps)
                          : a.hull->cross_ccw(a.hull_pos(hi), steps);
      },
      [&](std::size_t k) {
        if (stats) ++stats->walk_steps;
        const TangentRecord t = bridge_rec(c, k);
        sum += cross2(c.hs[k + 1].arc.vertex(t.i2), c.hs[k].arc.vertex(t.i1));
      });
  sum += cross2(c.x_extreme(), corner);
  return Frame::of(c.quad).flip() * sum;
}

std::optional<Extremes> extremes(const RangeHullTree& t, const QueryRect& q,
                                 QueryStats& stats) {
  if (!q.valid() || t.n == 0) return std::nullopt;
  // One scan per diagonal frame: Q1 arcs end at the (x,y)- and (y,x)-maxima,
  // Q3 arcs at the corresponding minima.
  Extremes e{};
  bool any = false;
  for (Quadrant quad : {Quadrant::q1, Quadrant::q3}) {
    const Frame f = Frame::of(quad);
    bool found = false;
    Point best_x{}, best_y{};
    for (const PrimaryNode* v : decompose_x(t, q.x_lo, q.x_hi)) {
      for (const SecondaryNode* w : decompose_y(*v, q.y_lo, q.y_hi)) {
        ++stats.canonical_nodes_visited;
        ArcView arc = arc_view(w->hull, quad);
        if (!found || f.lex_xy_less_n(best_x, arc.front()))
          best_x = arc.front();
        if (!found || f.lex_yx_less_n(best_y, arc.back())) best_y = arc.back();
        found = true;
      }
    }
    if (!found) return std::nullopt;
    any = true;
    if (quad == Quadrant::q1) {
      e.xmax = best_x;
      e.ymax = best_y;
    } else {
      e.xmin = best_x;
      e.ymin = best_y;
    }
  }
  return any ? std::optional<Extremes>(e) : std::nullopt;
}

namespace {

struct FourChains {
  std::array<ChainResult, 4> c;
  bool empty() const { return c[0].empty(); }

  const ChainResult& q1() const { return c[0]; }
  const ChainResult& q2() const { return c[1]; }
  const ChainResult& q3() const { return c[2]; }
  const ChainResult& q4() const { return c[3]; }
};

FourChains build_all(const RangeHullTree& t, const QueryRect& q,
                     QueryStats& stats, Mutation mut = Mutation::none) {
  FourChains fc;
  for (int i = 0; i < 4; ++i)
    fc.c[i] = build_chain(t, q, kAllQuadrants[i], stats, mut);
  return fc;
}

// Extreme points read off the chain endpoints; identical to extremes() by
// construction of the seeds.
Extremes extremes_of(const FourChains& fc) {
  return Extremes{fc.q1().x_extreme(), fc.q1().y_extreme(),
                  fc.q3().x_extreme(), fc.q3().y_extreme()};
}

Point corner_of(const ChainResult& c) {
  return Point{c.x_extreme().x, c.y_extreme().y};
}

// Mirrors the stitch in query_report without materializing any run: interior
// counts plus distinct junction endpoints.
std::uint64_t stitched_count(const FourChains& fc, QueryStats& stats) {
  std::uint64_t size = 0;
  Point first{}, last{};
  auto append_run = [&](Point s, Point e, std::uint64_t cnt) {
    if (cnt == 0) return;
    if (size > 0 && last == s) {
      if (--cnt == 0) return;
    }
    if (size == 0) first = s;
    size += cnt;
    last = e;
  };
  const Point t1 = fc.q1().y_extreme(), s1 = fc.q1().x_extreme();
  append_run(t1, t1, 1);
  append_run(fc.q2().y_extreme(), fc.q2().x_extreme(),
             count_chain(fc.q2(), &stats));
  append_run(fc.q3().x_extreme(), fc.q3().y_extreme(),
             count_chain(fc.q3(), &stats));
  append_run(fc.q4().y_extreme(), fc.q4().x_extreme(),
             count_chain(fc.q4(), &stats));
  append_run(s1, t1, count_chain(fc.q1(), &stats));
  if (size > 1 && last == first) --size;
  return size;
}

double stitched_perimeter(const FourChains& fc, QueryStats& stats) {
  double total = 0;
  for (const ChainResult& c : fc.c) total += perimeter_chain(c, &stats);
  total += dist(fc.q1().y_extreme(), fc.q2().y_extreme());
  total += dist(fc.q2().x_extreme(), fc.q3().x_extreme());
  total += dist(fc.q3().y_extreme(), fc.q4().y_extreme());
  total += dist(fc.q4().x_extreme(), fc.q1().x_extreme());
  return total;
}

}  // namespace

std::vector<Point> query_report(const RangeHullTree& t, const QueryRect& q,
                                QueryStats& stats, Mutation mut) {
  FourChains fc = build_all(t, q, stats, mut);
  if (fc.empty()) return {};
  auto r1 = report_chain(fc.q1(), &stats);
  auto r2 = report_chain(fc.q2(), &stats);
  auto r3 = report_chain(fc.q3(), &stats);
  auto r4 = report_chain(fc.q4(), &stats);

  // CCW cycle from the max-y vertex: Q2 run as reported (ymax -> xmin), Q3
  // and Q1 runs reversed, flat extreme edges appearing wherever consecutive
  // runs do not share an endpoint.
  std::vector<Point> out;
  out.reserve(r1.size() + r2.size() + r3.size() + r4.size() + 1);
  auto append = [&](const Point& p) {
    if (out.empty() || !(out.back() == p)) out.push_back(p);
  };
  append(r1.front());
  for (const Point& p : r2) append(p);
  for (auto it = r3.rbegin(); it != r3.rend(); ++it) append(*it);
  for (const Point& p : r4) append(p);
  for (auto it = r1.rbegin(); it != r1.rend(); ++it) append(*it);
  if (out.size() > 1 && out.back() == out.front()) out.pop_back();
  return out;
}

std::uint64_t query_count(const RangeHullTree& t, const QueryRect& q,
                          QueryStats& stats) {
  FourChains fc = build_all(t, q, stats);
  if (fc.empty()) return 0;
  return stitched_count(fc, stats);
}

double query_perimeter(const RangeHullTree& t, const QueryRect& q,
                       QueryStats& stats) {
  FourChains fc = build_all(t, q, stats);
  if (fc.empty()) return 0.0;
  // Four chain polylines plus the four junction edges (zero length whenever
  // neighbouring runs share their endpoint).
  return stitched_perimeter(fc, stats);
}

namespace {

AreaBreakdown breakdown_of(const FourChains& fc, QueryStats& stats) {
  AreaBreakdown b;
  const Extremes e = extremes_of(fc);
  b.box2 = 2 * Int128(e.xmax.x - e.xmin.x) * Int128(e.ymax.y - e.ymin.y);
  for (int i = 0; i < 4; ++i)
    b.complements[static_cast<std::size_t>(i)] =
        complement_area_chain(fc.c[static_cast<std::size_t>(i)],
                              corner_of(fc.c[static_cast<std::size_t>(i)]),
                              &stats);
  b.area2 = b.box2;
  for (const Int128& v : b.complements) b.area2 -= v;
  return b;
}

}  // namespace

AreaBreakdown query_area_breakdown(const RangeHullTree& t, const QueryRect& q,
                                   QueryStats& stats) {
  FourChains fc = build_all(t, q, stats);
  if (fc.empty()) return {};
  return breakdown_of(fc, stats);
}

AreaResult query_area(const RangeHullTree& t, const QueryRect& q,
                      QueryStats& stats) {
  AreaBreakdown b = query_area_breakdown(t, q, stats);
  return AreaResult{b.area2, static_cast<double>(b.area2) / 2.0};
}

AggregateResult query_aggregate(const RangeHullTree& t, const QueryRect& q,
                                QueryStats& stats) {
  AggregateResult r;
  FourChains fc = build_all(t, q, stats);
  if (fc.empty()) return r;
  r.count = stitched_count(fc, stats);
  r.perimeter = stitched_perimeter(fc, stats);
  r.area2 = breakdown_of(fc, stats).area2;
  r.extremes = extremes_of(fc);
  return r;
}

}  // namespace rangehull
