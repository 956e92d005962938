#include "rangehull/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <ostream>

#include "rangehull/oracle.hpp"
#include "rangehull/rangetree.hpp"

namespace rangehull {

std::vector<Point> generate_points(const std::string& dist, std::uint64_t n,
                                   std::uint64_t seed, std::int64_t range) {
  Rng rng(seed * 0x100000001b3ULL + 14695981039346656037ULL);
  std::vector<Point> pts;
  pts.reserve(n);
  if (dist == "uniform") {
    for (std::uint64_t i = 0; i < n; ++i)
      pts.push_back({rng.range(0, range), rng.range(0, range)});
  } else if (dist == "circle") {
    const double cx = static_cast<double>(range) / 2.0;
    const double r = cx;
    for (std::uint64_t i = 0; i < n; ++i) {
      const double t = 6.283185307179586 *
                       (static_cast<double>(rng.next() >> 11) * 0x1.0p-53);
      pts.push_back({static_cast<std::int64_t>(std::llround(cx + r * std::cos(t))),
                     static_cast<std::int64_t>(std::llround(cx + r * std::sin(t)))});
    }
  } else if (dist == "clustered") {
    const std::uint64_t nc = std::max<std::uint64_t>(1, n / 64);
    std::vector<Point> centers;
    for (std::uint64_t i = 0; i < nc; ++i)
      centers.push_back({rng.range(0, range), rng.range(0, range)});
    const std::int64_t spread = std::max<std::int64_t>(1, range / 64);
    for (std::uint64_t i = 0; i < n; ++i) {
      const Point c = centers[rng.next() % nc];
      const std::int64_t x = c.x + rng.range(-spread, spread);
      const std::int64_t y = c.y + rng.range(-spread, spread);
      pts.push_back({std::clamp<std::int64_t>(x, 0, range),
                     std::clamp<std::int64_t>(y, 0, range)});
    }
  } else if (dist == "grid") {
    std::uint64_t side = 1;
    while (side * side < n) ++side;
    for (std::uint64_t i = 0; i < n; ++i) {
      const std::uint64_t gx = i % side, gy = i / side;
      auto coord = [&](std::uint64_t g) {
        return side == 1 ? range / 2
                         : static_cast<std::int64_t>(
                               (static_cast<unsigned __int128>(range) * g) /
                               (side - 1));
      };
      pts.push_back({coord(gx), coord(gy)});
    }
  } else if (dist == "collinear") {
    const int variant = static_cast<int>(seed % 3);
    for (std::uint64_t i = 0; i < n; ++i) {
      const std::int64_t t = rng.range(0, range);
      if (variant == 0)
        pts.push_back({t, range / 2});
      else if (variant == 1)
        pts.push_back({range / 2, t});
      else
        pts.push_back({t, t});
    }
  } else {
    std::abort();  // caller validates the tag
  }
  return pts;
}

namespace {

bool close_rel(double got, double want, double tol = 1e-9) {
  return std::abs(got - want) <= tol * std::max(1.0, std::abs(want));
}

struct Instance {
  std::string name;
  std::vector<Point> pts;
};

std::vector<Instance> degenerate_corpus() {
  std::vector<Instance> out;
  out.push_back({"singleton", {{7, 7}}});
  out.push_back({"pair-vertical", {{5, 1}, {5, 3}}});
  out.push_back({"pair-horizontal", {{1, 7}, {5, 7}}});
  out.push_back({"pair-diagonal", {{0, 0}, {3, 4}}});
  out.push_back({"duplicates",
                 {{2, 2}, {2, 2}, {2, 2}, {9, 1}, {9, 1}, {4, 6}, {4, 6}}});
  {
    Instance in{"collinear-horizontal", {}};
    for (int i = 0; i < 17; ++i) in.pts.push_back({3 * i, 40});
    in.pts.push_back({21, 40});  // duplicate on the line
    out.push_back(std::move(in));
  }
  {
    Instance in{"collinear-vertical", {}};
    for (int i = 0; i < 17; ++i) in.pts.push_back({40, 5 * i});
    out.push_back(std::move(in));
  }
  {
    Instance in{"collinear-diagonal", {}};
    for (int i = 0; i < 17; ++i) in.pts.push_back({i, i});
    out.push_back(std::move(in));
  }
  {
    Instance in{"grid-8x8", {}};
    for (int x = 0; x < 8; ++x)
      for (int y = 0; y < 8; ++y) in.pts.push_back({10 * x, 10 * y});
    out.push_back(std::move(in));
  }
  {
    Instance in{"grid-5x3-offset", {}};
    for (int x = 0; x < 5; ++x)
      for (int y = 0; y < 3; ++y) in.pts.push_back({7 * x + 1, 9 * y + 2});
    out.push_back(std::move(in));
  }
  out.push_back({"square-plus-center",
                 {{0, 0}, {8, 0}, {8, 8}, {0, 8}, {4, 4}}});
  out.push_back({"diamond", {{2, 0}, {4, 2}, {2, 4}, {0, 2}}});
  out.push_back({"quad-skew", {{1, 0}, {4, 1}, {2, 4}, {0, 2}}});
  {
    Instance in{"clustered-small",
                generate_points("clustered", 48, 11, 1000)};
    out.push_back(std::move(in));
  }
  {
    Instance in{"circle-small", generate_points("circle", 40, 13, 10000)};
    out.push_back(std::move(in));
  }
  return out;
}

std::vector<QueryRect> corpus_rects(const std::vector<Point>& pts, Rng& rng) {
  std::int64_t xmin = pts[0].x, xmax = pts[0].x;
  std::int64_t ymin = pts[0].y, ymax = pts[0].y;
  for (const Point& p : pts) {
    xmin = std::min(xmin, p.x);
    xmax = std::max(xmax, p.x);
    ymin = std::min(ymin, p.y);
    ymax = std::max(ymax, p.y);
  }
  std::vector<QueryRect> qs;
  qs.push_back({xmin, xmax, ymin, ymax});                      // full
  qs.push_back({xmin - 10, xmax + 10, ymin - 10, ymax + 10});  // loose
  qs.push_back({xmax + 1, xmax + 5, ymin, ymax});              // empty
  qs.push_back({pts[0].x, pts[0].x, pts[0].y, pts[0].y});      // point rect
  qs.push_back({xmin, xmax, ymin, ymin});                      // bottom line
  qs.push_back({xmax, xmax, ymin, ymax});                      // right line
  const std::int64_t mx = (xmin + xmax) / 2, my = (ymin + ymax) / 2;
  qs.push_back({xmin, mx, ymin, my});
  qs.push_back({mx, xmax, my, ymax});
  qs.push_back({mx, xmax, ymin, my});
  for (int k = 0; k < 12; ++k) {
    std::int64_t a = rng.range(xmin - 2, xmax + 2);
    std::int64_t b = rng.range(xmin - 2, xmax + 2);
    std::int64_t c = rng.range(ymin - 2, ymax + 2);
    std::int64_t d = rng.range(ymin - 2, ymax + 2);
    qs.push_back({std::min(a, b), std::max(a, b), std::min(c, d),
                  std::max(c, d)});
  }
  return qs;
}

struct Checker {
  Mutation mut;
  std::ostream* diag;
  std::uint64_t max_reports;
  std::uint64_t reported = 0;
  VerifyOutcome out;

  void dump(const std::string& name, const std::vector<Point>& pts,
            const QueryRect& q, const char* what) {
    if (!diag || reported >= max_reports) return;
    ++reported;
    *diag << "MISMATCH [" << what << "] instance=" << name << " rect=" << q.x_lo
          << " " << q.x_hi << " " << q.y_lo << " " << q.y_hi << "\n points:";
    for (const Point& p : pts) *diag << " (" << p.x << "," << p.y << ")";
    *diag << "\n";
  }

  void check(const std::string& name, const std::vector<Point>& pts,
             const RangeHullTree& tree, const QueryRect& q) {
    ++out.queries;
    const auto filt = oracle::oracle_filter(pts, q);
    const auto ohull = oracle::oracle_hull(filt);
    const auto om = oracle::oracle_measures(ohull);

    QueryStats st;
    bool ok = true;
    const auto rep = query_report(tree, q, st, mut);
    if (!(rep == ohull)) {
      ok = false;
      ++out.report_mismatches;
      dump(name, pts, q, "report");
    }
    if (query_count(tree, q, st) != om.count) {
      ok = false;
      ++out.count_mismatches;
      dump(name, pts, q, "count");
    }
    const auto ab = query_area_breakdown(tree, q, st);
    if (ab.area2 != om.area2) {
      ok = false;
      ++out.area_mismatches;
      dump(name, pts, q, "area");
    }
    Int128 comp_sum = 0;
    for (const Int128& v : ab.complements) comp_sum += v;
    if (comp_sum != ab.box2 - om.area2) {
      ok = false;
      ++out.box_identity_mismatches;
      dump(name, pts, q, "box-identity");
    }
    if (!close_rel(query_perimeter(tree, q, st), om.perimeter)) {
      ok = false;
      ++out.perimeter_mismatches;
      dump(name, pts, q, "perimeter");
    }
    if (!ok) ++out.failures;
  }
};

}  // namespace

VerifyOutcome run_verification(const VerifyParams& p, Mutation mut,
                               std::ostream* diag) {
  Checker ck{mut, diag, p.max_reports, 0, {}};
  Rng rng(p.seed ^ 0x5bd1e995u);

  for (const Instance& in : degenerate_corpus()) {
    ++ck.out.instances;
    const RangeHullTree tree = build_tree(in.pts);
    for (const QueryRect& q : corpus_rects(in.pts, rng))
      ck.check(in.name, in.pts, tree, q);
  }

  for (std::uint64_t i = 0; i < p.instances; ++i) {
    ++ck.out.instances;
    const std::uint64_t n = 1 + rng.next() % p.n_max;
    std::int64_t range = 1000000;
    if (p.mixed_ranges) {
      const std::int64_t ranges[] = {40, 1000, 1000000};
      range = ranges[i % 3];
    }
    std::vector<Point> pts;
    pts.reserve(n);
    for (std::uint64_t k = 0; k < n; ++k)
      pts.push_back({rng.range(0, range), rng.range(0, range)});
    const RangeHullTree tree = build_tree(pts);
    const std::string name = "random-" + std::to_string(i);

    for (std::uint64_t j = 0; j < p.queries_per; ++j) {
      QueryRect q;
      switch (j % 4) {
        case 0: {
          std::int64_t a = rng.range(0, range), b = rng.range(0, range);
          std::int64_t c = rng.range(0, range), d = rng.range(0, range);
          q = {std::min(a, b), std::max(a, b), std::min(c, d), std::max(c, d)};
          break;
        }
        case 1: {  // corners near data points
          const Point u = pts[rng.next() % pts.size()];
          const Point v = pts[rng.next() % pts.size()];
          q = {std::min(u.x, v.x), std::max(u.x, v.x), std::min(u.y, v.y),
               std::max(u.y, v.y)};
          break;
        }
        case 2: {  // degenerate strip through a data point
          const Point u = pts[rng.next() % pts.size()];
          if (rng.next() & 1)
            q = {u.x, u.x, 0, range};
          else
            q = {0, range, u.y, u.y};
          break;
        }
        default:
          q = {0, range, 0, range};
          break;
      }
      ck.check(name, pts, tree, q);
    }
  }
  return ck.out;
}

}  // namespace rangehull
