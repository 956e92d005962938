#include "rangehull/cli_ops.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "rangehull/chains.hpp"
#include "rangehull/oracle.hpp"
#include "rangehull/verify.hpp"

namespace rangehull::cli {

namespace {

using nlohmann::json;

bool parse_i64_fields(const std::string& line, std::int64_t* vals,
                      std::size_t want) {
  const char* p = line.data();
  const char* end = p + line.size();
  for (std::size_t i = 0; i < want; ++i) {
    while (p < end && (*p == ' ' || *p == '\t')) ++p;
    auto [next, ec] = std::from_chars(p, end, vals[i]);
    if (ec != std::errc()) return false;
    p = next;
  }
  while (p < end && (*p == ' ' || *p == '\t' || *p == '\r')) ++p;
  return p == end;
}

bool skippable(const std::string& line) {
  for (char c : line) {
    if (c == '#') return true;
    if (c != ' ' && c != '\t' && c != '\r') return false;
  }
  return true;
}

template <typename Fn>
ParseResult parse_lines(const std::string& path, Fn&& on_line) {
  std::ifstream in(path);
  if (!in) return {kParseError, "cannot open '" + path + "'"};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (skippable(line)) continue;
    ParseResult r = on_line(line, lineno);
    if (r.code != kOk) return r;
  }
  return {};
}

}  // namespace

ParseResult parse_points_file(const std::string& path,
                              std::vector<Point>& out) {
  return parse_lines(path, [&](const std::string& line,
                               std::size_t lineno) -> ParseResult {
    std::int64_t v[2];
    if (!parse_i64_fields(line, v, 2))
      return {kParseError,
              path + ":" + std::to_string(lineno) + ": expected 'x y'"};
    Point p{v[0], v[1]};
    if (!coord_in_range(p))
      return {kConstraintViolation,
              path + ":" + std::to_string(lineno) +
                  ": coordinate exceeds the 2^30 bound"};
    out.push_back(p);
    return {};
  });
}

ParseResult parse_queries_file(const std::string& path,
                               std::vector<QueryRect>& out) {
  return parse_lines(path, [&](const std::string& line,
                               std::size_t lineno) -> ParseResult {
    std::int64_t v[4];
    if (!parse_i64_fields(line, v, 4))
      return {kParseError, path + ":" + std::to_string(lineno) +
                               ": expected 'x_lo x_hi y_lo y_hi'"};
    QueryRect q{v[0], v[1], v[2], v[3]};
    if (!q.valid())
      return {kParseError, path + ":" + std::to_string(lineno) +
                               ": inverted rectangle bounds"};
    out.push_back(q);
    return {};
  });
}

int cmd_gen(const GenConfig& cfg, std::ostream& out, std::ostream& err) {
  static const char* kDists[] = {"uniform", "circle", "clustered", "grid",
                                 "collinear"};
  if (std::find(std::begin(kDists), std::end(kDists), cfg.dist) ==
      std::end(kDists)) {
    err << "gen: unknown distribution '" << cfg.dist << "'\n";
    return kParseError;
  }
  if (cfg.n < 1 || cfg.range < 1 || cfg.range > kCoordLimit) {
    err << "gen: need n >= 1 and 1 <= range <= 2^30\n";
    return kConstraintViolation;
  }
  const auto pts = generate_points(cfg.dist, cfg.n, cfg.seed, cfg.range);

  std::ofstream file;
  std::ostream* os = &out;
  if (!cfg.out_path.empty()) {
    file.open(cfg.out_path);
    if (!file) {
      err << "gen: cannot write '" << cfg.out_path << "'\n";
      return kParseError;
    }
    os = &file;
  }
  *os << "# points n=" << cfg.n << " dist=" << cfg.dist
      << " seed=" << cfg.seed << " range=" << cfg.range << "\n";
  for (const Point& p : pts) *os << p.x << " " << p.y << "\n";
  return kOk;
}

namespace {

json record_for(const RangeHullTree& tree, const QueryRect& q,
                const std::string& mode, bool with_stats) {
  QueryStats st;
  json rec = json::object();
  const bool want_hull = mode == "report" || mode == "all";
  const bool want_count = mode == "count" || mode == "report" || mode == "all";
  const bool want_area = mode == "area" || mode == "all";
  const bool want_per = mode == "perimeter" || mode == "all";

  if (want_hull) {
    const auto hull = query_report(tree, q, st);
    json arr = json::array();
    for (const Point& p : hull) arr.push_back(json::array({p.x, p.y}));
    rec["hull"] = std::move(arr);
    if (want_count) rec["count"] = hull.size();
  } else if (want_count) {
    rec["count"] = query_count(tree, q, st);
  }
  if (want_area) {
    const AreaResult a = query_area(tree, q, st);
    rec["area2"] = static_cast<std::uint64_t>(a.area2);
    rec["area"] = a.area;
  }
  if (want_per) rec["perimeter"] = query_perimeter(tree, q, st);
  if (with_stats) {
    rec["stats"] = {{"orient_calls", st.orient_calls},
                    {"tangent_calls", st.tangent_calls},
                    {"tangent_probes", st.tangent_probes},
                    {"pushes", st.pushes},
                    {"pops", st.pops},
                    {"canonical_nodes_visited", st.canonical_nodes_visited},
                    {"report_touches", st.report_touches},
                    {"walk_steps", st.walk_steps},
                    {"tangent_budget_violations", st.tangent_budget_violations}};
  }
  return rec;
}

}  // namespace

int cmd_query(const QueryConfig& cfg, std::ostream& out, std::ostream& err) {
  static const char* kModes[] = {"report", "count", "area", "perimeter",
                                 "all"};
  if (std::find(std::begin(kModes), std::end(kModes), cfg.mode) ==
      std::end(kModes)) {
    err << "query: unknown mode '" << cfg.mode << "'\n";
    return kParseError;
  }

  std::vector<Point> pts;
  if (ParseResult r = parse_points_file(cfg.points_path, pts);
      r.code != kOk) {
    err << r.message << "\n";
    return r.code;
  }
  std::vector<QueryRect> queries;
  if (ParseResult r = parse_queries_file(cfg.queries_path, queries);
      r.code != kOk) {
    err << r.message << "\n";
    return r.code;
  }
  if (pts.empty()) {
    err << cfg.points_path << ": no points\n";
    return kParseError;
  }

  const RangeHullTree tree = build_tree(pts);

  std::vector<std::string> lines(queries.size());
  const int threads =
      std::max(1, std::min<int>(cfg.threads,
                                static_cast<int>(queries.size() ? queries.size()
                                                                : 1)));
  auto worker = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i)
      lines[i] = record_for(tree, queries[i], cfg.mode, cfg.stats).dump();
  };
  if (threads <= 1) {
    worker(0, queries.size());
  } else {
    std::vector<std::thread> pool;
    const std::size_t chunk = (queries.size() + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
      const std::size_t b = static_cast<std::size_t>(t) * chunk;
      if (b >= queries.size()) break;
      pool.emplace_back(worker, b, std::min(queries.size(), b + chunk));
    }
    for (auto& th : pool) th.join();
  }
  // Records go out in input order no matter which thread produced them.
  for (const std::string& l : lines) out << l << "\n";
  return kOk;
}

int cmd_verify(const VerifyConfig& cfg, std::ostream& out, std::ostream& err) {
  Mutation mut = Mutation::none;
  if (cfg.inject_mutation == "pop-strict")
    mut = Mutation::pop_strict;
  else if (cfg.inject_mutation == "skip-lone-tangent")
    mut = Mutation::skip_lone_tangent;
  else if (cfg.inject_mutation != "none") {
    err << "verify: unknown mutation '" << cfg.inject_mutation << "'\n";
    return kParseError;
  }

  VerifyParams p;
  p.n_max = std::max<std::uint64_t>(1, cfg.n_max);
  p.instances = std::max<std::uint64_t>(1, cfg.instances);
  p.queries_per = std::max<std::uint64_t>(1, cfg.queries_per);
  p.seed = cfg.seed;
  p.mixed_ranges = true;

  const VerifyOutcome o = run_verification(p, mut, &err);
  out << "verify: " << o.instances << " instances, " << o.queries
      << " queries, " << o.failures << " failures\n";
  return o.ok() ? kOk : kVerifyFailed;
}

int cmd_bench(const BenchConfig& cfg, std::ostream& out, std::ostream& err) {
  std::vector<Point> pts;
  if (ParseResult r = parse_points_file(cfg.points_path, pts);
      r.code != kOk) {
    err << r.message << "\n";
    return r.code;
  }
  if (pts.empty()) {
    err << cfg.points_path << ": no points\n";
    return kParseError;
  }

  const auto t0 = std::chrono::steady_clock::now();
  const RangeHullTree tree = build_tree(pts);
  const auto t1 = std::chrono::steady_clock::now();
  const double build_ms =
      std::chrono::duration<double, std::milli>(t1 - t0).count();

  // Random query mix: mostly windows around data points, a few full sweeps.
  Rng rng(cfg.seed);
  std::int64_t xmin = pts[0].x, xmax = pts[0].x, ymin = pts[0].y,
               ymax = pts[0].y;
  for (const Point& p : pts) {
    xmin = std::min(xmin, p.x);
    xmax = std::max(xmax, p.x);
    ymin = std::min(ymin, p.y);
    ymax = std::max(ymax, p.y);
  }
  std::vector<QueryRect> queries;
  for (std::uint64_t i = 0; i < cfg.queries; ++i) {
    if (i % 16 == 15) {
      queries.push_back({xmin, xmax, ymin, ymax});
      continue;
    }
    const Point u = pts[rng.next() % pts.size()];
    const std::int64_t wx = std::max<std::int64_t>(1, (xmax - xmin) / 20);
    const std::int64_t wy = std::max<std::int64_t>(1, (ymax - ymin) / 20);
    queries.push_back({u.x - rng.range(0, wx), u.x + rng.range(0, wx),
                       u.y - rng.range(0, wy), u.y + rng.range(0, wy)});
  }

  struct ModeReport {
    std::string mode;
    double median_us = 0, p99_us = 0;
    QueryStats totals;
  };
  auto run_mode = [&](const std::string& mode) {
    ModeReport rep;
    rep.mode = mode;
    std::vector<double> lat;
    lat.reserve(queries.size());
    for (std::uint64_t w = 0; w < cfg.warmup; ++w)
      for (const QueryRect& q : queries) {
        QueryStats st;
        if (mode == "report")
          (void)query_report(tree, q, st);
        else if (mode == "count")
          (void)query_count(tree, q, st);
        else if (mode == "area")
          (void)query_area(tree, q, st);
        else
          (void)query_perimeter(tree, q, st);
      }
    for (std::uint64_t it = 0; it < cfg.iters; ++it) {
      for (const QueryRect& q : queries) {
        QueryStats st;
        const auto a = std::chrono::steady_clock::now();
        if (mode == "report")
          (void)query_report(tree, q, st);
        else if (mode == "count")
          (void)query_count(tree, q, st);
        else if (mode == "area")
          (void)query_area(tree, q, st);
        else
          (void)query_perimeter(tree, q, st);
        const auto b = std::chrono::steady_clock::now();
        lat.push_back(std::chrono::duration<double, std::micro>(b - a).count());
        rep.totals += st;
      }
    }
    std::sort(lat.begin(), lat.end());
    rep.median_us = lat[lat.size() / 2];
    rep.p99_us = lat[std::min(lat.size() - 1,
                              static_cast<std::size_t>(lat.size() * 99 / 100))];
    return rep;
  };

  std::vector<ModeReport> reports;
  for (const char* m : {"report", "count", "area", "perimeter"})
    reports.push_back(run_mode(m));

  // Brute-force oracle on the same queries, one pass.
  std::vector<double> olat;
  olat.reserve(queries.size());
  for (const QueryRect& q : queries) {
    const auto a = std::chrono::steady_clock::now();
    const auto filt = oracle::oracle_filter(pts, q);
    const auto hull = oracle::oracle_hull(filt);
    (void)oracle::oracle_measures(hull);
    const auto b = std::chrono::steady_clock::now();
    olat.push_back(std::chrono::duration<double, std::micro>(b - a).count());
  }
  std::sort(olat.begin(), olat.end());
  const double oracle_median = olat[olat.size() / 2];

  json j;
  j["n"] = tree.n;
  j["build_ms"] = build_ms;
  j["queries"] = queries.size();
  j["oracle_median_us"] = oracle_median;
  const std::uint64_t runs = cfg.iters * queries.size();
  out << "bench: n=" << tree.n << " build=" << build_ms << "ms queries="
      << queries.size() << " iters=" << cfg.iters << "\n";
  out << "mode        median_us   p99_us      orient/q  tangents/q  probes/tangent  pushes/q\n";
  for (const ModeReport& r : reports) {
    const double per = static_cast<double>(runs);
    const double probes_per_tangent =
        r.totals.tangent_calls
            ? static_cast<double>(r.totals.tangent_probes) /
                  static_cast<double>(r.totals.tangent_calls)
            : 0.0;
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "%-10s %10.2f %9.2f %11.1f %11.2f %15.2f %9.2f",
                  r.mode.c_str(), r.median_us, r.p99_us,
                  static_cast<double>(r.totals.orient_calls) / per,
                  static_cast<double>(r.totals.tangent_calls) / per,
                  probes_per_tangent,
                  static_cast<double>(r.totals.pushes) / per);
    out << buf << "\n";
    j["modes"][r.mode] = {
        {"median_us", r.median_us},
        {"p99_us", r.p99_us},
        {"orient_per_query",
         static_cast<double>(r.totals.orient_calls) / per},
        {"tangent_calls_per_query",
         static_cast<double>(r.totals.tangent_calls) / per},
        {"probes_per_tangent", probes_per_tangent},
        {"pushes_per_query", static_cast<double>(r.totals.pushes) / per}};
  }
  j["report_vs_oracle_median_ratio"] =
      reports[0].median_us > 0 ? oracle_median / reports[0].median_us : 0.0;
  out << "oracle      " << oracle_median << " us median; report speedup x"
      << (reports[0].median_us > 0 ? oracle_median / reports[0].median_us
                                   : 0.0)
      << "\n";
  out << j.dump() << "\n";
  (void)err;
  return kOk;
}

}  // namespace rangehull::cli
