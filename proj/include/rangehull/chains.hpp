#pragma once

#include <array>
#include <optional>
#include <vector>

#include "rangehull/geom.hpp"
#include "rangehull/rangetree.hpp"
#include "rangehull/stats.hpp"
#include "rangehull/tangent.hpp"

namespace rangehull {

/// Test hook: two deliberately wrong variants of the merge, kept faithful to
/// plausible implementation mistakes so the verification suite can prove it
/// would catch them. Production callers leave this at none.
enum class Mutation : std::uint8_t { none, pop_strict, skip_lone_tangent };

struct HullStackEntry {
  ArcView arc;
  std::uint32_t primary_order = 0;    // slab index in chain processing order
  std::uint32_t secondary_order = 0;  // block index inside that slab
};

/// One quadrant chain in O(log^2 n) space: the surviving canonical arcs
/// (bottom of the chain first) plus the bridge between each pair of stack
/// neighbours; ts[k] joins hs[k] (at i1) to hs[k+1] (at i2).
struct ChainResult {
  std::vector<HullStackEntry> hs;
  std::vector<TangentRecord> ts;
  Quadrant quad = Quadrant::q1;

  bool empty() const { return hs.empty(); }
  /// The chain's normalized x-extreme (its seed vertex).
  Point x_extreme() const { return hs.front().arc.front(); }
  /// The chain's normalized y-extreme (top of the last arc).
  Point y_extreme() const { return hs.back().arc.back(); }
};

/// The four extreme points of P in a rectangle, under the library tie-breaks:
/// xmax prefers larger y, ymax larger x, xmin smaller y, ymin smaller x.
struct Extremes {
  Point xmax, ymax, xmin, ymin;
};

struct AreaResult {
  Int128 area2 = 0;
  double area = 0;
};

/// Exact pieces of the area combination, exposed for the box-identity check.
struct AreaBreakdown {
  Int128 box2 = 0;  // twice the extremes-box area
  std::array<Int128, 4> complements{};
  Int128 area2 = 0;  // box2 - sum(complements)
};

struct AggregateResult {
  std::uint64_t count = 0;
  Int128 area2 = 0;
  double perimeter = 0;
  std::optional<Extremes> extremes;
};

/// Graham-scan step at hull granularity: pops stack hulls whose bridge turn
/// is non-convex, then bridges to `incoming` and pushes it.
void merge_step(std::vector<HullStackEntry>& hs, std::vector<TangentRecord>& ts,
                const HullStackEntry& incoming, QueryStats& stats,
                Mutation mut = Mutation::none);

/// Builds one quadrant chain of the hull of P inside `q`.
ChainResult build_chain(const RangeHullTree& t, const QueryRect& q,
                        Quadrant quad, QueryStats& stats,
                        Mutation mut = Mutation::none);

/// Chain vertices from the y-extreme end down to the x-extreme end.
std::vector<Point> report_chain(const ChainResult& c,
                                QueryStats* stats = nullptr);

/// |report_chain(c)| without touching O(h) vertices.
std::uint64_t count_chain(const ChainResult& c, QueryStats* stats = nullptr);

/// Polyline length of report_chain(c), from prefix sums and bridge lengths.
double perimeter_chain(const ChainResult& c, QueryStats* stats = nullptr);

/// Twice the area between the chain polyline and the two axis-parallel
/// segments joining its endpoints to `corner`; exact integer, O(|hs|).
/// `corner` is the extremes-box corner of the chain's quadrant, i.e. the
/// point (x of the chain's x-extreme, y of its y-extreme).
Int128 complement_area_chain(const ChainResult& c, Point corner,
                             QueryStats* stats = nullptr);

std::optional<Extremes> extremes(const RangeHullTree& t, const QueryRect& q,
                                 QueryStats& stats);

/// Full hull of P inside `q`: CCW, starting at the max-y vertex.
std::vector<Point> query_report(const RangeHullTree& t, const QueryRect& q,
                                QueryStats& stats,
                                Mutation mut = Mutation::none);

std::uint64_t query_count(const RangeHullTree& t, const QueryRect& q,
                          QueryStats& stats);

double query_perimeter(const RangeHullTree& t, const QueryRect& q,
                       QueryStats& stats);

AreaResult query_area(const RangeHullTree& t, const QueryRect& q,
                      QueryStats& stats);

AreaBreakdown query_area_breakdown(const RangeHullTree& t, const QueryRect& q,
                                   QueryStats& stats);

/// count, area and perimeter in one pass over the four chains.
AggregateResult query_aggregate(const RangeHullTree& t, const QueryRect& q,
                                QueryStats& stats);

}  // namespace rangehull
