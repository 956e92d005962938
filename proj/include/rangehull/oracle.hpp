#pragma once

#include <optional>
#include <span>
#include <vector>

#include "rangehull/geom.hpp"
#include "rangehull/rangetree.hpp"
#include "rangehull/tangent.hpp"

// Brute-force reference implementations used by the differential tests and
// the verify command. These share only the Point type with the fast path;
// every computation here is written independently, so agreement between the
// two sides is evidence rather than tautology.
namespace rangehull::oracle {

/// All points inside the rectangle (inclusive bounds), in input order.
std::vector<Point> oracle_filter(std::span<const Point> pts,
                                 const QueryRect& q);

/// Convex hull as a CCW vertex sequence starting at the max-y vertex (ties
/// toward larger x), strict corners only. Empty input gives an empty hull.
std::vector<Point> oracle_hull(std::span<const Point> pts);

struct Measures {
  std::uint64_t count = 0;
  Int128 area2 = 0;     // exact doubled area
  double perimeter = 0; // closed tour: 1 vertex -> 0, 2 vertices -> 2*dist
};

/// Count / shoelace / closed-tour walk over a hull vertex sequence.
Measures oracle_measures(std::span<const Point> hull);

/// Exhaustive common tangent between two quadrant arcs: tries every vertex
/// pair and keeps the pair with every vertex of both full hulls on the closed
/// left of the directed line (earlier arc -> later arc), resolving collinear
/// touches toward the maximal bridge. Returns nullopt when no such pair
/// exists (hulls not separated).
std::optional<TangentRecord> tangent_oracle(const ArcView& a,
                                            const ArcView& b);

}  // namespace rangehull::oracle
