#pragma once

#include <cstdint>

#include "rangehull/geom.hpp"
#include "rangehull/stats.hpp"

namespace rangehull {

/// Why two arcs on one chain cannot interleave: arcs from different primary
/// canonical nodes are separated by a vertical line, arcs from the same
/// primary node (different secondary nodes) by a horizontal one. The second
/// arc is always the chain-later one (normalized up-left side).
struct Separation {
  enum class Axis : std::uint8_t { vertical, horizontal };
  Axis axis = Axis::vertical;
};

/// Supporting tangent between two arcs: i1 indexes the earlier arc, i2 the
/// later one (arc-relative indices, chain order).
struct TangentRecord {
  std::uint32_t i1 = 0;
  std::uint32_t i2 = 0;
  friend bool operator==(const TangentRecord&, const TangentRecord&) = default;
};

/// Common supporting tangent of two axis-separated quadrant arcs, found with
/// O(log|a| + log|b|) orientation probes. The returned pair (p = a[i1],
/// q = b[i2]) has every vertex of both arcs on the closed left of the
/// directed line p -> q, and collinear touches resolved toward the maximal
/// bridge (earliest touch on `a`, latest on `b`). Probe counts land in
/// `stats` when provided.
TangentRecord supporting_tangent(const ArcView& a, const ArcView& b,
                                 Separation sep, QueryStats* stats);

/// Probe ceiling asserted by the tests: supporting_tangent never spends more
/// orientation probes than this on arcs of n1 and n2 vertices.
std::uint64_t tangent_probe_budget(std::size_t n1, std::size_t n2);

}  // namespace rangehull
