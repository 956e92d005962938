#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "rangehull/geom.hpp"

namespace rangehull {

/// Orthogonal query rectangle; all four bounds inclusive.
struct QueryRect {
  std::int64_t x_lo = 0;
  std::int64_t x_hi = 0;
  std::int64_t y_lo = 0;
  std::int64_t y_hi = 0;

  bool valid() const { return x_lo <= x_hi && y_lo <= y_hi; }
};

inline constexpr std::uint32_t kNoChild = 0xffffffffu;

/// Node of a secondary tree: a contiguous slice of its primary node's
/// (y, x)-sorted points, with the canonical hull of that slice. Leaves carry
/// singleton hulls so decompositions need no special-casing.
struct SecondaryNode {
  std::uint32_t left = kNoChild;
  std::uint32_t right = kNoChild;
  std::uint32_t begin = 0;
  std::uint32_t end = 0;
  CanonicalHull hull;
};

/// Node of the primary tree: a contiguous slice of the (x, y)-sorted input
/// plus a secondary tree over the same points keyed by (y, x).
struct PrimaryNode {
  std::uint32_t left = kNoChild;
  std::uint32_t right = kNoChild;
  std::uint32_t begin = 0;
  std::uint32_t end = 0;
  std::uint32_t sec_root = 0;
  std::vector<Point> pts_yx;
  std::vector<SecondaryNode> sec;
};

struct RangeHullTree {
  std::vector<Point> pts_xy;  // deduplicated input, (x, y)-sorted
  std::vector<PrimaryNode> nodes;
  std::uint32_t root = 0;
  std::size_t n = 0;
  std::size_t dedup_count = 0;
};

/// Build the static structure. Duplicate points are removed (and counted);
/// throws EmptyInput if nothing remains, CoordinateOutOfRange if any
/// coordinate exceeds the 2^30 ingestion bound.
RangeHullTree build_tree(std::span<const Point> pts);

/// Maximal primary subtrees whose x-interval lies inside [x_lo, x_hi],
/// left to right. Empty ranges yield an empty sequence.
std::vector<const PrimaryNode*> decompose_x(const RangeHullTree& t,
                                            std::int64_t x_lo,
                                            std::int64_t x_hi);

/// Canonical subtrees of `v`'s secondary tree inside [y_lo, y_hi], bottom to
/// top.
std::vector<const SecondaryNode*> decompose_y(const PrimaryNode& v,
                                              std::int64_t y_lo,
                                              std::int64_t y_hi);

struct StorageStats {
  std::size_t primary_nodes = 0;
  std::size_t secondary_nodes = 0;
  std::size_t stored_vertices = 0;  // sum of hull sizes over secondary nodes
  std::size_t bytes_estimate = 0;
};

StorageStats storage_stats(const RangeHullTree& t);

}  // namespace rangehull
