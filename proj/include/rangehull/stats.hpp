#pragma once

#include <cstdint>

namespace rangehull {

/// Per-query instrumentation counters. These back the empirical complexity
/// checks; the library never branches on them.
struct QueryStats {
  std::uint64_t orient_calls = 0;
  std::uint64_t tangent_calls = 0;
  std::uint64_t tangent_probes = 0;  // orient evaluations inside tangent search
  std::uint64_t pushes = 0;
  std::uint64_t pops = 0;
  std::uint64_t canonical_nodes_visited = 0;
  std::uint64_t report_touches = 0;  // vertex touches while reporting
  std::uint64_t walk_steps = 0;      // O(1) segment/bridge steps in aggregates
  std::uint64_t tangent_budget_violations = 0;  // calls over their probe ceiling

  QueryStats& operator+=(const QueryStats& o) {
    orient_calls += o.orient_calls;
    tangent_calls += o.tangent_calls;
    tangent_probes += o.tangent_probes;
    pushes += o.pushes;
    pops += o.pops;
    canonical_nodes_visited += o.canonical_nodes_visited;
    report_touches += o.report_touches;
    walk_steps += o.walk_steps;
    tangent_budget_violations += o.tangent_budget_violations;
    return *this;
  }
};

}  // namespace rangehull
