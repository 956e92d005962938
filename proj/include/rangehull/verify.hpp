#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "rangehull/chains.hpp"
#include "rangehull/geom.hpp"

namespace rangehull {

/// Deterministic splitmix64 generator. The library rolls its own bounded
/// draws so that generated datasets are byte-stable across toolchains.
struct Rng {
  std::uint64_t state;
  explicit Rng(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  /// Uniform in [lo, hi], inclusive.
  std::int64_t range(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(
                    next() % static_cast<std::uint64_t>(hi - lo + 1));
  }
};

/// Deterministic dataset generator shared by gen/verify/bench.
/// dist: uniform | circle | clustered | grid | collinear.
std::vector<Point> generate_points(const std::string& dist, std::uint64_t n,
                                   std::uint64_t seed, std::int64_t range);

struct VerifyParams {
  std::uint64_t n_max = 512;
  std::uint64_t instances = 500;
  std::uint64_t queries_per = 50;
  std::uint64_t seed = 1;
  /// false: coordinates uniform in [0, 10^6] (the acceptance recipe);
  /// true: instances rotate through tie-heavy small ranges as well.
  bool mixed_ranges = false;
  std::uint64_t max_reports = 3;  // mismatch diagnostics to print
};

struct VerifyOutcome {
  std::uint64_t instances = 0;
  std::uint64_t queries = 0;
  std::uint64_t failures = 0;  // queries with any mismatch
  // Per-check mismatch counts (one query can trip several).
  std::uint64_t report_mismatches = 0;
  std::uint64_t count_mismatches = 0;
  std::uint64_t area_mismatches = 0;
  std::uint64_t box_identity_mismatches = 0;
  std::uint64_t perimeter_mismatches = 0;
  bool ok() const { return failures == 0; }
};

/// Runs the oracle-equivalence matrix: a fixed degenerate corpus (empty
/// ranges, singletons, duplicates, collinear lines, tie-heavy grids,
/// clusters) followed by random instances. Every query checks the reported
/// hull sequence, count, exact doubled area, perimeter (1e-9 relative) and
/// the box identity sum(complements) == 2*boxArea - oracle area2.
VerifyOutcome run_verification(const VerifyParams& p, Mutation mut,
                               std::ostream* diag);

}  // namespace rangehull
