#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "rangehull/geom.hpp"
#include "rangehull/rangetree.hpp"

namespace rangehull::cli {

// Exit codes shared by every subcommand.
inline constexpr int kOk = 0;
inline constexpr int kVerifyFailed = 1;
inline constexpr int kParseError = 2;
inline constexpr int kConstraintViolation = 3;

struct ParseResult {
  int code = kOk;
  std::string message;  // includes the offending line number
};

/// Points file: one "x y" pair of decimal integers per line; '#' comment
/// lines and blank lines ignored.
ParseResult parse_points_file(const std::string& path,
                              std::vector<Point>& out);

/// Queries file: one "x_lo x_hi y_lo y_hi" line per query, same comment
/// rules.
ParseResult parse_queries_file(const std::string& path,
                               std::vector<QueryRect>& out);

struct GenConfig {
  std::uint64_t n = 1;
  std::uint64_t seed = 0;
  std::string dist = "uniform";
  std::int64_t range = 1000000;
  std::string out_path;  // empty = stdout
};
int cmd_gen(const GenConfig& cfg, std::ostream& out, std::ostream& err);

struct QueryConfig {
  std::string points_path;
  std::string queries_path;
  std::string mode = "all";  // report | count | area | perimeter | all
  bool stats = false;
  bool json = true;  // output is JSON lines; flag kept for interface parity
  int threads = 1;
};
int cmd_query(const QueryConfig& cfg, std::ostream& out, std::ostream& err);

struct VerifyConfig {
  std::uint64_t n_max = 512;
  std::uint64_t instances = 500;
  std::uint64_t queries_per = 50;
  std::uint64_t seed = 1;
  std::string inject_mutation = "none";  // none | pop-strict | skip-lone-tangent
};
int cmd_verify(const VerifyConfig& cfg, std::ostream& out, std::ostream& err);

struct BenchConfig {
  std::string points_path;
  std::uint64_t queries = 1000;
  std::uint64_t warmup = 1;
  std::uint64_t iters = 3;
  std::uint64_t seed = 7;
};
int cmd_bench(const BenchConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace rangehull::cli
