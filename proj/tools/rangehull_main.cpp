#include <iostream>

#include <CLI11.hpp>

#include "rangehull/cli_ops.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Orthogonal range convex-hull queries: report, count, area "
               "and perimeter of the hull of the points inside a rectangle"};
  app.require_subcommand(1);

  rangehull::cli::GenConfig gen;
  auto* cgen = app.add_subcommand("gen", "Generate a deterministic point file");
  cgen->add_option("--n", gen.n, "Number of points")->required();
  cgen->add_option("--seed", gen.seed, "Random seed");
  cgen->add_option("--dist", gen.dist,
                   "uniform | circle | clustered | grid | collinear");
  cgen->add_option("--range", gen.range, "Coordinate range [0, range]");
  cgen->add_option("--out", gen.out_path, "Output file (default stdout)");

  rangehull::cli::QueryConfig qry;
  auto* cqry = app.add_subcommand("query", "Answer queries from a file");
  cqry->add_option("--points", qry.points_path, "Points file")->required();
  cqry->add_option("--queries", qry.queries_path, "Queries file")->required();
  cqry->add_option("--mode", qry.mode,
                   "report | count | area | perimeter | all");
  cqry->add_flag("--stats", qry.stats, "Attach instrumentation counters");
  cqry->add_flag("--json", qry.json, "JSON-lines output (the default)");
  cqry->add_option("--threads", qry.threads, "Worker threads");

  rangehull::cli::VerifyConfig ver;
  auto* cver = app.add_subcommand(
      "verify", "Differential check against the brute-force oracle");
  cver->add_option("--n-max", ver.n_max, "Max points per instance");
  cver->add_option("--instances", ver.instances, "Random instances");
  cver->add_option("--queries-per", ver.queries_per, "Queries per instance");
  cver->add_option("--seed", ver.seed, "Random seed");
  cver->add_option("--inject-mutation", ver.inject_mutation,
                   "none | pop-strict | skip-lone-tangent")
      ->group("");  // test fixture; hidden from --help

  rangehull::cli::BenchConfig ben;
  auto* cben = app.add_subcommand("bench", "Latency and instrumentation report");
  cben->add_option("--points", ben.points_path, "Points file")->required();
  cben->add_option("--queries", ben.queries, "Queries to generate");
  cben->add_option("--warmup", ben.warmup, "Warmup rounds");
  cben->add_option("--iters", ben.iters, "Measured rounds");
  cben->add_option("--seed", ben.seed, "Random seed");

  CLI11_PARSE(app, argc, argv);

  try {
    if (cgen->parsed())
      return rangehull::cli::cmd_gen(gen, std::cout, std::cerr);
    if (cqry->parsed())
      return rangehull::cli::cmd_query(qry, std::cout, std::cerr);
    if (cver->parsed())
      return rangehull::cli::cmd_verify(ver, std::cout, std::cerr);
    if (cben->parsed())
      return rangehull::cli::cmd_bench(ben, std::cout, std::cerr);
  } catch (const rangehull::CoordinateOutOfRange& e) {
    std::cerr << e.what() << "\n";
    return rangehull::cli::kConstraintViolation;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return rangehull::cli::kParseError;
  }
  return 0;
}
