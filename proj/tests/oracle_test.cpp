#include <doctest.h>

#include <cmath>
#include "rangehull/oracle.hpp"

using namespace rangehull;
using oracle::oracle_filter;
using oracle::oracle_hull;
using oracle::oracle_measures;

TEST_CASE("oracle_filter inclusive bounds") {
  std::vector<Point> pts{{0, 0}, {5, 5}, {5, 6}, {10, 10}};
  SUBCASE("degenerate rect hits exactly") {
    auto got = oracle_filter(pts, {5, 5, 5, 5});
    CHECK(got == std::vector<Point>{{5, 5}});
  }
  SUBCASE("covering rect returns everything in order") {
    auto got = oracle_filter(pts, {0, 10, 0, 10});
    CHECK(got == pts);
  }
  SUBCASE("empty") { CHECK(oracle_filter(pts, {11, 20, 0, 10}).empty()); }
}

TEST_CASE("oracle_hull conventions") {
  SUBCASE("square corners plus center") {
    std::vector<Point> pts{{0, 0}, {2, 0}, {1, 1}, {2, 2}, {0, 2}};
    auto h = oracle_hull(pts);
    CHECK(h == std::vector<Point>{{2, 2}, {0, 2}, {0, 0}, {2, 0}});
  }
  SUBCASE("all collinear") {
    std::vector<Point> pts{{0, 0}, {2, 2}, {4, 4}, {1, 1}};
    CHECK(oracle_hull(pts) == std::vector<Point>{{4, 4}, {0, 0}});
  }
  SUBCASE("empty in, empty out") {
    CHECK(oracle_hull(std::vector<Point>{}).empty());
  }
}

TEST_CASE("oracle_measures values") {
  SUBCASE("unit square") {
    std::vector<Point> h{{1, 1}, {0, 1}, {0, 0}, {1, 0}};
    auto m = oracle_measures(h);
    CHECK(m.count == 4);
    CHECK(m.area2 == 2);
    CHECK(m.perimeter == doctest::Approx(4.0));
  }
  SUBCASE("segment closed tour") {
    std::vector<Point> h{{3, 4}, {0, 0}};
    auto m = oracle_measures(h);
    CHECK(m.count == 2);
    CHECK(m.area2 == 0);
    CHECK(m.perimeter == doctest::Approx(10.0));
  }
  SUBCASE("diamond") {
    auto h = oracle_hull(std::vector<Point>{{2, 0}, {4, 2}, {2, 4}, {0, 2}});
    auto m = oracle_measures(h);
    CHECK(m.count == 4);
    CHECK(m.area2 == 16);
    CHECK(m.perimeter == doctest::Approx(4.0 * std::sqrt(8.0)));
  }
  SUBCASE("single point") {
    auto m = oracle_measures(std::vector<Point>{{5, 5}});
    CHECK(m.count == 1);
    CHECK(m.area2 == 0);
    CHECK(m.perimeter == 0.0);
  }
}
