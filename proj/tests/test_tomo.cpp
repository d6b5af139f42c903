#include "doctest.h"

#include <random>

#include "cyclotomo/crossratio.hpp"
#include "cyclotomo/tomo.hpp"

using namespace cyclotomo;

namespace {

Point gp(long x, long y) {
    return Point(CycNum::rational(Rational(x), 4) + CycNum::zeta(4) * CycNum::rational(Rational(y), 4));
}

Direction dir(long x, long y) {
    return Direction(CycNum::rational(Rational(x), 4) + CycNum::zeta(4) * CycNum::rational(Rational(y), 4));
}

const FieldTag tag4 = FieldTag::for_symmetry(4);

PointSet grid(long w, long h) {
    std::vector<Point> pts;
    for (long x = 0; x < w; ++x)
        for (long y = 0; y < h; ++y) pts.push_back(gp(x, y));
    return make_point_set(tag4, pts);
}

} // namespace

TEST_CASE("xray tables") {
    const auto f = make_point_set(tag4, {gp(0, 0), gp(1, 0), gp(1, 1)});
    const auto horiz = xray(f, dir(1, 0));
    REQUIRE(horiz.rows.size() == 2);
    CHECK(horiz.rows[0].second == 2); // line y = 0 carries two points
    CHECK(horiz.rows[1].second == 1);
    CHECK(horiz.total() == 3);

    const auto vert = xray(f, dir(0, 1));
    REQUIRE(vert.rows.size() == 2);
    CHECK(vert.rows[0].second + vert.rows[1].second == 3);

    std::mt19937 rng(61);
    std::uniform_int_distribution<long> v(-5, 5);
    for (int iter = 0; iter < 20; ++iter) {
        std::vector<Point> pts;
        for (int i = 0; i < 8; ++i) pts.push_back(gp(v(rng), v(rng)));
        const auto s = make_point_set(tag4, pts);
        long dx = v(rng), dy = v(rng);
        if (dx == 0 && dy == 0) dx = 1;
        CHECK(xray(s, dir(dx, dy)).total() == s.size());
    }
}

TEST_CASE("xray equality") {
    const auto f = make_point_set(tag4, {gp(0, 0)});
    const auto g = make_point_set(tag4, {gp(1, 0)});
    CHECK(xrays_equal(f, f, {dir(1, 0), dir(0, 1), dir(1, 1)}));
    CHECK(xrays_equal(f, g, {dir(1, 0)}));                    // same horizontal line
    CHECK_FALSE(xrays_equal(f, g, {dir(1, 0), dir(0, 1)}));  // vertical separates
}

TEST_CASE("xray translation equivariance") {
    std::mt19937 rng(62);
    std::uniform_int_distribution<long> v(-4, 4);
    for (int iter = 0; iter < 20; ++iter) {
        std::vector<Point> fp, gq;
        for (int i = 0; i < 6; ++i) fp.push_back(gp(v(rng), v(rng)));
        for (int i = 0; i < 6; ++i) gq.push_back(gp(v(rng), v(rng)));
        const auto f = make_point_set(tag4, fp);
        const auto g = make_point_set(tag4, gq);
        const Point t = gp(v(rng), v(rng));
        std::vector<Point> ft, gt;
        for (const auto& p : f.points) ft.push_back(p + t);
        for (const auto& p : g.points) gt.push_back(p + t);
        const std::vector<Direction> dirs = {dir(1, 0), dir(1, 1), dir(1, 2)};
        CHECK(xrays_equal(f, g, dirs) ==
              xrays_equal(make_point_set(tag4, ft), make_point_set(tag4, gt), dirs));
    }
}

TEST_CASE("u-polygon verification") {
    const std::vector<Point> square = {gp(0, 0), gp(1, 0), gp(1, 1), gp(0, 1)};
    CHECK(verify_u_polygon(square, {dir(1, 0), dir(0, 1)}));

    // with both diagonals added the square fails: the diagonal line through
    // (1,0) meets no second vertex
    CHECK_FALSE(verify_u_polygon(square, {dir(1, 0), dir(0, 1), dir(1, 1), dir(1, -1)}));

    const std::vector<Point> tri = {gp(0, 0), gp(2, 0), gp(1, 2)};
    CHECK_FALSE(verify_u_polygon(tri, {dir(1, 0)}));

    CHECK_THROWS_AS(verify_u_polygon({gp(0, 0), gp(1, 0), gp(2, 0)}, {dir(1, 0)}),
                    std::invalid_argument);
    // non-extreme vertex: not a convex polygon
    CHECK_THROWS_AS(verify_u_polygon({gp(0, 0), gp(2, 0), gp(2, 2), gp(1, 1)}, {dir(1, 0)}),
                    std::invalid_argument);
}

TEST_CASE("uniqueness oracle finds collisions on an underdetermined patch") {
    const auto patch = grid(2, 2);
    const auto report = uniqueness_oracle(patch, {dir(1, 0)}, 4, 10.0);
    CHECK(report.found);
    REQUIRE(report.first.size() == report.second.size()); // equal X-rays force equal size
    CHECK(report.first.points != report.second.points);
    // replay: both sets are convex subsets with equal X-rays
    CHECK(is_convex_subset(report.first, patch));
    CHECK(is_convex_subset(report.second, patch));
    CHECK(xrays_equal(report.first, report.second, report.directions));
}

TEST_CASE("uniqueness oracle exhausts a determined patch") {
    // slopes {0, 2, inf, -1/2}: the angle-ordered cross ratio is 5, outside
    // the forbidden set of fourfold symmetry, so convex subsets of the grid
    // are determined by these four X-rays
    const auto set = forbidden_cross_ratios(tag4);
    const CycNum cr = cross_ratio(Slope(CycNum(0)), Slope(CycNum(2)), Slope::infinity(),
                                  Slope(CycNum(Rational(-1, 2))));
    CHECK(cr == CycNum(5));
    CHECK_FALSE(set.contains(cr));

    // (the example slopes {0,1,2,inf} do not qualify: their cross ratio is 2,
    // which is forbidden)
    CHECK(set.contains(cross_ratio(Slope(CycNum(0)), Slope(CycNum(1)), Slope(CycNum(2)),
                                   Slope::infinity())));

    const auto patch = grid(3, 3);
    const std::vector<Direction> dirs = {dir(1, 0), dir(1, 2), dir(0, 1), dir(2, -1)};
    const auto report = uniqueness_oracle(patch, dirs, 9, 30.0);
    CHECK(report.exhaustive);
    CHECK_FALSE(report.found);
    CHECK(report.subsets_examined > 9);
}

TEST_CASE("uniqueness oracle guards") {
    std::vector<Point> big;
    for (long x = 0; x < 7; ++x)
        for (long y = 0; y < 6; ++y) big.push_back(gp(x, y));
    CHECK_THROWS_AS(uniqueness_oracle(make_point_set(tag4, big), {dir(1, 0)}, 4, 1.0),
                    std::invalid_argument);
}
