#include "doctest.h"

#include <random>

#include "cyclotomo/geometry.hpp"

using namespace cyclotomo;

namespace {

// x + y*i at conductor 4
Point gp(long xn, long yn, long d = 1) {
    return Point(CycNum::rational(Rational(xn, d), 4) +
                 CycNum::zeta(4) * CycNum::rational(Rational(yn, d), 4));
}

const FieldTag tag4 = FieldTag::for_symmetry(4);

// all-triples/segments extremality oracle: p is extreme iff it lies in no
// triangle or segment spanned by the other points
bool oracle_extreme(const std::vector<Point>& pts, std::size_t idx) {
    const Point& p = pts[idx];
    std::vector<Point> rest;
    for (std::size_t i = 0; i < pts.size(); ++i)
        if (i != idx) rest.push_back(pts[i]);
    for (std::size_t a = 0; a < rest.size(); ++a)
        for (std::size_t b = a + 1; b < rest.size(); ++b) {
            if (hull_contains({rest[a], rest[b]}, p)) return false;
            for (std::size_t c = b + 1; c < rest.size(); ++c)
                if (hull_contains(convex_hull({rest[a], rest[b], rest[c]}), p)) return false;
        }
    return true;
}

} // namespace

TEST_CASE("slopes of directions") {
    CHECK(slope_of(Direction(CycNum(1) + CycNum::zeta(4))) == Slope(CycNum(1)));
    CHECK(slope_of(Direction(CycNum::zeta(4))).is_infinite());
    // zeta_12 points 30 degrees up: slope tan(30) = sqrt(3)/3
    const CycNum sqrt3 = CycNum::zeta(12) + CycNum::zeta(12, 11);
    CHECK(slope_of(Direction(CycNum::zeta(12))) == Slope(sqrt3 / CycNum(3)));
    CHECK_THROWS_AS(Direction(CycNum(0)), std::invalid_argument);
}

TEST_CASE("slope is invariant under rational scaling") {
    std::mt19937 rng(51);
    std::uniform_int_distribution<int> coef(-5, 5), den(1, 5);
    for (int iter = 0; iter < 40; ++iter) {
        std::vector<Rational> c(totient(12));
        for (auto& x : c) x = Rational(coef(rng), den(rng));
        CycNum w(12, c);
        if (w.is_zero()) continue;
        const int num = coef(rng);
        const Rational lambda(num == 0 ? 1 : num, den(rng));
        CHECK(slope_of(Direction(w)) == slope_of(Direction(w * CycNum(lambda))));
    }
}

TEST_CASE("line keys identify parallel lines") {
    const Direction horiz(CycNum(1));
    CHECK(line_key(gp(0, 0), horiz).is_zero());
    CHECK(line_key(gp(1, 1), horiz) == CycNum(1).lifted(4));

    std::mt19937 rng(52);
    std::uniform_int_distribution<long> v(-6, 6);
    for (int iter = 0; iter < 30; ++iter) {
        const Point p = gp(v(rng), v(rng));
        const CycNum w = CycNum::rational(Rational(v(rng)), 4) +
                         CycNum::zeta(4) * CycNum::rational(Rational(v(rng)), 4);
        if (w.is_zero()) continue;
        const Direction d(w);
        // p and p + w lie on the same line
        CHECK(line_key(p, d) == line_key(Point(p.z() + w), d));
        // translating shifts every key by the same offset
        const Point t = gp(v(rng), v(rng));
        const Point q = gp(v(rng), v(rng));
        CHECK(line_key(Point(p.z() + t.z()), d) - line_key(p, d) ==
              line_key(Point(q.z() + t.z()), d) - line_key(q, d));
    }
}

TEST_CASE("convex hull basics") {
    const auto tri = convex_hull({gp(0, 0), gp(3, 0), gp(0, 3)});
    CHECK(tri.size() == 3);

    const auto sq = convex_hull({gp(0, 0), gp(1, 0), gp(1, 1), gp(0, 1), gp(1, 1, 2)});
    CHECK(sq.size() == 4); // the center is swallowed

    const auto degenerate = convex_hull({gp(0, 0), gp(1, 0), gp(2, 0), gp(3, 0), gp(4, 0)});
    CHECK(degenerate.size() == 2);

    CHECK(convex_hull({}).empty());
    CHECK(convex_hull({gp(2, 2), gp(2, 2)}).size() == 1);

    // counterclockwise orientation
    for (std::size_t i = 0; i + 2 < sq.size(); ++i)
        CHECK(orientation(sq[i], sq[i + 1], sq[i + 2]) > 0);
}

TEST_CASE("hull is idempotent and matches the extremality oracle") {
    std::mt19937 rng(53);
    std::uniform_int_distribution<long> v(-4, 4), d(1, 3);
    for (int iter = 0; iter < 25; ++iter) {
        std::vector<Point> pts;
        const int n = 3 + int(rng() % 10);
        for (int i = 0; i < n; ++i) pts.push_back(gp(v(rng), v(rng), d(rng)));
        pts = make_point_set(tag4, pts).points;
        const auto hull = convex_hull(pts);

        const auto again = convex_hull(hull);
        REQUIRE(again.size() == hull.size());
        for (std::size_t i = 0; i < hull.size(); ++i) CHECK(again[i] == hull[i]);

        std::vector<std::string> hull_keys;
        for (const auto& h : hull) hull_keys.push_back(h.key());
        if (pts.size() < 3) continue;
        for (std::size_t i = 0; i < pts.size(); ++i) {
            const bool in_hull = std::find(hull_keys.begin(), hull_keys.end(), pts[i].key()) !=
                                 hull_keys.end();
            CHECK(in_hull == oracle_extreme(pts, i));
        }
    }
}

TEST_CASE("convex subset test") {
    const auto line = make_point_set(tag4, {gp(0, 0), gp(1, 0), gp(2, 0)});
    CHECK_FALSE(is_convex_subset(make_point_set(tag4, {gp(0, 0), gp(2, 0)}), line));
    CHECK(is_convex_subset(make_point_set(tag4, {gp(0, 0), gp(1, 0)}), line));

    std::vector<Point> grid;
    for (long x = 0; x < 3; ++x)
        for (long y = 0; y < 3; ++y) grid.push_back(gp(x, y));
    const auto patch = make_point_set(tag4, grid);
    CHECK_FALSE(is_convex_subset(make_point_set(tag4, {gp(0, 0), gp(2, 0), gp(1, 1)}), patch));
    CHECK(is_convex_subset(make_point_set(tag4, {gp(0, 0), gp(1, 0), gp(2, 0), gp(1, 1)}), patch));
    CHECK(is_convex_subset(make_point_set(tag4, {}), patch));
    CHECK(is_convex_subset(patch, patch));
    CHECK(is_convex_subset(make_point_set(tag4, {gp(1, 1)}), patch));

    CHECK_THROWS_AS(is_convex_subset(make_point_set(tag4, {gp(7, 7)}), patch),
                    std::invalid_argument);

    // restriction to a sub-patch preserves convexity
    const auto s = make_point_set(tag4, {gp(0, 0), gp(1, 0), gp(0, 1), gp(1, 1)});
    CHECK(is_convex_subset(s, patch));
    std::vector<Point> sub;
    for (long x = 0; x < 2; ++x)
        for (long y = 0; y < 3; ++y) sub.push_back(gp(x, y));
    CHECK(is_convex_subset(s, make_point_set(tag4, sub)));
}
