#include "doctest.h"

#include "cyclotomo/construct.hpp"
#include "cyclotomo/demo3d.hpp"

using namespace cyclotomo;

namespace {

Point gp(long x, long y) {
    return Point(CycNum::rational(Rational(x), 4) + CycNum::zeta(4) * CycNum::rational(Rational(y), 4));
}

} // namespace

TEST_CASE("regular construction for the crystallographic cases") {
    for (unsigned long n : {3ul, 4ul}) {
        const auto inst = build_regular_upolygon(FieldTag::for_symmetry(n));
        const unsigned long N = inst.tag.N;
        CHECK(inst.directions.size() == N);
        CHECK(inst.hull.size() == 2 * N);
        CHECK(verify_u_polygon(inst.hull, inst.directions));
        CHECK(inst.coloring.white.size() == inst.coloring.grey.size());

        // pairwise nonparallel directions
        for (std::size_t i = 0; i < inst.directions.size(); ++i)
            for (std::size_t j = i + 1; j < inst.directions.size(); ++j)
                CHECK(slope_of(inst.directions[i]) != slope_of(inst.directions[j]));

        // the original N-gon lies strictly inside the hull
        for (unsigned long k = 0; k < N; ++k) {
            const Point v(CycNum::zeta(N, long(k)));
            CHECK(hull_contains(inst.hull, v));
            for (const auto& h : inst.hull) CHECK(h != v);
        }
    }
}

TEST_CASE("fourfold instance is the known octagon") {
    const auto inst = build_regular_upolygon(FieldTag::for_symmetry(4));
    REQUIRE(inst.hull.size() == 8);
    // vertices (+-2,+-1), (+-1,+-2)
    CHECK(std::find(inst.hull.begin(), inst.hull.end(), gp(2, 1)) != inst.hull.end());
    CHECK(std::find(inst.hull.begin(), inst.hull.end(), gp(-1, -2)) != inst.hull.end());

    // X-ray equality of the coloring, plus stability under adding a common set
    PointSet white, grey;
    white.points = inst.coloring.white;
    grey.points = inst.coloring.grey;
    CHECK(xrays_equal(white, grey, inst.directions));

    auto white_plus = white.points;
    auto grey_plus = grey.points;
    for (long x = -1; x <= 1; ++x)
        for (long y = -1; y <= 1; ++y) {
            white_plus.push_back(gp(x, y));
            grey_plus.push_back(gp(x, y));
        }
    PointSet wp, gp2;
    wp.points = white_plus;
    gp2.points = grey_plus;
    CHECK(xrays_equal(wp, gp2, inst.directions));
}

TEST_CASE("construction verifies for the quasicrystal symmetries") {
    for (unsigned long n : {5ul, 8ul, 12ul}) {
        const auto inst = build_regular_upolygon(FieldTag::for_symmetry(n));
        CHECK(inst.directions.size() == inst.tag.N);
        CHECK(verify_u_polygon(inst.hull, inst.directions));
        PointSet white, grey;
        white.points = inst.coloring.white;
        grey.points = inst.coloring.grey;
        CHECK(xrays_equal(white, grey, inst.directions));
        CHECK(inst.coloring.white.size() == inst.coloring.grey.size());
    }
}

TEST_CASE("coloring of the unit square") {
    const std::vector<Point> square = {gp(0, 0), gp(1, 0), gp(1, 1), gp(0, 1)};
    const std::vector<Direction> dirs = {Direction(CycNum(1)), Direction(CycNum::zeta(4))};
    const auto coloring = color_vertices(square, dirs);
    CHECK(coloring.white.size() == 2);
    CHECK(coloring.grey.size() == 2);
    PointSet w, g;
    w.points = coloring.white;
    g.points = coloring.grey;
    CHECK(xrays_equal(w, g, dirs));

    CHECK_THROWS_AS(color_vertices({gp(0, 0), gp(1, 0), gp(0, 1)}, dirs), std::invalid_argument);
}

TEST_CASE("homothety embedding into the square lattice") {
    PatchSpec ps;
    ps.tag = FieldTag::for_symmetry(4);
    ps.physical_radius = Rational(3);
    const auto patch = generate_patch(ps).to_point_set();

    auto inst = build_regular_upolygon(FieldTag::for_symmetry(4));
    REQUIRE(embed_instance(inst, patch, 50000));
    CHECK(inst.embedded);
    // vertices already sit in the lattice: identity embedding works
    for (const auto& v : inst.hull) CHECK(patch.contains(v));
    // interior: 9 strict interior points plus 4 edge midpoints
    CHECK(inst.interior_lattice.size() == 13);
    CHECK(verify_u_polygon(inst.hull, inst.directions));

    // denominators are cleared by an integer scaling
    std::vector<Point> f = {Point(CycNum(Rational(1, 2)).lifted(4)),
                            Point(CycNum(Rational(3, 2)).lifted(4))};
    PointSet fs;
    fs.tag = FieldTag::for_symmetry(4);
    fs.points = f;
    const auto h = embed_homothety(fs, patch, 50000);
    REQUIRE(h.has_value());
    for (const auto& p : f) CHECK(patch.contains(apply(*h, p)));
    CHECK(h->lambda.is_real());
    CHECK(h->lambda.sign() > 0);
}

TEST_CASE("3d demo") {
    const auto report = demo_3d_upolyhedron(1e-9);
    CHECK(report.vertex_count == 120);
    CHECK(report.success());
    // fivefold and threefold axes leave vertices unpaired; the twofold axes
    // are perpendicular to the mirror planes, and the mirror image of each
    // vertex is its partner along the axis
    CHECK(report.direction_family == "twofold-axes");
    CHECK(report.white_count == 60);
    CHECK(report.grey_count == 60);
    CHECK(report.directions.size() == 6);
}
