#include "doctest.h"

#include <cmath>
#include <set>

#include "cyclotomo/modelset.hpp"

using namespace cyclotomo;

namespace {

PatchSpec spec_for(unsigned long n, long radius) {
    PatchSpec s;
    s.tag = FieldTag::for_symmetry(n);
    s.physical_radius = Rational(radius);
    s.window = WindowSpec::disc(Rational(1));
    s.star_exponent = default_star_exponent(n);
    return s;
}

} // namespace

TEST_CASE("star map") {
    CHECK(star_map(CycNum::rational(Rational(1), 8), 3) == CycNum(1));
    CHECK(star_map(CycNum::zeta(8), 3) == CycNum::zeta(8, 3));
    for (int iter = 0; iter < 10; ++iter) {
        const CycNum x = CycNum::zeta(5, iter % 4) + CycNum(iter);
        const CycNum y = CycNum::zeta(5, (iter + 2) % 4) - CycNum(2 * iter);
        CHECK(star_map(x + y, 2) == star_map(x, 2) + star_map(y, 2));
        CHECK(star_map(x * y, 2) == star_map(x, 2) * star_map(y, 2));
    }
    CHECK_THROWS_AS(star_map(CycNum::zeta(8), 2), std::invalid_argument);
}

TEST_CASE("window membership") {
    const auto disc = WindowSpec::disc(Rational(1));
    CHECK(window_contains(disc, CycNum(0)));
    // a point with |p| = 1 exactly: the window is closed
    CHECK(window_contains(disc, CycNum(1).lifted(4)));
    CHECK(window_classify(disc, CycNum(1).lifted(4)) == 0);
    CHECK_FALSE(window_contains(disc, CycNum(2).lifted(4)));

    // axis-aligned square with corners at distance 3/2 (rotation = 1/8 turn)
    const auto square = WindowSpec::ngon(4, Rational(3, 2), Rational(1, 8));
    const CycNum p = CycNum::rational(Rational(9, 10), 4) +
                     CycNum::zeta(4) * CycNum::rational(Rational(9, 10), 4);
    CHECK(window_contains(square, p));
    const CycNum q = CycNum::rational(Rational(11, 10), 4) +
                     CycNum::zeta(4) * CycNum::rational(Rational(9, 10), 4);
    CHECK_FALSE(window_contains(square, q));
    // corner of the square itself: boundary
    const CycNum corner = CycNum::rational(Rational(3, 4), 4) * (CycNum(1) + CycNum::zeta(4)).lifted(4) *
                          CycNum(2) / CycNum(2); // (3/4)(1+i) * 2/2 = (3/4, 3/4)... inside
    CHECK(window_contains(square, corner));
}

TEST_CASE("square lattice patches") {
    const auto patch = generate_patch(spec_for(4, 2));
    CHECK(patch.coords.size() == 13); // integer pairs with a^2 + b^2 <= 4

    const auto ps = patch.to_point_set();
    CHECK(ps.size() == 13);
    CHECK(ps.contains(Point(CycNum(0))));

    // determinism
    const auto again = generate_patch(spec_for(4, 2));
    CHECK(again.coords == patch.coords);

    // monotone in the radius
    const auto bigger = generate_patch(spec_for(4, 3));
    std::set<std::vector<long>> big(bigger.coords.begin(), bigger.coords.end());
    for (const auto& c : patch.coords) CHECK(big.count(c) == 1);

    // density sanity at radius 5: count within 15% of pi * 25
    const auto five = generate_patch(spec_for(4, 5));
    const double expect = M_PI * 25.0;
    CHECK(double(five.coords.size()) > 0.85 * expect);
    CHECK(double(five.coords.size()) < 1.15 * expect);
}

TEST_CASE("triangular lattice patch") {
    const auto patch = generate_patch(spec_for(3, 2));
    // Eisenstein integers with |x| <= 2
    CHECK(patch.coords.size() == 19);
    for (const auto& c : patch.coords) CHECK(c.size() == 2);
}

TEST_CASE("aperiodic patches stay inside the window") {
    PatchSpec s = spec_for(8, 3);
    s.window = WindowSpec::disc(Rational(3, 2));
    const auto patch = generate_patch(s);
    CHECK(patch.coords.size() > 10);
    CHECK(patch.to_point_set().contains(Point(CycNum(0))));
    for (const auto& c : patch.coords) {
        std::vector<Rational> coeffs(4);
        for (int k = 0; k < 4; ++k) coeffs[k] = Rational(c[k]);
        const CycNum z(8, coeffs);
        CHECK(window_contains(s.window, star_map(z, 3)));
        // physical radius holds exactly
        CHECK((z * z.conj() - CycNum(9)).sign() <= 0);
    }

    // enlarging the window only adds points
    PatchSpec s2 = s;
    s2.window = WindowSpec::disc(Rational(2));
    const auto bigger = generate_patch(s2);
    std::set<std::vector<long>> big(bigger.coords.begin(), bigger.coords.end());
    for (const auto& c : patch.coords) CHECK(big.count(c) == 1);
}

TEST_CASE("eightfold patch with an octagonal window is rotation invariant") {
    PatchSpec s = spec_for(8, 3);
    s.window = WindowSpec::ngon(8, Rational(3, 2), Rational(0));
    const auto patch = generate_patch(s);
    CHECK(patch.coords.size() > 10);

    const auto ps = patch.to_point_set();
    // multiplying by zeta_8 maps the patch onto itself (window and disc are
    // invariant under the rotated star image)
    for (const auto& p : ps.points) {
        const Point rotated(p.z() * CycNum::zeta(8).lifted(8));
        CHECK(ps.contains(rotated));
    }
}

TEST_CASE("patch generation guards") {
    CHECK_THROWS_AS(generate_patch(spec_for(4, 2000)), std::invalid_argument);
    PatchSpec bad = spec_for(8, 2);
    bad.star_exponent = 2; // gcd(2,8) != 1
    CHECK_THROWS_AS(generate_patch(bad), std::invalid_argument);
    CHECK_THROWS_AS(generate_patch(spec_for(7, 2)), std::invalid_argument); // phi(7) = 6
}
