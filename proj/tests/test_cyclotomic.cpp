#include "doctest.h"

#include <cmath>
#include <complex>
#include <random>

#include "cyclotomo/cyclotomic.hpp"

using namespace cyclotomo;

namespace {

Rational rq(std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-9, 9), den(1, 9);
    return Rational(num(rng), den(rng));
}

CycNum random_cyc(std::mt19937& rng, unsigned long m) {
    std::vector<Rational> c(totient(m));
    for (auto& x : c) x = rq(rng);
    return CycNum(m, std::move(c));
}

// Independent numeric embedding used as an oracle against the exact code.
std::complex<double> embed(const CycNum& a) {
    const std::complex<double> z = std::polar(1.0, 2.0 * M_PI / double(a.conductor()));
    std::complex<double> acc{0.0, 0.0};
    for (std::size_t k = a.coeffs().size(); k-- > 0;)
        acc = acc * z + std::complex<double>(a.coeffs()[k].get_d(), 0.0);
    return acc;
}

} // namespace

TEST_CASE("cyclotomic polynomials for small conductors") {
    CHECK(cyclotomic_polynomial(1) == std::vector<Integer>{-1, 1});
    CHECK(cyclotomic_polynomial(4) == std::vector<Integer>{1, 0, 1});
    CHECK(cyclotomic_polynomial(12) == std::vector<Integer>{1, 0, -1, 0, 1});
    CHECK(cyclotomic_polynomial(24) == std::vector<Integer>{1, 0, 0, 0, -1, 0, 0, 0, 1});
    CHECK(cyclotomic_polynomial(7) == std::vector<Integer>{1, 1, 1, 1, 1, 1, 1});
    for (unsigned long m : {2ul, 3ul, 5ul, 8ul, 9ul, 15ul, 36ul, 60ul, 105ul})
        CHECK(cyclotomic_polynomial(m).size() == totient(m) + 1);
}

TEST_CASE("field arithmetic identities") {
    const CycNum i4 = CycNum::zeta(4);
    CHECK(i4 * i4 == CycNum(-1));

    const CycNum z3 = CycNum::zeta(3);
    const CycNum z3sq = CycNum::zeta(3, 2);
    CHECK((CycNum(1) - z3) * (CycNum(1) - z3sq) == CycNum(3));
    CHECK((CycNum(1) - z3).inverse() == (CycNum(1) - z3sq) / CycNum(3));

    CHECK_THROWS_AS(CycNum(0).inverse(), std::domain_error);
}

TEST_CASE("mixed conductors lift to the lcm") {
    const CycNum a = CycNum::zeta(4);   // i
    const CycNum b = CycNum::zeta(3);
    const CycNum s = a + b;
    CHECK(s.conductor() == 12);
    CHECK(s - b == a.lifted(12));
    // i at conductor 12 is zeta_12^3
    CHECK(a.lifted(12) == CycNum::zeta(12, 3));
}

TEST_CASE("galois action") {
    CHECK(CycNum::zeta(8).galois(-1) == CycNum::zeta(8, 7));
    CHECK(CycNum::zeta(12).galois(5) == CycNum::zeta(12, 5));
    const CycNum r = CycNum::rational(Rational(7, 3), 24);
    for (long j : {1L, 5L, 7L, 11L, 13L, 17L, 19L, 23L}) CHECK(r.galois(j) == r);
    CHECK_THROWS_AS(CycNum::zeta(12).galois(4), std::invalid_argument);
}

TEST_CASE("galois composition law on random elements") {
    std::mt19937 rng(20240811);
    const unsigned long m = 24;
    const long units[] = {1, 5, 7, 11, 13, 17, 19, 23};
    for (int iter = 0; iter < 50; ++iter) {
        const CycNum a = random_cyc(rng, m);
        const long j = units[rng() % 8], k = units[rng() % 8];
        CHECK(a.galois(j).galois(k) == a.galois((j * k) % long(m)));
    }
}

TEST_CASE("reality and subfield membership") {
    const CycNum sqrt2 = CycNum::zeta(8) + CycNum::zeta(8, 7);
    CHECK(sqrt2.is_real());
    CHECK(CycNum(2).is_real());
    CHECK(CycNum::rational(Rational(5, 3), 12).in_subfield(12));
    CHECK(CycNum::rational(Rational(5, 3), 12).in_subfield(1));

    // Galois-orbit oracle: sqrt(2) seen inside Q(zeta_24) moves under some
    // automorphism fixing Q(zeta_12), so it is not in Q(zeta_12).
    const CycNum s24 = sqrt2.lifted(24);
    bool moved = false;
    for (unsigned long j = 13; j < 24; j += 12) {
        if (std::gcd(j, 24ul) != 1) continue;
        const CycNum img = s24.galois(long(j));
        if (std::abs(embed(img).real() - embed(s24).real()) > 1e-9) moved = true;
    }
    CHECK(moved);
    CHECK_FALSE(s24.in_subfield(12));
    CHECK(s24.in_subfield(24));
    CHECK(s24.lifted(48).in_subfield(8));

    CHECK_THROWS_AS(sqrt2.in_subfield(3), std::invalid_argument);
}

TEST_CASE("is_real matches conjugation fixedness on random elements") {
    std::mt19937 rng(7);
    for (unsigned long m : {5ul, 8ul, 12ul, 24ul}) {
        for (int iter = 0; iter < 20; ++iter) {
            const CycNum a = random_cyc(rng, m);
            CHECK(a.is_real() == (a == a.conj()));
            CHECK((a + a.conj()).is_real());
            CHECK((a * a.conj()).is_real());
        }
    }
}

TEST_CASE("real_compare") {
    const CycNum sqrt3 = CycNum::zeta(12) + CycNum::zeta(12, 11);
    CHECK(real_compare(sqrt3, CycNum(1)) > 0);
    CHECK(real_compare(sqrt3, sqrt3) == 0);
    // (1+sqrt3)/2 = 1.3660... < sqrt3 = 1.7320...
    const CycNum half_sum = (CycNum(1) + sqrt3) / CycNum(2);
    CHECK(std::abs(half_sum.approx_real() - 1.3660254037844386) < 1e-12);
    CHECK(real_compare(half_sum, sqrt3) < 0);
    CHECK_THROWS_AS(real_compare(CycNum::zeta(8), CycNum(1)), std::domain_error);
}

TEST_CASE("real_compare is a total order consistent with floating evaluation") {
    std::mt19937 rng(99);
    const unsigned long m = 24;
    std::vector<CycNum> reals;
    for (int iter = 0; iter < 12; ++iter) {
        const CycNum a = random_cyc(rng, m);
        reals.push_back(a + a.conj());
    }
    for (const auto& a : reals)
        for (const auto& b : reals) {
            const int ab = real_compare(a, b), ba = real_compare(b, a);
            CHECK(ab == -ba);
            const double fa = a.approx_real(), fb = b.approx_real();
            if (std::abs(fa - fb) > 1e-9) CHECK(ab == (fa < fb ? -1 : 1));
            for (const auto& c : reals)
                if (ab < 0 && real_compare(b, c) < 0) CHECK(real_compare(a, c) < 0);
        }
}

TEST_CASE("field axioms on random elements") {
    std::mt19937 rng(123);
    for (unsigned long m : {8ul, 12ul, 24ul}) {
        for (int iter = 0; iter < 25; ++iter) {
            const CycNum a = random_cyc(rng, m);
            const CycNum b = random_cyc(rng, m);
            const CycNum c = random_cyc(rng, m);
            CHECK(a * (b + c) == a * b + a * c);
            if (!a.is_zero()) CHECK(a * a.inverse() == CycNum(1));
        }
    }
}

TEST_CASE("lift and descend round-trip") {
    std::mt19937 rng(5);
    for (unsigned long m : {4ul, 8ul, 12ul}) {
        for (unsigned long k : {2ul, 3ul, 6ul}) {
            for (int iter = 0; iter < 10; ++iter) {
                const CycNum a = random_cyc(rng, m);
                CHECK(a.lifted(k * m).descended(m) == a);
            }
        }
    }
    // descending a value outside the subfield must fail
    CHECK_THROWS_AS(CycNum::zeta(24).descended(12), std::domain_error);
}

TEST_CASE("embedding oracle agrees with exact arithmetic") {
    std::mt19937 rng(31337);
    for (int iter = 0; iter < 30; ++iter) {
        const CycNum a = random_cyc(rng, 12);
        const CycNum b = random_cyc(rng, 12);
        const auto pa = embed(a), pb = embed(b), pc = embed(a * b);
        CHECK(std::abs(pa * pb - pc) < 1e-6);
        double re, im;
        a.approx_complex(re, im);
        CHECK(std::abs(pa - std::complex<double>(re, im)) < 1e-9);
    }
}
