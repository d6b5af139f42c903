// Exact arithmetic in cyclotomic fields Q(zeta_m).
//
// Elements are stored in canonical form: a vector of phi(m) rationals over
// the power basis 1, zeta, ..., zeta^{phi(m)-1}, reduced modulo the m-th
// cyclotomic polynomial. Canonical forms are unique, so structural equality
// (at a common conductor) is field equality.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace cyclotomo {

using Integer  = mpz_class;
using Rational = mpq_class;

/// Euler totient.
unsigned long totient(unsigned long m);

/// Coefficients of the m-th cyclotomic polynomial, constant term first,
/// degree phi(m). Computed by recursive exact division of x^m - 1 by the
/// cyclotomic polynomials of the proper divisors of m.
std::vector<Integer> cyclotomic_polynomial(unsigned long m);

/// Rows of the reduction table x^e mod Phi_m for 0 <= e < max(m, 2*phi(m)-1).
/// Shared, immutable per conductor; exposed for the integer fast paths.
const std::vector<std::vector<Integer>>& reduction_table(unsigned long m);

class CycNum {
public:
    CycNum() : m_(1), c_(1, Rational(0)) {}
    explicit CycNum(long v) : m_(1), c_(1, Rational(v)) {}
    explicit CycNum(const Rational& v) : m_(1), c_(1, v) {
        mpq_canonicalize(c_[0].get_mpq_t());
    }
    CycNum(unsigned long m, std::vector<Rational> coeffs);

    /// zeta_m^k
    static CycNum zeta(unsigned long m, long k = 1);
    /// A rational constant carried at conductor m.
    static CycNum rational(const Rational& v, unsigned long m);

    unsigned long conductor() const { return m_; }
    const std::vector<Rational>& coeffs() const { return c_; }
    std::size_t degree() const { return c_.size(); }

    bool is_zero() const;
    bool is_rational() const;
    /// The value as a rational; requires is_rational().
    Rational to_rational() const;

    CycNum operator-() const;
    CycNum operator+(const CycNum& o) const;
    CycNum operator-(const CycNum& o) const;
    CycNum operator*(const CycNum& o) const;
    CycNum operator/(const CycNum& o) const;
    bool operator==(const CycNum& o) const;
    bool operator!=(const CycNum& o) const { return !(*this == o); }

    /// Multiplicative inverse; throws std::domain_error on zero.
    CycNum inverse() const;

    /// Image under zeta_m -> zeta_m^j. Requires gcd(j, m) = 1.
    CycNum galois(long j) const;
    /// Complex conjugate (the j = -1 automorphism).
    CycNum conj() const;

    /// Same value re-expressed at conductor M; requires m | M.
    CycNum lifted(unsigned long M) const;
    /// Same value re-expressed at conductor d; requires d | m and the value
    /// to lie in Q(zeta_d).
    CycNum descended(unsigned long d) const;

    /// Fixed by complex conjugation, i.e. lies on the real line.
    bool is_real() const;
    /// Fixed by every automorphism j = 1 (mod N); requires N | m.
    bool in_subfield(unsigned long N) const;

    /// Exact sign of a real value: -1, 0, +1. Requires is_real().
    /// Zero is decided by canonical form; otherwise the real embedding
    /// (zeta_m -> e^{2 pi i / m}) is enclosed in an interval whose precision
    /// starts at 64 bits and doubles until the sign separates.
    int sign() const;

    /// Real embedding as a double (midpoint of a high-precision enclosure).
    double approx_real() const;
    /// Both coordinates of the standard complex embedding.
    void approx_complex(double& re, double& im) const;

    /// Stable byte key of (conductor, canonical coefficients) for hashing.
    std::string key() const;

private:
    unsigned long m_;
    std::vector<Rational> c_;
};

/// Three-way order of two real values: -1 (less), 0 (equal), +1 (greater).
/// Throws std::domain_error if either argument is not real.
int real_compare(const CycNum& a, const CycNum& b);

inline CycNum operator+(const CycNum& a, long b) { return a + CycNum(b); }
inline CycNum operator-(const CycNum& a, long b) { return a - CycNum(b); }
inline CycNum operator*(const CycNum& a, long b) { return a * CycNum(b); }

} // namespace cyclotomo
