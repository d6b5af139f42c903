// Sign determination and floating approximation of cyclotomic values via
// rigorous interval evaluation of the standard embedding zeta_m -> e^{2pi i/m}.
#include "cyclotomo/cyclotomic.hpp"

#include <mpfr.h>

#include <stdexcept>

namespace cyclotomo {

namespace {

// Closed interval with directed rounding; not copyable, plain RAII.
struct Ival {
    mpfr_t lo, hi;
    explicit Ival(mpfr_prec_t p) {
        mpfr_init2(lo, p);
        mpfr_init2(hi, p);
        mpfr_set_si(lo, 0, MPFR_RNDD);
        mpfr_set_si(hi, 0, MPFR_RNDU);
    }
    Ival(const Ival&) = delete;
    Ival& operator=(const Ival&) = delete;
    ~Ival() {
        mpfr_clear(lo);
        mpfr_clear(hi);
    }
    void set_si(long v) {
        mpfr_set_si(lo, v, MPFR_RNDD);
        mpfr_set_si(hi, v, MPFR_RNDU);
    }
    void set_q(const Rational& v) {
        mpfr_set_q(lo, v.get_mpq_t(), MPFR_RNDD);
        mpfr_set_q(hi, v.get_mpq_t(), MPFR_RNDU);
    }
};

void iadd(Ival& out, const Ival& a, const Ival& b) {
    mpfr_add(out.lo, a.lo, b.lo, MPFR_RNDD);
    mpfr_add(out.hi, a.hi, b.hi, MPFR_RNDU);
}

void isub(Ival& out, const Ival& a, const Ival& b) {
    mpfr_sub(out.lo, a.lo, b.hi, MPFR_RNDD);
    mpfr_sub(out.hi, a.hi, b.lo, MPFR_RNDU);
}

// out must not alias a or b
void imul(Ival& out, const Ival& a, const Ival& b, mpfr_prec_t p) {
    mpfr_t t;
    mpfr_init2(t, p);
    mpfr_mul(out.lo, a.lo, b.lo, MPFR_RNDD);
    mpfr_mul(t, a.lo, b.hi, MPFR_RNDD);
    mpfr_min(out.lo, out.lo, t, MPFR_RNDD);
    mpfr_mul(t, a.hi, b.lo, MPFR_RNDD);
    mpfr_min(out.lo, out.lo, t, MPFR_RNDD);
    mpfr_mul(t, a.hi, b.hi, MPFR_RNDD);
    mpfr_min(out.lo, out.lo, t, MPFR_RNDD);
    mpfr_mul(out.hi, a.lo, b.lo, MPFR_RNDU);
    mpfr_mul(t, a.lo, b.hi, MPFR_RNDU);
    mpfr_max(out.hi, out.hi, t, MPFR_RNDU);
    mpfr_mul(t, a.hi, b.lo, MPFR_RNDU);
    mpfr_max(out.hi, out.hi, t, MPFR_RNDU);
    mpfr_mul(t, a.hi, b.hi, MPFR_RNDU);
    mpfr_max(out.hi, out.hi, t, MPFR_RNDU);
    mpfr_clear(t);
}

struct CIval {
    Ival re, im;
    explicit CIval(mpfr_prec_t p) : re(p), im(p) {}
};

// Enclosure of e^{2 pi i / m}.
void zeta_enclosure(unsigned long m, mpfr_prec_t p, CIval& z) {
    if (m == 1) {
        z.re.set_si(1);
        z.im.set_si(0);
        return;
    }
    if (m == 2) {
        z.re.set_si(-1);
        z.im.set_si(0);
        return;
    }
    if (m == 4) {
        z.re.set_si(0);
        z.im.set_si(1);
        return;
    }
    Ival theta(p);
    mpfr_const_pi(theta.lo, MPFR_RNDD);
    mpfr_const_pi(theta.hi, MPFR_RNDU);
    mpfr_mul_si(theta.lo, theta.lo, 2, MPFR_RNDD);
    mpfr_mul_si(theta.hi, theta.hi, 2, MPFR_RNDU);
    mpfr_div_ui(theta.lo, theta.lo, m, MPFR_RNDD);
    mpfr_div_ui(theta.hi, theta.hi, m, MPFR_RNDU);
    // theta in (0, 2pi/3], so cos is decreasing over the whole enclosure
    mpfr_cos(z.re.lo, theta.hi, MPFR_RNDD);
    mpfr_cos(z.re.hi, theta.lo, MPFR_RNDU);
    // sin peaks at pi/2; decide monotonicity against a pi/2 enclosure
    mpfr_t half_pi_lo, half_pi_hi;
    mpfr_init2(half_pi_lo, p);
    mpfr_init2(half_pi_hi, p);
    mpfr_const_pi(half_pi_lo, MPFR_RNDD);
    mpfr_const_pi(half_pi_hi, MPFR_RNDU);
    mpfr_div_ui(half_pi_lo, half_pi_lo, 2, MPFR_RNDD);
    mpfr_div_ui(half_pi_hi, half_pi_hi, 2, MPFR_RNDU);
    if (mpfr_cmp(theta.hi, half_pi_lo) <= 0) {
        mpfr_sin(z.im.lo, theta.lo, MPFR_RNDD);
        mpfr_sin(z.im.hi, theta.hi, MPFR_RNDU);
    } else if (mpfr_cmp(theta.lo, half_pi_hi) >= 0) {
        mpfr_sin(z.im.lo, theta.hi, MPFR_RNDD);
        mpfr_sin(z.im.hi, theta.lo, MPFR_RNDU);
    } else {
        mpfr_t s2;
        mpfr_init2(s2, p);
        mpfr_sin(z.im.lo, theta.lo, MPFR_RNDD);
        mpfr_sin(s2, theta.hi, MPFR_RNDD);
        mpfr_min(z.im.lo, z.im.lo, s2, MPFR_RNDD);
        mpfr_set_si(z.im.hi, 1, MPFR_RNDU);
        mpfr_clear(s2);
    }
    mpfr_clear(half_pi_lo);
    mpfr_clear(half_pi_hi);
}

// Horner evaluation of the coefficient vector at the zeta enclosure.
void evaluate(const std::vector<Rational>& coeffs, unsigned long m, mpfr_prec_t p, CIval& w) {
    CIval z(p);
    zeta_enclosure(m, p, z);
    w.re.set_si(0);
    w.im.set_si(0);
    Ival t1(p), t2(p), nre(p), nim(p), cq(p);
    for (std::size_t k = coeffs.size(); k-- > 0;) {
        imul(t1, w.re, z.re, p);
        imul(t2, w.im, z.im, p);
        isub(nre, t1, t2);
        imul(t1, w.re, z.im, p);
        imul(t2, w.im, z.re, p);
        iadd(nim, t1, t2);
        cq.set_q(coeffs[k]);
        iadd(w.re, nre, cq);
        mpfr_set(w.im.lo, nim.lo, MPFR_RNDD);
        mpfr_set(w.im.hi, nim.hi, MPFR_RNDU);
    }
}

} // namespace

int CycNum::sign() const {
    if (is_rational()) return sgn(coeffs()[0]);
    if (!is_real()) throw std::domain_error("CycNum::sign: value is not real");
    if (is_zero()) return 0;
    for (mpfr_prec_t p = 64; p <= (mpfr_prec_t(1) << 22); p *= 2) {
        CIval w(p);
        evaluate(coeffs(), conductor(), p, w);
        if (mpfr_sgn(w.re.lo) > 0) return 1;
        if (mpfr_sgn(w.re.hi) < 0) return -1;
    }
    throw std::runtime_error("CycNum::sign: interval refinement failed to separate");
}

double CycNum::approx_real() const {
    double re, im;
    approx_complex(re, im);
    return re;
}

void CycNum::approx_complex(double& re, double& im) const {
    const mpfr_prec_t p = 128;
    CIval w(p);
    evaluate(coeffs(), conductor(), p, w);
    mpfr_t mid;
    mpfr_init2(mid, p);
    mpfr_add(mid, w.re.lo, w.re.hi, MPFR_RNDN);
    mpfr_div_ui(mid, mid, 2, MPFR_RNDN);
    re = mpfr_get_d(mid, MPFR_RNDN);
    mpfr_add(mid, w.im.lo, w.im.hi, MPFR_RNDN);
    mpfr_div_ui(mid, mid, 2, MPFR_RNDN);
    im = mpfr_get_d(mid, MPFR_RNDN);
    mpfr_clear(mid);
}

} // namespace cyclotomo
