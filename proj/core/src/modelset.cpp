#include "cyclotomo/modelset.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <stdexcept>

namespace cyclotomo {

namespace {
Rational canon(Rational q) {
    mpq_canonicalize(q.get_mpq_t());
    return q;
}
} // namespace

WindowSpec WindowSpec::disc(const Rational& r) {
    WindowSpec w;
    w.shape = Shape::Disc;
    w.radius = canon(r);
    return w;
}

WindowSpec WindowSpec::ngon(unsigned sides, const Rational& r, const Rational& rotation_turns) {
    if (sides < 3) throw std::invalid_argument("WindowSpec::ngon: at least three sides");
    WindowSpec w;
    w.shape = Shape::Ngon;
    w.sides = sides;
    w.radius = canon(r);
    w.rotation = canon(rotation_turns);
    return w;
}

unsigned long default_star_exponent(unsigned long n) {
    if (n == 5) return 2;
    if (n == 8) return 3;
    if (n == 12) return 5;
    if (n <= 4) return 1;
    for (unsigned long e = 2; e < n; ++e) {
        if (std::gcd(e, n) != 1) continue;
        if (e == n - 1) continue; // complex conjugation, degenerate internal image
        return e;
    }
    return 1;
}

CycNum star_map(const CycNum& x, unsigned long e) {
    return x.galois(static_cast<long>(e));
}

namespace {

// window vertices as exact cyclotomic numbers, counterclockwise
std::vector<CycNum> ngon_vertices(const WindowSpec& w) {
    const unsigned long q = w.rotation.get_den().get_ui();
    const long p = static_cast<long>(w.rotation.get_num().get_si());
    const unsigned long L = std::lcm(std::lcm<unsigned long>(w.sides, q), 4ul);
    std::vector<CycNum> vs;
    const CycNum r = CycNum::rational(w.radius, L);
    for (unsigned j = 0; j < w.sides; ++j) {
        const long exponent = static_cast<long>(j * (L / w.sides)) + p * static_cast<long>(L / q);
        vs.push_back(r * CycNum::zeta(L, exponent));
    }
    return vs;
}

CycNum shift_of(const WindowSpec& w, unsigned long conductor) {
    const unsigned long L = std::lcm(conductor, 4ul);
    return CycNum::rational(w.shift.first, L) +
           CycNum::zeta(L, static_cast<long>(L / 4)) * CycNum::rational(w.shift.second, L);
}

CycNum imag_unit(unsigned long m) { return CycNum::zeta(m, static_cast<long>(m / 4)); }

// Im(conj(u) v) as a sign
int cross_sign(const CycNum& u, const CycNum& v) {
    const CycNum p = u.conj() * v;
    const unsigned long m = p.conductor();
    return ((p - p.conj()) / (imag_unit(m) * 2)).sign();
}

} // namespace

int window_classify(const WindowSpec& w, const CycNum& p0) {
    const unsigned long m0 = std::lcm(p0.conductor(), 4ul);
    const CycNum p = p0.lifted(m0) - shift_of(w, m0);
    if (w.shape == WindowSpec::Shape::Disc) {
        const CycNum d2 = p * p.conj() - CycNum(w.radius * w.radius);
        return -d2.sign(); // inside when |p|^2 < r^2
    }
    const auto vs = ngon_vertices(w);
    bool boundary = false;
    for (std::size_t j = 0; j < vs.size(); ++j) {
        const CycNum& a = vs[j];
        const CycNum& b = vs[(j + 1) % vs.size()];
        const int s = cross_sign(b - a, p - a);
        if (s < 0) return -1;
        if (s == 0) boundary = true;
    }
    return boundary ? 0 : 1;
}

PointSet Patch::to_point_set() const {
    const unsigned long n = spec.tag.n;
    std::vector<Point> pts;
    pts.reserve(coords.size());
    const std::size_t deg = totient(n);
    for (const auto& a : coords) {
        std::vector<Rational> c(deg, Rational(0));
        for (std::size_t k = 0; k < deg; ++k) c[k] = Rational(a[k]);
        pts.emplace_back(CycNum(n, std::move(c)));
    }
    return make_point_set(spec.tag, std::move(pts));
}

Patch generate_patch(const PatchSpec& spec) {
    const unsigned long n = spec.tag.n;
    const std::size_t deg = totient(n);
    const bool lattice = (deg == 2); // n in {3,4,6}: the crystallographic cases
    if (!lattice && std::gcd(spec.star_exponent, n) != 1)
        throw std::invalid_argument("generate_patch: star exponent must be coprime to n");
    if (deg != 2 && deg != 4)
        throw std::invalid_argument(
            "generate_patch: only symmetries with phi(n) in {2,4} are supported");

    const double R = spec.physical_radius.get_d();
    if (R <= 0) throw std::invalid_argument("generate_patch: radius must be positive");

    // outer radius of the (shifted) window in the internal plane
    double W = 0;
    if (!lattice) {
        W = std::abs(spec.window.radius.get_d()) +
            std::hypot(spec.window.shift.first.get_d(), spec.window.shift.second.get_d());
    }

    // physical and internal embeddings of the power basis
    std::vector<std::complex<double>> phys(deg), intern(deg);
    for (std::size_t k = 0; k < deg; ++k) {
        phys[k] = std::polar(1.0, 2.0 * M_PI * double(k) / double(n));
        intern[k] = std::polar(1.0, 2.0 * M_PI * double(k * spec.star_exponent) / double(n));
    }

    // coefficient bounds from the inverse embedding matrix
    const std::size_t dim = lattice ? 2 : 4;
    std::vector<std::vector<double>> M(dim, std::vector<double>(dim, 0.0));
    for (std::size_t k = 0; k < deg; ++k) {
        M[0][k] = phys[k].real();
        M[1][k] = phys[k].imag();
        if (!lattice) {
            M[2][k] = intern[k].real();
            M[3][k] = intern[k].imag();
        }
    }
    // invert M by Gauss-Jordan
    std::vector<std::vector<double>> inv(dim, std::vector<double>(dim, 0.0));
    for (std::size_t i = 0; i < dim; ++i) inv[i][i] = 1.0;
    for (std::size_t c = 0; c < dim; ++c) {
        std::size_t piv = c;
        for (std::size_t rr = c + 1; rr < dim; ++rr)
            if (std::abs(M[rr][c]) > std::abs(M[piv][c])) piv = rr;
        std::swap(M[c], M[piv]);
        std::swap(inv[c], inv[piv]);
        const double f = M[c][c];
        for (std::size_t j = 0; j < dim; ++j) {
            M[c][j] /= f;
            inv[c][j] /= f;
        }
        for (std::size_t rr = 0; rr < dim; ++rr) {
            if (rr == c) continue;
            const double g = M[rr][c];
            for (std::size_t j = 0; j < dim; ++j) {
                M[rr][j] -= g * M[c][j];
                inv[rr][j] -= g * inv[c][j];
            }
        }
    }
    const double bounds[4] = {R, R, W, W};
    std::vector<long> box(deg, 0);
    double total = 1;
    for (std::size_t k = 0; k < deg; ++k) {
        double b = 0;
        for (std::size_t j = 0; j < dim; ++j) b += std::abs(inv[k][j]) * bounds[j];
        box[k] = static_cast<long>(std::floor(b + 1e-9)) + 1;
        total *= double(2 * box[k] + 1);
    }
    if (total > 1e7)
        throw std::invalid_argument(
            "generate_patch: coefficient box exceeds 10^7 candidates; reduce the radius");

    const double margin = 1e-9 * (1.0 + R + W);
    const Rational R2 = spec.physical_radius * spec.physical_radius;

    // floating window data for the prefilter; 0 = uncertain, decide exactly
    const double sx = spec.window.shift.first.get_d();
    const double sy = spec.window.shift.second.get_d();
    std::vector<std::complex<double>> wverts;
    if (!lattice && spec.window.shape == WindowSpec::Shape::Ngon) {
        const double r = spec.window.radius.get_d();
        const double rot = 2.0 * M_PI * spec.window.rotation.get_d();
        for (unsigned j = 0; j < spec.window.sides; ++j)
            wverts.push_back(std::complex<double>(sx, sy) +
                             std::polar(r, rot + 2.0 * M_PI * double(j) / spec.window.sides));
    }
    const auto classify_double = [&](std::complex<double> p) -> int {
        if (spec.window.shape == WindowSpec::Shape::Disc) {
            const double d = std::abs(p - std::complex<double>(sx, sy));
            const double r = spec.window.radius.get_d();
            if (d < r - margin) return 1;
            if (d > r + margin) return -1;
            return 0;
        }
        int verdict = 1;
        for (std::size_t j = 0; j < wverts.size(); ++j) {
            const auto a2 = wverts[j], b2 = wverts[(j + 1) % wverts.size()];
            const auto u = b2 - a2, v = p - a2;
            const double cr = u.real() * v.imag() - u.imag() * v.real();
            const double dist = cr / std::abs(u);
            if (dist < -margin) return -1;
            if (dist < margin) verdict = 0;
        }
        return verdict;
    };

    Patch out;
    out.spec = spec;

    std::vector<long> a(deg, -0);
    for (std::size_t k = 0; k < deg; ++k) a[k] = -box[k];
    const auto exact_point = [&](const std::vector<long>& cs) {
        std::vector<Rational> c(deg, Rational(0));
        for (std::size_t k = 0; k < deg; ++k) c[k] = Rational(cs[k]);
        return CycNum(n, std::move(c));
    };

    while (true) {
        // physical prefilter
        std::complex<double> x{0, 0}, xs{0, 0};
        for (std::size_t k = 0; k < deg; ++k) {
            x += double(a[k]) * phys[k];
            if (!lattice) xs += double(a[k]) * intern[k];
        }
        bool keep = false;
        const double ax = std::abs(x);
        if (ax <= R - margin)
            keep = true;
        else if (ax <= R + margin) {
            const CycNum z = exact_point(a);
            keep = (z * z.conj() - CycNum(R2)).sign() <= 0;
        }
        if (keep && !lattice) {
            int cls = classify_double(xs);
            if (cls == 0)
                cls = window_classify(spec.window,
                                      star_map(exact_point(a), spec.star_exponent));
            if (cls < 0) keep = false;
            if (cls == 0) ++out.boundary_hits;
        }
        if (keep) out.coords.push_back(a);

        // advance the odometer
        std::size_t k = 0;
        while (k < deg && a[k] == box[k]) {
            a[k] = -box[k];
            ++k;
        }
        if (k == deg) break;
        ++a[k];
    }
    std::sort(out.coords.begin(), out.coords.end());
    return out;
}

} // namespace cyclotomo
