#include "cyclotomo/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace cyclotomo {

namespace {

using Poly = std::vector<Integer>; // dense, index = power

std::size_t poly_degree(const Poly& p) {
    std::size_t d = p.size();
    while (d > 1 && p[d - 1] == 0) --d;
    return d - 1;
}

Poly poly_mul(const Poly& a, const Poly& b) {
    Poly r(a.size() + b.size() - 1, Integer(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            if (b[j] != 0) r[i + j] += a[i] * b[j];
    }
    return r;
}

// Exact division of integer polynomials; the divisor is monic up to sign.
Poly poly_div_exact(Poly num, const Poly& den) {
    const std::size_t dn = poly_degree(num);
    const std::size_t dd = poly_degree(den);
    if (dn < dd) throw std::logic_error("poly_div_exact: degree underflow");
    Poly q(dn - dd + 1, Integer(0));
    for (std::size_t k = dn - dd + 1; k-- > 0;) {
        Integer c = num[dd + k] / den[dd];
        q[k] = c;
        if (c == 0) continue;
        for (std::size_t i = 0; i <= dd; ++i) num[i + k] -= c * den[i];
    }
    for (const auto& c : num)
        if (c != 0) throw std::logic_error("poly_div_exact: nonzero remainder");
    return q;
}

std::map<unsigned long, Poly> g_phi_cache;
std::mutex g_phi_mutex;

Poly cyclotomic_poly_impl(unsigned long m) {
    if (auto it = g_phi_cache.find(m); it != g_phi_cache.end()) return it->second;
    Poly result;
    if (m == 1) {
        result = {Integer(-1), Integer(1)};
    } else {
        Poly p(m + 1, Integer(0));
        p[0] = -1;
        p[m] = 1;
        for (unsigned long d = 1; d < m; ++d)
            if (m % d == 0) p = poly_div_exact(std::move(p), cyclotomic_poly_impl(d));
        result = std::move(p);
        result.resize(poly_degree(result) + 1);
    }
    g_phi_cache.emplace(m, result);
    return result;
}

struct FieldData {
    unsigned long m = 1;
    std::size_t deg = 1;
    Poly phi;                             // monic, degree = deg
    std::vector<std::vector<Integer>> rows; // x^e mod phi, e < max(m, 2*deg-1)
};

std::unordered_map<unsigned long, std::shared_ptr<const FieldData>> g_fields;
std::shared_mutex g_fields_mutex;

std::shared_ptr<const FieldData> field(unsigned long m) {
    {
        std::shared_lock lk(g_fields_mutex);
        if (auto it = g_fields.find(m); it != g_fields.end()) return it->second;
    }
    auto fd = std::make_shared<FieldData>();
    fd->m = m;
    {
        std::lock_guard lk(g_phi_mutex);
        fd->phi = cyclotomic_poly_impl(m);
    }
    fd->deg = fd->phi.size() - 1;
    const std::size_t deg = fd->deg;
    const std::size_t rows = std::max<std::size_t>(m, 2 * deg - 1);
    fd->rows.assign(rows, {});
    for (std::size_t e = 0; e < rows; ++e) {
        auto& row = fd->rows[e];
        row.assign(deg, Integer(0));
        if (e < deg) {
            row[e] = 1;
        } else {
            const auto& prev = fd->rows[e - 1];
            Integer carry = prev[deg - 1]; // coefficient of x^deg after shifting
            for (std::size_t i = deg; i-- > 1;) row[i] = prev[i - 1];
            row[0] = 0;
            if (carry != 0)
                for (std::size_t i = 0; i < deg; ++i) row[i] -= carry * fd->phi[i];
        }
    }
    std::unique_lock lk(g_fields_mutex);
    auto [it, inserted] = g_fields.emplace(m, fd);
    return it->second;
}

unsigned long gcd_ul(unsigned long a, unsigned long b) { return std::gcd(a, b); }

unsigned long lcm_ul(unsigned long a, unsigned long b) {
    return a / gcd_ul(a, b) * b;
}

} // namespace

unsigned long totient(unsigned long m) {
    unsigned long result = m, v = m;
    for (unsigned long p = 2; p * p <= v; ++p) {
        if (v % p) continue;
        result -= result / p;
        while (v % p == 0) v /= p;
    }
    if (v > 1) result -= result / v;
    return result;
}

std::vector<Integer> cyclotomic_polynomial(unsigned long m) {
    if (m == 0) throw std::invalid_argument("cyclotomic_polynomial: m must be positive");
    std::lock_guard lk(g_phi_mutex);
    return cyclotomic_poly_impl(m);
}

const std::vector<std::vector<Integer>>& reduction_table(unsigned long m) {
    // The registry never evicts, so the reference stays valid.
    return field(m)->rows;
}

CycNum::CycNum(unsigned long m, std::vector<Rational> coeffs) : m_(m), c_(std::move(coeffs)) {
    if (m == 0) throw std::invalid_argument("CycNum: conductor must be positive");
    if (c_.size() != field(m)->deg)
        throw std::invalid_argument("CycNum: coefficient count must equal phi(m)");
    // gcd-reduced, positive denominator; gmp arithmetic preserves this
    for (auto& x : c_) mpq_canonicalize(x.get_mpq_t());
}

CycNum CycNum::zeta(unsigned long m, long k) {
    if (m == 0) throw std::invalid_argument("CycNum::zeta: m must be positive");
    auto fd = field(m);
    long kk = k % static_cast<long>(m);
    if (kk < 0) kk += static_cast<long>(m);
    std::vector<Rational> c(fd->deg, Rational(0));
    const auto& row = fd->rows[static_cast<std::size_t>(kk)];
    for (std::size_t i = 0; i < fd->deg; ++i) c[i] = Rational(row[i]);
    return CycNum(m, std::move(c));
}

CycNum CycNum::rational(const Rational& v, unsigned long m) {
    auto fd = field(m);
    std::vector<Rational> c(fd->deg, Rational(0));
    c[0] = v;
    return CycNum(m, std::move(c));
}

bool CycNum::is_zero() const {
    for (const auto& x : c_)
        if (x != 0) return false;
    return true;
}

bool CycNum::is_rational() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

Rational CycNum::to_rational() const {
    if (!is_rational()) throw std::domain_error("CycNum::to_rational: value is not rational");
    return c_[0];
}

CycNum CycNum::operator-() const {
    CycNum r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

CycNum CycNum::lifted(unsigned long M) const {
    if (M % m_ != 0) throw std::invalid_argument("CycNum::lifted: conductor must be a multiple");
    if (M == m_) return *this;
    auto fd = field(M);
    const unsigned long step = M / m_;
    std::vector<Rational> out(fd->deg, Rational(0));
    for (std::size_t k = 0; k < c_.size(); ++k) {
        if (c_[k] == 0) continue;
        const auto& row = fd->rows[k * step];
        for (std::size_t i = 0; i < fd->deg; ++i)
            if (row[i] != 0) out[i] += c_[k] * Rational(row[i]);
    }
    return CycNum(M, std::move(out));
}

CycNum CycNum::operator+(const CycNum& o) const {
    if (m_ != o.m_) {
        const unsigned long L = lcm_ul(m_, o.m_);
        return lifted(L) + o.lifted(L);
    }
    CycNum r = *this;
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] += o.c_[i];
    return r;
}

CycNum CycNum::operator-(const CycNum& o) const {
    if (m_ != o.m_) {
        const unsigned long L = lcm_ul(m_, o.m_);
        return lifted(L) - o.lifted(L);
    }
    CycNum r = *this;
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] -= o.c_[i];
    return r;
}

CycNum CycNum::operator*(const CycNum& o) const {
    if (m_ != o.m_) {
        const unsigned long L = lcm_ul(m_, o.m_);
        return lifted(L) * o.lifted(L);
    }
    auto fd = field(m_);
    const std::size_t deg = fd->deg;
    std::vector<Rational> conv(2 * deg - 1, Rational(0));
    for (std::size_t i = 0; i < deg; ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < deg; ++j)
            if (o.c_[j] != 0) conv[i + j] += c_[i] * o.c_[j];
    }
    std::vector<Rational> out(conv.begin(), conv.begin() + deg);
    for (std::size_t e = deg; e < conv.size(); ++e) {
        if (conv[e] == 0) continue;
        const auto& row = fd->rows[e];
        for (std::size_t i = 0; i < deg; ++i)
            if (row[i] != 0) out[i] += conv[e] * Rational(row[i]);
    }
    return CycNum(m_, std::move(out));
}

namespace {

using QPoly = std::vector<Rational>;

std::size_t qdeg(const QPoly& p) {
    std::size_t d = p.size();
    while (d > 0 && p[d - 1] == 0) --d;
    return d; // 0 means the zero polynomial; otherwise degree + 1
}

// num <- num mod den (in place), returns quotient
QPoly qdivmod(QPoly& num, const QPoly& den) {
    const std::size_t dn = qdeg(num), dd = qdeg(den);
    if (dd == 0) throw std::logic_error("qdivmod: division by zero polynomial");
    if (dn < dd) return {};
    QPoly q(dn - dd + 1, Rational(0));
    for (std::size_t k = dn - dd + 1; k-- > 0;) {
        Rational c = num[dd - 1 + k] / den[dd - 1];
        q[k] = c;
        if (c == 0) continue;
        for (std::size_t i = 0; i < dd; ++i) num[i + k] -= c * den[i];
    }
    return q;
}

QPoly qmulsub(const QPoly& a, const QPoly& q, const QPoly& b) {
    // a - q*b
    QPoly r = a;
    if (qdeg(q) == 0) return r;
    const std::size_t need = qdeg(q) + qdeg(b);
    if (r.size() < need) r.resize(need, Rational(0));
    for (std::size_t i = 0; i < q.size(); ++i) {
        if (q[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            if (b[j] != 0) r[i + j] -= q[i] * b[j];
    }
    return r;
}

} // namespace

CycNum CycNum::inverse() const {
    if (is_zero()) throw std::domain_error("CycNum::inverse: division by zero");
    auto fd = field(m_);
    const std::size_t deg = fd->deg;
    // Extended Euclid against Phi_m; Phi_m is irreducible so the gcd is a
    // nonzero constant and the Bezout coefficient of *this is the inverse.
    QPoly r0(fd->phi.size());
    for (std::size_t i = 0; i < fd->phi.size(); ++i) r0[i] = Rational(fd->phi[i]);
    QPoly r1(c_.begin(), c_.end());
    QPoly s0{}, s1{Rational(1)};
    while (qdeg(r1) > 1) {
        QPoly rem = r0;
        QPoly q = qdivmod(rem, r1);
        QPoly s2 = qmulsub(s0, q, s1);
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (qdeg(r1) == 0) throw std::logic_error("CycNum::inverse: unexpected common factor");
    const Rational lead = r1[0];
    std::vector<Rational> out(deg, Rational(0));
    for (std::size_t i = 0; i < s1.size() && i < out.size(); ++i) out[i] = s1[i] / lead;
    // s1 may formally exceed the basis length only by zero coefficients
    for (std::size_t i = deg; i < s1.size(); ++i)
        if (s1[i] != 0) throw std::logic_error("CycNum::inverse: degree overflow");
    return CycNum(m_, std::move(out));
}

CycNum CycNum::operator/(const CycNum& o) const { return *this * o.inverse(); }

bool CycNum::operator==(const CycNum& o) const {
    if (m_ != o.m_) {
        const unsigned long L = lcm_ul(m_, o.m_);
        return lifted(L) == o.lifted(L);
    }
    return c_ == o.c_;
}

CycNum CycNum::galois(long j) const {
    if (m_ == 1) return *this;
    auto fd = field(m_);
    long jj = j % static_cast<long>(m_);
    if (jj < 0) jj += static_cast<long>(m_);
    if (jj == 0 || gcd_ul(static_cast<unsigned long>(jj), m_) != 1)
        throw std::invalid_argument("CycNum::galois: exponent not coprime to conductor");
    std::vector<Rational> out(fd->deg, Rational(0));
    for (std::size_t k = 0; k < c_.size(); ++k) {
        if (c_[k] == 0) continue;
        const auto& row = fd->rows[(k * static_cast<unsigned long>(jj)) % m_];
        for (std::size_t i = 0; i < fd->deg; ++i)
            if (row[i] != 0) out[i] += c_[k] * Rational(row[i]);
    }
    return CycNum(m_, std::move(out));
}

CycNum CycNum::conj() const {
    if (m_ <= 2) return *this;
    return galois(static_cast<long>(m_) - 1);
}

bool CycNum::is_real() const { return *this == conj(); }

bool CycNum::in_subfield(unsigned long N) const {
    if (N == 0 || m_ % N != 0)
        throw std::invalid_argument("CycNum::in_subfield: N must divide the conductor");
    for (unsigned long j = 1 + N; j < m_; j += N) {
        if (gcd_ul(j, m_) != 1) continue;
        if (galois(static_cast<long>(j)) != *this) return false;
    }
    return true;
}

namespace {

struct DescendSolver {
    std::vector<std::size_t> pivot_rows;           // sub selects a square system
    std::vector<std::vector<Rational>> inv;        // inverse of the pivot submatrix
    std::vector<std::vector<Rational>> basis_cols; // full lifted basis, deg_m x deg_d
};

std::map<std::pair<unsigned long, unsigned long>, std::shared_ptr<const DescendSolver>>
    g_descend_cache;
std::mutex g_descend_mutex;

std::shared_ptr<const DescendSolver> descend_solver(unsigned long m, unsigned long d) {
    const auto key = std::make_pair(m, d);
    {
        std::lock_guard lk(g_descend_mutex);
        if (auto it = g_descend_cache.find(key); it != g_descend_cache.end()) return it->second;
    }
    const std::size_t dm = field(m)->deg, dd = field(d)->deg;
    auto solver = std::make_shared<DescendSolver>();
    solver->basis_cols.assign(dm, std::vector<Rational>(dd, Rational(0)));
    for (std::size_t t = 0; t < dd; ++t) {
        CycNum b = CycNum::zeta(d, static_cast<long>(t)).lifted(m);
        for (std::size_t i = 0; i < dm; ++i) solver->basis_cols[i][t] = b.coeffs()[i];
    }
    // Pick dd linearly independent rows of the tall basis matrix by keeping
    // an incremental echelon of the accepted rows.
    std::vector<std::size_t> chosen;
    std::vector<std::vector<Rational>> ech;
    std::vector<std::size_t> pivcol;
    for (std::size_t r = 0; r < dm && chosen.size() < dd; ++r) {
        std::vector<Rational> row = solver->basis_cols[r];
        for (std::size_t p = 0; p < ech.size(); ++p) {
            if (row[pivcol[p]] == 0) continue;
            const Rational f = row[pivcol[p]] / ech[p][pivcol[p]];
            for (std::size_t c2 = 0; c2 < dd; ++c2) row[c2] -= f * ech[p][c2];
        }
        std::size_t c = 0;
        while (c < dd && row[c] == 0) ++c;
        if (c == dd) continue;
        chosen.push_back(r);
        ech.push_back(std::move(row));
        pivcol.push_back(c);
    }
    if (chosen.size() != dd) throw std::logic_error("descend_solver: basis is rank deficient");
    // invert the dd x dd pivot submatrix by Gauss-Jordan
    std::vector<std::vector<Rational>> gj(dd, std::vector<Rational>(2 * dd, Rational(0)));
    for (std::size_t i = 0; i < dd; ++i) {
        for (std::size_t j = 0; j < dd; ++j) gj[i][j] = solver->basis_cols[chosen[i]][j];
        gj[i][dd + i] = 1;
    }
    for (std::size_t p = 0; p < dd; ++p) {
        std::size_t piv = p;
        while (piv < dd && gj[piv][p] == 0) ++piv;
        if (piv == dd) throw std::logic_error("descend_solver: singular pivot block");
        std::swap(gj[p], gj[piv]);
        const Rational f = gj[p][p];
        for (auto& x : gj[p]) x /= f;
        for (std::size_t q = 0; q < dd; ++q) {
            if (q == p || gj[q][p] == 0) continue;
            const Rational g = gj[q][p];
            for (std::size_t c2 = 0; c2 < 2 * dd; ++c2) gj[q][c2] -= g * gj[p][c2];
        }
    }
    solver->pivot_rows = chosen;
    solver->inv.assign(dd, std::vector<Rational>(dd));
    for (std::size_t i = 0; i < dd; ++i)
        for (std::size_t j = 0; j < dd; ++j) solver->inv[i][j] = gj[i][dd + j];
    std::lock_guard lk(g_descend_mutex);
    auto [it, inserted] = g_descend_cache.emplace(key, solver);
    return it->second;
}

} // namespace

CycNum CycNum::descended(unsigned long d) const {
    if (d == 0 || m_ % d != 0)
        throw std::invalid_argument("CycNum::descended: target must divide the conductor");
    if (d == m_) return *this;
    auto solver = descend_solver(m_, d);
    const std::size_t dd = solver->inv.size();
    std::vector<Rational> rhs(dd);
    for (std::size_t i = 0; i < dd; ++i) rhs[i] = c_[solver->pivot_rows[i]];
    std::vector<Rational> y(dd, Rational(0));
    for (std::size_t i = 0; i < dd; ++i)
        for (std::size_t j = 0; j < dd; ++j)
            if (solver->inv[i][j] != 0 && rhs[j] != 0) y[i] += solver->inv[i][j] * rhs[j];
    // consistency: the full tall system must be satisfied
    for (std::size_t r = 0; r < c_.size(); ++r) {
        Rational acc(0);
        for (std::size_t j = 0; j < dd; ++j)
            if (solver->basis_cols[r][j] != 0 && y[j] != 0) acc += solver->basis_cols[r][j] * y[j];
        if (acc != c_[r]) throw std::domain_error("CycNum::descended: value not in subfield");
    }
    return CycNum(d, std::move(y));
}

std::string CycNum::key() const {
    std::ostringstream os;
    os << m_;
    for (const auto& x : c_) os << ';' << x.get_str();
    return os.str();
}

int real_compare(const CycNum& a, const CycNum& b) {
    if (!a.is_real() || !b.is_real())
        throw std::domain_error("real_compare: operands must be real");
    return (a - b).sign();
}

} // namespace cyclotomo
