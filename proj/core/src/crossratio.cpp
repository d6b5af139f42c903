#include "cyclotomo/crossratio.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "cyclotomo/util.hpp"

namespace cyclotomo {

CycNum cross_ratio(const Slope& t1, const Slope& t2, const Slope& t3, const Slope& t4) {
    const Slope* t[4] = {&t1, &t2, &t3, &t4};
    int inf_at = -1;
    for (int i = 0; i < 4; ++i) {
        for (int j = i + 1; j < 4; ++j)
            if (*t[i] == *t[j])
                throw std::invalid_argument("cross_ratio: values must be pairwise distinct");
        if (t[i]->is_infinite()) {
            if (inf_at >= 0) throw std::invalid_argument("cross_ratio: at most one infinite value");
            inf_at = i;
        }
    }
    switch (inf_at) {
    case 0: return (t4.value() - t2.value()) / (t3.value() - t2.value());
    case 1: return (t3.value() - t1.value()) / (t4.value() - t1.value());
    case 2: return (t4.value() - t2.value()) / (t4.value() - t1.value());
    case 3: return (t3.value() - t1.value()) / (t3.value() - t2.value());
    default:
        return ((t3.value() - t1.value()) * (t4.value() - t2.value())) /
               ((t3.value() - t2.value()) * (t4.value() - t1.value()));
    }
}

void QuadrupleIndex::validate() const {
    if (m < 2) throw std::invalid_argument("QuadrupleIndex: modulus too small");
    if (!(k3 >= 1 && k3 < k1 && k1 <= k2 && k2 < k4 && k4 <= m - 1))
        throw std::invalid_argument("QuadrupleIndex: index constraints violated");
    if (k1 + k2 != k3 + k4)
        throw std::invalid_argument("QuadrupleIndex: index sums differ");
}

CycNum quadruple_value(const QuadrupleIndex& q) {
    q.validate();
    const CycNum one(1);
    const auto f = [&](unsigned long k) { return one - CycNum::zeta(q.m, static_cast<long>(k)); };
    return (f(q.k1) * f(q.k2)) / (f(q.k3) * f(q.k4));
}

namespace {

// ---- integer fast path -------------------------------------------------
//
// Quadruple values are handled as fractions A/B of algebraic integers with
// small int64 coefficient vectors; equality and Galois-fixedness reduce to
// cross multiplications, so the full enumeration runs without rational
// arithmetic. Only the surviving distinct values are converted exactly.

using ZVec = std::vector<long long>;

struct FastField {
    unsigned long m = 0;
    std::size_t d = 0;
    std::vector<ZVec> rows;
    long long maxrow = 0;
};

FastField make_fast_field(unsigned long m) {
    FastField f;
    f.m = m;
    const auto& rows = reduction_table(m);
    f.d = rows[0].size();
    f.rows.reserve(rows.size());
    for (const auto& row : rows) {
        ZVec r(row.size());
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (!row[i].fits_slong_p())
                throw std::runtime_error("cross-ratio enumeration: reduction table overflow");
            r[i] = row[i].get_si();
            f.maxrow = std::max(f.maxrow, std::llabs(r[i]));
        }
        f.rows.push_back(std::move(r));
    }
    return f;
}

long long checked_i64(__int128 v) {
    if (v > INT64_MAX || v < INT64_MIN)
        throw std::runtime_error("cross-ratio enumeration: integer overflow");
    return static_cast<long long>(v);
}

ZVec zmul(const ZVec& a, const ZVec& b, const FastField& f) {
    const std::size_t d = f.d;
    std::vector<__int128> conv(2 * d - 1, 0);
    for (std::size_t i = 0; i < d; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < d; ++j)
            if (b[j] != 0) conv[i + j] += static_cast<__int128>(a[i]) * b[j];
    }
    ZVec out(d);
    for (std::size_t i = 0; i < d; ++i) out[i] = checked_i64(conv[i]);
    for (std::size_t e = d; e < conv.size(); ++e) {
        if (conv[e] == 0) continue;
        const auto& row = f.rows[e];
        for (std::size_t i = 0; i < d; ++i)
            if (row[i] != 0) out[i] = checked_i64(static_cast<__int128>(out[i]) + conv[e] * row[i]);
    }
    return out;
}

ZVec zgalois(const ZVec& a, unsigned long j, const FastField& f) {
    std::vector<__int128> acc(f.d, 0);
    for (std::size_t k = 0; k < f.d; ++k) {
        if (a[k] == 0) continue;
        const auto& row = f.rows[(k * j) % f.m];
        for (std::size_t i = 0; i < f.d; ++i)
            if (row[i] != 0) acc[i] += static_cast<__int128>(a[k]) * row[i];
    }
    ZVec out(f.d);
    for (std::size_t i = 0; i < f.d; ++i) out[i] = checked_i64(acc[i]);
    return out;
}

// (1 - z^k1)(1 - z^k2) expanded through the reduction table: four monomials.
ZVec pair_product(unsigned long k1, unsigned long k2, const FastField& f) {
    ZVec out(f.d, 0);
    out[0] = 1;
    const auto& r1 = f.rows[k1 % f.m];
    const auto& r2 = f.rows[k2 % f.m];
    const auto& r12 = f.rows[(k1 + k2) % f.m];
    for (std::size_t i = 0; i < f.d; ++i) out[i] += r12[i] - r1[i] - r2[i];
    return out;
}

struct ValueClass {
    ZVec A, B;
    double approx = 0.0;
    QuadrupleIndex witness;
};

struct ClassTable {
    std::vector<ValueClass> classes;
    std::multimap<double, std::size_t> by_approx;

    // Returns the class index holding A/B, inserting a new class if needed.
    std::size_t insert(ZVec A, ZVec B, double approx, const QuadrupleIndex& q,
                       const FastField& f) {
        const double w = 1e-6 * approx;
        auto lo = by_approx.lower_bound(approx - w);
        auto hi = by_approx.upper_bound(approx + w);
        for (auto it = lo; it != hi; ++it) {
            ValueClass& c = classes[it->second];
            if (zmul(A, c.B, f) == zmul(c.A, B, f)) {
                if (q < c.witness) c.witness = q;
                return it->second;
            }
        }
        const std::size_t idx = classes.size();
        classes.push_back(ValueClass{std::move(A), std::move(B), approx, q});
        by_approx.emplace(approx, idx);
        return idx;
    }
};

void enumerate_range(unsigned long m, unsigned long s_begin, unsigned long s_end,
                     const FastField& f, const std::vector<double>& sins, ClassTable& table) {
    for (unsigned long s = s_begin; s < s_end; ++s) {
        const unsigned long k3_lo = (s > m - 1) ? s - (m - 1) : 1;
        for (unsigned long k3 = k3_lo; 2 * k3 + 1 < s; ++k3) {
            const unsigned long k4 = s - k3;
            const double denom = sins[k3] * sins[k4];
            for (unsigned long k1 = k3 + 1; 2 * k1 <= s; ++k1) {
                const unsigned long k2 = s - k1;
                const QuadrupleIndex q{m, k1, k2, k3, k4};
                const double approx = sins[k1] * sins[k2] / denom;
                table.insert(pair_product(k1, k2, f), pair_product(k3, k4, f), approx, q, f);
            }
        }
    }
}

bool fixed_by(const ValueClass& c, unsigned long j, const FastField& f) {
    return zmul(zgalois(c.A, j, f), c.B, f) == zmul(c.A, zgalois(c.B, j, f), f);
}

CycNum from_zvec(const ZVec& v, unsigned long m) {
    std::vector<Rational> c(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) c[i] = Rational(static_cast<long>(v[i]));
    return CycNum(m, std::move(c));
}

} // namespace

CrossRatioSet forbidden_cross_ratios(const FieldTag& tag) {
    const unsigned long m = tag.m, N = tag.N;
    const FastField f = make_fast_field(m);
    std::vector<double> sins(m);
    for (unsigned long k = 1; k < m; ++k)
        sins[k] = std::sin(static_cast<double>(k) * M_PI / static_cast<double>(m));

    const unsigned long s_max = 2 * (m - 1) + 1;
    const unsigned workers = std::min<unsigned>(thread_count(), 8);
    std::vector<ClassTable> tables(workers);
    if (workers <= 1) {
        enumerate_range(m, 2, s_max, f, sins, tables[0]);
    } else {
        std::vector<std::thread> threads;
        const unsigned long span = (s_max - 2 + workers) / workers;
        for (unsigned w = 0; w < workers; ++w) {
            const unsigned long b = 2 + w * span;
            const unsigned long e = std::min<unsigned long>(b + span, s_max);
            if (b >= e) continue;
            threads.emplace_back(
                [&, b, e, w] { enumerate_range(m, b, e, f, sins, tables[w]); });
        }
        for (auto& t : threads) t.join();
        for (unsigned w = 1; w < workers; ++w)
            for (auto& c : tables[w].classes)
                tables[0].insert(std::move(c.A), std::move(c.B), c.approx, c.witness, f);
    }

    // Coset representatives of the automorphisms fixing Q(zeta_N).
    std::vector<unsigned long> fixers;
    for (unsigned long j = 1 + N; j < m; j += N)
        if (std::gcd(j, m) == 1) fixers.push_back(j);

    CrossRatioSet out;
    out.tag = tag;
    for (const auto& c : tables[0].classes) {
        bool in_sub = true;
        for (unsigned long j : fixers)
            if (!fixed_by(c, j, f)) {
                in_sub = false;
                break;
            }
        if (!in_sub) continue;
        CycNum v = from_zvec(c.A, m) / from_zvec(c.B, m);
        if (!v.is_real() || !v.in_subfield(N))
            throw std::logic_error("forbidden_cross_ratios: fixedness check disagrees");
        CycNum vN = v.descended(N);
        if (real_compare(vN, CycNum(1)) <= 0)
            throw std::logic_error("forbidden_cross_ratios: value not greater than one");
        CrossRatioEntry e;
        e.value = std::move(vN);
        e.witness = c.witness;
        e.approx = e.value.approx_real();
        out.entries.push_back(std::move(e));
    }
    std::sort(out.entries.begin(), out.entries.end(),
              [](const CrossRatioEntry& a, const CrossRatioEntry& b) {
                  return real_compare(a.value, b.value) < 0;
              });
    out.rebuild_keys();
    return out;
}

void CrossRatioSet::rebuild_keys() {
    keys_.clear();
    for (const auto& e : entries) keys_.insert(e.value.key());
}

bool CrossRatioSet::contains(const CycNum& v) const {
    if (v.conductor() == tag.N) return keys_.count(v.key()) > 0;
    const unsigned long L = std::lcm(v.conductor(), tag.N);
    try {
        return keys_.count(v.lifted(L).descended(tag.N).key()) > 0;
    } catch (const std::domain_error&) {
        return false; // not in Q(zeta_N)
    }
}

std::vector<CycNum> cross_ratio_orbit(const CycNum& c) {
    if (c.is_zero() || c == CycNum(1))
        throw std::domain_error("cross_ratio_orbit: value must avoid 0 and 1");
    const CycNum one(1);
    const CycNum candidates[6] = {c,
                                  one / c,
                                  one - c,
                                  one / (one - c),
                                  (c - one) / c,
                                  c / (c - one)};
    std::vector<CycNum> out;
    for (const auto& x : candidates) {
        bool seen = false;
        for (const auto& y : out)
            if (x == y) {
                seen = true;
                break;
            }
        if (!seen) out.push_back(x);
    }
    return out;
}

namespace {

std::string rational_str(const Rational& r) { return r.get_str(); }

} // namespace

std::string pretty_quadratic(const CycNum& v) {
    if (v.is_rational()) return rational_str(v.to_rational());
    const unsigned long N = v.conductor();
    long dsq = 0;
    CycNum root;
    if (N == 8) {
        dsq = 2;
        root = CycNum::zeta(8, 1) + CycNum::zeta(8, 7);
    } else if (N == 10) {
        dsq = 5;
        root = (CycNum::zeta(10, 1) + CycNum::zeta(10, 9)) * 2 - 1;
    } else if (N == 12) {
        dsq = 3;
        root = CycNum::zeta(12, 1) + CycNum::zeta(12, 11);
    } else {
        return {};
    }
    // v = a + b*root with rational a, b
    std::size_t i = 1;
    while (i < root.coeffs().size() && root.coeffs()[i] == 0) ++i;
    if (i >= root.coeffs().size()) return {};
    const Rational b = v.coeffs()[i] / root.coeffs()[i];
    const Rational a = v.coeffs()[0] - b * root.coeffs()[0];
    if (CycNum::rational(a, N) + root * CycNum::rational(b, N) != v) return {};
    if (b == 0) return rational_str(a);
    const Integer den = lcm(a.get_den(), b.get_den());
    const Integer pa = a.get_num() * (den / a.get_den());
    const Integer pb = b.get_num() * (den / b.get_den());
    std::string core;
    const Integer pb_abs = abs(pb);
    const std::string rootstr =
        (pb_abs == 1 ? std::string() : pb_abs.get_str()) + "√" + std::to_string(dsq);
    if (pa == 0)
        core = (pb < 0 ? "-" : "") + rootstr;
    else
        core = pa.get_str() + (pb < 0 ? "-" : "+") + rootstr;
    if (den == 1) return core;
    return "(" + core + ")/" + den.get_str();
}

} // namespace cyclotomo
