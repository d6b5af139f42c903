#include "cyclotomo/geometry.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace cyclotomo {

namespace {

// i and 1/(2i) at the conductor of z (which is divisible by 4)
CycNum unit_i(unsigned long m) { return CycNum::zeta(m, static_cast<long>(m / 4)); }

CycNum imag_part(const CycNum& z) {
    const unsigned long m = z.conductor();
    return (z - z.conj()) / (unit_i(m) * 2);
}

CycNum real_part(const CycNum& z) { return (z + z.conj()) / CycNum(2); }

// Im(conj(u) * v): the planar cross product of u and v
CycNum cross(const CycNum& u, const CycNum& v) { return imag_part(u.conj() * v); }

// Re(conj(u) * v): the planar dot product
CycNum dot(const CycNum& u, const CycNum& v) { return real_part(u.conj() * v); }

bool lex_less(const Point& a, const Point& b) {
    const int c = real_compare(a.re(), b.re());
    if (c != 0) return c < 0;
    return real_compare(a.im(), b.im()) < 0;
}

} // namespace

CycNum Point::re() const { return real_part(z_); }
CycNum Point::im() const { return imag_part(z_); }

Direction::Direction(const CycNum& w) {
    if (w.is_zero()) throw std::invalid_argument("Direction: zero vector");
    CycNum v = w.conductor() % 4 == 0 ? w : w.lifted(std::lcm(w.conductor(), 4ul));
    for (const auto& c : v.coeffs())
        if (c != 0) {
            w_ = v / CycNum(Rational(c));
            return;
        }
    throw std::invalid_argument("Direction: zero vector");
}

bool PointSet::contains(const Point& p) const {
    for (const auto& q : points)
        if (q == p) return true;
    return false;
}

PointSet make_point_set(const FieldTag& tag, std::vector<Point> pts) {
    PointSet s;
    s.tag = tag;
    std::unordered_set<std::string> seen;
    for (auto& p : pts)
        if (seen.insert(p.key()).second) s.points.push_back(std::move(p));
    return s;
}

Slope slope_of(const Direction& d) {
    const CycNum& w = d.w();
    const CycNum den = w + w.conj();
    if (den.is_zero()) return Slope::infinity();
    const unsigned long m = w.conductor();
    return Slope((w - w.conj()) / (den * unit_i(m)));
}

CycNum line_key(const Point& p, const Direction& d) {
    const unsigned long m = std::lcm(p.z().conductor(), d.w().conductor());
    const CycNum z = p.z().lifted(m), w = d.w().lifted(m);
    return (z * w.conj() - z.conj() * w) / (unit_i(m) * 2);
}

int orientation(const Point& a, const Point& b, const Point& c) {
    return cross(b.z() - a.z(), c.z() - a.z()).sign();
}

std::vector<Point> convex_hull(const std::vector<Point>& pts) {
    std::vector<Point> p;
    {
        std::unordered_set<std::string> seen;
        for (const auto& q : pts)
            if (seen.insert(q.key()).second) p.push_back(q);
    }
    if (p.size() <= 1) return p;
    std::sort(p.begin(), p.end(), lex_less);
    if (p.size() == 2) return p;

    const std::size_t n = p.size();
    std::vector<Point> h(2 * n + 1);
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) { // lower chain
        while (k >= 2 && orientation(h[k - 2], h[k - 1], p[i]) <= 0) --k;
        h[k++] = p[i];
    }
    const std::size_t lower = k + 1;
    for (std::size_t i = n - 1; i-- > 0;) { // upper chain
        while (k >= lower && orientation(h[k - 2], h[k - 1], p[i]) <= 0) --k;
        h[k++] = p[i];
    }
    h.resize(k - 1); // last point equals the first
    return h;
}

bool hull_contains(const std::vector<Point>& hull, const Point& p) {
    if (hull.empty()) return false;
    if (hull.size() == 1) return hull[0] == p;
    if (hull.size() == 2) {
        const CycNum u = hull[1].z() - hull[0].z();
        const CycNum v = p.z() - hull[0].z();
        if (cross(u, v).sign() != 0) return false;
        const CycNum t = dot(u, v);
        if (t.sign() < 0) return false;
        return real_compare(t, dot(u, u)) <= 0;
    }
    for (std::size_t i = 0; i < hull.size(); ++i) {
        const Point& a = hull[i];
        const Point& b = hull[(i + 1) % hull.size()];
        if (orientation(a, b, p) < 0) return false;
    }
    return true;
}

bool is_convex_subset(const PointSet& s, const PointSet& patch) {
    std::unordered_set<std::string> patch_keys, s_keys;
    for (const auto& p : patch.points) patch_keys.insert(p.key());
    for (const auto& p : s.points) {
        if (!patch_keys.count(p.key()))
            throw std::invalid_argument("is_convex_subset: s must be a subset of the patch");
        s_keys.insert(p.key());
    }
    const auto hull = convex_hull(s.points);
    for (const auto& p : patch.points) {
        if (s_keys.count(p.key())) continue;
        if (hull_contains(hull, p)) return false;
    }
    return true;
}

} // namespace cyclotomo
