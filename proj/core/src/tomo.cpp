#include "cyclotomo/tomo.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <unordered_map>

namespace cyclotomo {

unsigned long XRayTable::total() const {
    unsigned long t = 0;
    for (const auto& [key, count] : rows) t += count;
    return t;
}

bool XRayTable::operator==(const XRayTable& o) const {
    if (rows.size() != o.rows.size()) return false;
    for (std::size_t i = 0; i < rows.size(); ++i)
        if (rows[i].second != o.rows[i].second || rows[i].first != o.rows[i].first) return false;
    return true;
}

XRayTable xray(const PointSet& f, const Direction& d) {
    XRayTable t{d, {}};
    std::vector<std::pair<CycNum, unsigned>>& rows = t.rows;
    for (const auto& p : f.points) {
        const CycNum key = line_key(p, d);
        bool merged = false;
        for (auto& [k, count] : rows)
            if (k == key) {
                ++count;
                merged = true;
                break;
            }
        if (!merged) rows.emplace_back(key, 1);
    }
    std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
        return real_compare(a.first, b.first) < 0;
    });
    return t;
}

bool xrays_equal(const PointSet& f, const PointSet& g, const std::vector<Direction>& dirs) {
    for (const auto& d : dirs)
        if (!(xray(f, d) == xray(g, d))) return false;
    return true;
}

bool verify_u_polygon(const std::vector<Point>& vertices, const std::vector<Direction>& dirs) {
    const auto hull = convex_hull(vertices);
    if (hull.size() < 3 || hull.size() != vertices.size())
        throw std::invalid_argument(
            "verify_u_polygon: vertices must form a nondegenerate convex polygon");
    for (const auto& d : dirs) {
        std::vector<CycNum> keys;
        keys.reserve(vertices.size());
        for (const auto& v : vertices) keys.push_back(line_key(v, d));
        for (std::size_t i = 0; i < keys.size(); ++i) {
            bool paired = false;
            for (std::size_t j = 0; j < keys.size() && !paired; ++j)
                paired = (i != j && keys[i] == keys[j]);
            if (!paired) return false;
        }
    }
    return true;
}

namespace {

struct OracleContext {
    std::vector<Point> pts;                       // lex-sorted patch
    std::vector<std::vector<int>> line_id;        // [dir][point] -> line index
    std::vector<signed char> orient3;             // packed i<j<k orientation signs
    std::size_t n = 0;

    std::size_t tri_index(std::size_t i, std::size_t j, std::size_t k) const {
        // index of (i<j<k) in the choose(n,3) enumeration
        return (i * (3 * n * n - 3 * n * (i + 3) + i * i + 3 * i + 2)) / 6 +
               ((j - i - 1) * (2 * n - i - j - 2)) / 2 + (k - j - 1);
    }

    int orient(std::size_t a, std::size_t b, std::size_t c) const {
        if (a == b || b == c || a == c) return 0;
        int sign = 1;
        if (a > b) { std::swap(a, b); sign = -sign; }
        if (b > c) { std::swap(b, c); sign = -sign; }
        if (a > b) { std::swap(a, b); sign = -sign; }
        return sign * orient3[tri_index(a, b, c)];
    }
};

// hull of a sorted index set; returns counterclockwise hull indices
std::vector<std::uint8_t> index_hull(const OracleContext& ctx,
                                     const std::vector<std::uint8_t>& sorted) {
    const std::size_t n = sorted.size();
    if (n <= 2) return sorted;
    std::vector<std::uint8_t> h(2 * n + 1);
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) {
        while (k >= 2 && ctx.orient(h[k - 2], h[k - 1], sorted[i]) <= 0) --k;
        h[k++] = sorted[i];
    }
    const std::size_t lower = k + 1;
    for (std::size_t i = n - 1; i-- > 0;) {
        while (k >= lower && ctx.orient(h[k - 2], h[k - 1], sorted[i]) <= 0) --k;
        h[k++] = sorted[i];
    }
    h.resize(k - 1);
    return h;
}

bool index_hull_contains(const OracleContext& ctx, const std::vector<std::uint8_t>& hull,
                         std::size_t p) {
    if (hull.empty()) return false;
    if (hull.size() == 1) return hull[0] == p;
    if (hull.size() == 2) {
        if (ctx.orient(hull[0], hull[1], p) != 0) return false;
        // collinear; the patch is lex-sorted, so the segment test is an
        // index comparison
        return hull[0] <= p && p <= hull[1];
    }
    for (std::size_t i = 0; i < hull.size(); ++i)
        if (ctx.orient(hull[i], hull[(i + 1) % hull.size()], p) < 0) return false;
    return true;
}

std::uint64_t fnv_mix(std::uint64_t h, std::uint64_t v) {
    h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return h;
}

} // namespace

CollisionReport uniqueness_oracle(const PointSet& patch, const std::vector<Direction>& dirs,
                                  unsigned max_subset_size, double budget_seconds) {
    if (patch.size() > 40)
        throw std::invalid_argument("uniqueness_oracle: patch is capped at 40 points");
    const auto t0 = std::chrono::steady_clock::now();

    OracleContext ctx;
    ctx.pts = patch.points;
    std::sort(ctx.pts.begin(), ctx.pts.end(), [](const Point& a, const Point& b) {
        const int c = real_compare(a.re(), b.re());
        if (c != 0) return c < 0;
        return real_compare(a.im(), b.im()) < 0;
    });
    const std::size_t n = ctx.pts.size();
    ctx.n = n;

    // exact line incidence, reduced to small integers per direction
    ctx.line_id.assign(dirs.size(), std::vector<int>(n, -1));
    for (std::size_t d = 0; d < dirs.size(); ++d) {
        std::vector<CycNum> keys;
        for (std::size_t i = 0; i < n; ++i) {
            const CycNum key = line_key(ctx.pts[i], dirs[d]);
            int id = -1;
            for (std::size_t j = 0; j < keys.size(); ++j)
                if (keys[j] == key) {
                    id = int(j);
                    break;
                }
            if (id < 0) {
                id = int(keys.size());
                keys.push_back(key);
            }
            ctx.line_id[d][i] = id;
        }
    }

    // all exact orientation signs, computed once
    if (n >= 3) {
        ctx.orient3.resize(n * (n - 1) * (n - 2) / 6);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                for (std::size_t k = j + 1; k < n; ++k)
                    ctx.orient3[ctx.tri_index(i, j, k)] =
                        static_cast<signed char>(orientation(ctx.pts[i], ctx.pts[j], ctx.pts[k]));
    }

    CollisionReport report;
    report.directions = dirs;

    // fingerprint -> subsets (as bitmasks) seen with that fingerprint
    std::unordered_map<std::uint64_t, std::vector<std::uint64_t>> seen;
    const auto fingerprint_of = [&](std::uint64_t mask) {
        std::uint64_t h = 1469598103934665603ull;
        for (std::size_t d = 0; d < dirs.size(); ++d) {
            std::array<std::uint8_t, 40> counts{};
            for (std::size_t i = 0; i < n; ++i)
                if (mask >> i & 1) ++counts[std::size_t(ctx.line_id[d][i])];
            for (std::size_t l = 0; l < 40; ++l)
                if (counts[l]) h = fnv_mix(h, (d << 16) | (l << 8) | counts[l]);
        }
        return h;
    };
    const auto rays_equal_masks = [&](std::uint64_t a, std::uint64_t b) {
        for (std::size_t d = 0; d < dirs.size(); ++d) {
            std::array<int, 40> diff{};
            for (std::size_t i = 0; i < n; ++i) {
                if (a >> i & 1) ++diff[std::size_t(ctx.line_id[d][i])];
                if (b >> i & 1) --diff[std::size_t(ctx.line_id[d][i])];
            }
            for (int v : diff)
                if (v != 0) return false;
        }
        return true;
    };
    const auto to_point_set = [&](std::uint64_t mask) {
        std::vector<Point> pts;
        for (std::size_t i = 0; i < n; ++i)
            if (mask >> i & 1) pts.push_back(ctx.pts[i]);
        return make_point_set(patch.tag, std::move(pts));
    };

    bool done = false;
    const auto record = [&](std::uint64_t mask) {
        ++report.subsets_examined;
        const std::uint64_t h = fingerprint_of(mask);
        auto& bucket = seen[h];
        for (std::uint64_t other : bucket) {
            if (other == mask) continue;
            if (rays_equal_masks(other, mask)) {
                report.found = true;
                report.first = to_point_set(other);
                report.second = to_point_set(mask);
                done = true;
                return;
            }
        }
        bucket.push_back(mask);
    };

    // the empty set is a convex subset too
    record(0);

    unsigned long long budget_ticks = 0;
    const auto expired = [&] {
        if ((++budget_ticks & 0x3ff) != 0) return false;
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() >
               budget_seconds;
    };

    // DFS over vertex sets in strictly convex position, in lex order
    std::vector<std::uint8_t> vset;
    auto rec = [&](auto&& self, std::size_t next) -> void {
        if (done) return;
        if (!vset.empty()) {
            const auto hull = index_hull(ctx, vset);
            if (hull.size() != vset.size()) return; // not in strictly convex position
            std::uint64_t mask = 0;
            unsigned size = 0;
            for (std::size_t i = 0; i < n && size <= max_subset_size + 1; ++i) {
                if (index_hull_contains(ctx, hull, i)) {
                    mask |= std::uint64_t(1) << i;
                    ++size;
                }
            }
            if (size > max_subset_size) return; // supersets only grow
            record(mask);
            if (done) return;
        }
        if (vset.size() >= max_subset_size) return;
        for (std::size_t t = next; t < n; ++t) {
            if (expired()) {
                report.exhaustive = false;
                done = true;
                return;
            }
            vset.push_back(std::uint8_t(t));
            // quick reject before recursing: convex position is hereditary
            const auto hull = index_hull(ctx, vset);
            if (hull.size() == vset.size()) self(self, t + 1);
            vset.pop_back();
            if (done) return;
        }
    };
    report.exhaustive = true;
    rec(rec, 0);

    report.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return report;
}

} // namespace cyclotomo
