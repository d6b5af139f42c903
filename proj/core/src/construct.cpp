#include "cyclotomo/construct.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace cyclotomo {

Point apply(const Homothety& h, const Point& p) { return Point(h.lambda * p.z() + h.t); }

UPolygonInstance build_regular_upolygon(const FieldTag& tag) {
    const unsigned long N = tag.N;
    const unsigned long M = std::lcm(N, 4ul);

    std::vector<Point> cloud;
    std::vector<CycNum> ring;
    for (unsigned long k = 0; k < N; ++k) ring.push_back(CycNum::zeta(N, long(k)).lifted(M));
    for (const auto& v : ring) cloud.emplace_back(v);
    for (unsigned long k = 0; k < N; ++k) {
        const CycNum shift = ring[k] + ring[(k + 1) % N];
        for (const auto& v : ring) cloud.emplace_back(v + shift);
    }

    UPolygonInstance inst;
    inst.tag = tag;
    inst.hull = convex_hull(cloud);
    for (unsigned long h = 0; h < N; ++h)
        inst.directions.emplace_back(CycNum::zeta(std::lcm(2 * N, 4ul), long(h)));

    if (!verify_u_polygon(inst.hull, inst.directions))
        throw std::logic_error("build_regular_upolygon: construction failed verification");
    inst.coloring = color_vertices(inst.hull, inst.directions);
    return inst;
}

namespace {

PointSet loose_set(std::vector<Point> pts) {
    PointSet s;
    s.points = std::move(pts);
    return s;
}

} // namespace

Coloring color_vertices(const std::vector<Point>& hull, const std::vector<Direction>& dirs) {
    if (hull.size() % 2 != 0)
        throw std::invalid_argument("color_vertices: vertex count must be even");

    Coloring c;
    for (std::size_t i = 0; i < hull.size(); ++i)
        (i % 2 == 0 ? c.white : c.grey).push_back(hull[i]);
    if (xrays_equal(loose_set(c.white), loose_set(c.grey), dirs)) {
        c.strategy = "alternation";
        return c;
    }

    // per-line pairing: a line meets at most two vertices of a convex
    // polygon, so each direction induces a perfect matching; a valid
    // coloring is a proper 2-coloring of the union graph
    const std::size_t n = hull.size();
    std::vector<std::vector<std::size_t>> adj(n);
    for (const auto& d : dirs) {
        std::unordered_map<std::string, std::vector<std::size_t>> lines;
        for (std::size_t i = 0; i < n; ++i) lines[line_key(hull[i], d).key()].push_back(i);
        for (const auto& [key, members] : lines) {
            if (members.size() == 1)
                throw std::domain_error("color_vertices: unpaired vertex; not a U-polygon");
            if (members.size() > 2)
                throw std::logic_error("color_vertices: three vertices on one line");
            adj[members[0]].push_back(members[1]);
            adj[members[1]].push_back(members[0]);
        }
    }
    std::vector<int> color(n, -1);
    std::vector<std::size_t> stack;
    for (std::size_t start = 0; start < n; ++start) {
        if (color[start] != -1) continue;
        color[start] = 0;
        stack.push_back(start);
        while (!stack.empty()) {
            const std::size_t v = stack.back();
            stack.pop_back();
            for (std::size_t w : adj[v]) {
                if (color[w] == -1) {
                    color[w] = 1 - color[v];
                    stack.push_back(w);
                } else if (color[w] == color[v]) {
                    throw std::domain_error("color_vertices: pairing graph is odd");
                }
            }
        }
    }
    Coloring m;
    for (std::size_t i = 0; i < n; ++i) (color[i] == 0 ? m.white : m.grey).push_back(hull[i]);
    if (!xrays_equal(loose_set(m.white), loose_set(m.grey), dirs))
        throw std::logic_error("color_vertices: matching coloring failed the X-ray check");
    m.strategy = "matching";
    return m;
}

namespace {

// fundamental positive scaling unit of the real subfield, used to extend
// the integer scalar ladder
CycNum scaling_unit(unsigned long n) {
    switch (n) {
    case 5:
        return -(CycNum::zeta(5, 2) + CycNum::zeta(5, 3)); // (1+sqrt5)/2
    case 8:
        return CycNum(1) + CycNum::zeta(8) + CycNum::zeta(8, 7); // 1+sqrt2
    case 12:
        return CycNum(2) + CycNum::zeta(12) + CycNum::zeta(12, 11); // 2+sqrt3
    default:
        return CycNum(1);
    }
}

} // namespace

std::optional<Homothety> embed_homothety(const PointSet& f, const PointSet& patch,
                                         unsigned attempts) {
    if (f.points.empty() || patch.points.empty()) return std::nullopt;
    unsigned long L = 4;
    for (const auto& p : f.points) L = std::lcm(L, p.z().conductor());
    for (const auto& p : patch.points) L = std::lcm(L, p.z().conductor());
    const CycNum unit = scaling_unit(patch.tag.n);
    L = std::lcm(L, unit.conductor());

    std::unordered_set<std::string> patch_keys;
    for (const auto& p : patch.points) patch_keys.insert(p.z().lifted(L).key());
    const auto in_patch = [&](const CycNum& z) { return patch_keys.count(z.key()) > 0; };

    std::vector<CycNum> fl;
    for (const auto& p : f.points) fl.push_back(p.z().lifted(L));

    unsigned tried = 0;
    CycNum upow = CycNum(1);
    for (unsigned e = 0; e < 8; ++e) {
        for (long k = 1; k <= 16; ++k) {
            const CycNum lambda = (upow * k).lifted(L);
            // anchor the first point on each patch point in turn; t = 0 first
            std::vector<CycNum> anchors{CycNum(0).lifted(L)};
            for (const auto& p : patch.points)
                anchors.push_back(p.z().lifted(L) - lambda * fl[0]);
            for (const auto& t : anchors) {
                if (tried++ >= attempts) return std::nullopt;
                bool ok = true;
                for (const auto& z : fl)
                    if (!in_patch((lambda * z + t).lifted(L))) {
                        ok = false;
                        break;
                    }
                if (ok) return Homothety{lambda, t};
            }
        }
        upow = upow * unit;
        if (upow.is_rational() && e > 0) break; // unit ladder degenerate (lattice cases)
    }
    return std::nullopt;
}

bool embed_instance(UPolygonInstance& inst, const PointSet& patch, unsigned attempts) {
    const auto h = embed_homothety(loose_set(inst.hull), patch, attempts);
    if (!h) return false;
    for (auto& p : inst.hull) p = apply(*h, p);
    for (auto& p : inst.coloring.white) p = apply(*h, p);
    for (auto& p : inst.coloring.grey) p = apply(*h, p);

    const auto is_vertex = [&](const Point& p) {
        for (const auto& v : inst.hull)
            if (v == p) return true;
        return false;
    };
    std::vector<Point> interior;
    for (const auto& p : patch.points)
        if (!is_vertex(p) && hull_contains(inst.hull, p)) interior.push_back(p);
    inst.interior_lattice = make_point_set(patch.tag, interior);
    inst.embedded = true;
    return true;
}

} // namespace cyclotomo
