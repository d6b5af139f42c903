#include "cyclotomo/demo3d.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace cyclotomo {

namespace {

using Vec3 = std::array<double, 3>;

Vec3 sub(const Vec3& a, const Vec3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}
double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }
Vec3 scale(const Vec3& a, double s) { return {a[0] * s, a[1] * s, a[2] * s}; }

std::vector<Vec3> polytope_vertices() {
    const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    const double base[5][3] = {
        {1.0 / phi, 1.0 / phi, 3.0 + phi},
        {2.0 / phi, phi, 1.0 + 2.0 * phi},
        {1.0 / phi, phi * phi, 3.0 * phi - 1.0},
        {2.0 * phi - 1.0, 2.0, 2.0 + phi},
        {phi, 3.0, 2.0 * phi},
    };
    const double radius = std::sqrt(14.0 + 5.0 * phi);
    std::vector<Vec3> out;
    for (const auto& b : base)
        for (int rot = 0; rot < 3; ++rot) // even permutations = cyclic shifts
            for (int s = 0; s < 8; ++s) {
                Vec3 v;
                for (int i = 0; i < 3; ++i) {
                    const double c = b[(i + rot) % 3];
                    v[i] = ((s >> i) & 1 ? -c : c) / radius;
                }
                out.push_back(v);
            }
    return out;
}

std::vector<Vec3> normalized(std::vector<Vec3> dirs) {
    for (auto& d : dirs) d = scale(d, 1.0 / norm(d));
    return dirs;
}

std::vector<Vec3> fivefold_axes() {
    const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    return normalized(
        {{0, 1, phi}, {0, -1, phi}, {1, phi, 0}, {-1, phi, 0}, {phi, 0, 1}, {phi, 0, -1}});
}

std::vector<Vec3> threefold_axes() {
    const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    const double inv = 1.0 / phi;
    return normalized({{1, 1, 1},
                       {1, 1, -1},
                       {1, -1, 1},
                       {-1, 1, 1},
                       {0, inv, phi},
                       {0, -inv, phi},
                       {inv, phi, 0},
                       {-inv, phi, 0},
                       {phi, 0, inv},
                       {phi, 0, -inv}});
}

std::vector<Vec3> twofold_axes() {
    const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    const double a = 0.5, b = phi / 2.0, c = (phi + 1.0) / 2.0;
    std::vector<Vec3> v = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    const double forms[4][3] = {{a, b, c}, {a, -b, c}, {-a, b, c}, {a, b, -c}};
    for (const auto& f : forms)
        for (int rot = 0; rot < 3; ++rot)
            v.push_back({f[rot % 3], f[(rot + 1) % 3], f[(rot + 2) % 3]});
    return normalized(v);
}

std::vector<std::vector<std::size_t>> six_subsets(std::size_t n) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> pick(6);
    std::iota(pick.begin(), pick.end(), 0);
    if (n < 6) return out;
    while (true) {
        out.push_back(pick);
        std::size_t i = 6;
        bool advanced = false;
        while (i-- > 0) {
            if (pick[i] < n - 6 + i) { // position i may still move right
                ++pick[i];
                for (std::size_t j = i + 1; j < 6; ++j) pick[j] = pick[j - 1] + 1;
                advanced = true;
                break;
            }
        }
        if (!advanced) break;
    }
    return out;
}

bool in_general_position(const std::vector<Vec3>& dirs, double tol) {
    for (std::size_t i = 0; i < dirs.size(); ++i)
        for (std::size_t j = i + 1; j < dirs.size(); ++j)
            for (std::size_t k = j + 1; k < dirs.size(); ++k)
                if (std::abs(dot(dirs[i], cross(dirs[j], dirs[k]))) <= tol) return false;
    return true;
}

// partner of each vertex along u: exactly one other vertex on the same line
std::vector<int> matching_along(const std::vector<Vec3>& verts, const Vec3& u, double tol) {
    std::vector<int> partner(verts.size(), -1);
    for (std::size_t i = 0; i < verts.size(); ++i) {
        int found = -1;
        for (std::size_t j = 0; j < verts.size(); ++j) {
            if (i == j) continue;
            const Vec3 d = sub(verts[j], verts[i]);
            if (norm(cross(d, u)) <= tol * norm(d)) {
                if (found >= 0) return {}; // three vertices on a line
                found = int(j);
            }
        }
        if (found < 0) return {}; // unmatched vertex: not a U-polyhedron
        partner[i] = found;
    }
    return partner;
}

} // namespace

Demo3dReport demo_3d_upolyhedron(double tolerance) {
    Demo3dReport report;
    report.tolerance = tolerance;
    const auto verts = polytope_vertices();
    report.vertex_count = verts.size();

    struct Family {
        const char* name;
        std::vector<Vec3> axes;
    };
    const Family families[] = {
        {"fivefold-axes", fivefold_axes()},
        {"threefold-axes", threefold_axes()},
        {"twofold-axes", twofold_axes()},
    };

    for (const auto& family : families) {
        for (const auto& pick : six_subsets(family.axes.size())) {
            std::vector<Vec3> dirs;
            for (std::size_t i : pick) dirs.push_back(family.axes[i]);
            if (!in_general_position(dirs, tolerance)) continue;

            std::vector<std::vector<int>> partners;
            bool u_poly = true;
            for (const auto& u : dirs) {
                auto p = matching_along(verts, u, tolerance);
                if (p.empty()) {
                    u_poly = false;
                    break;
                }
                partners.push_back(std::move(p));
            }
            if (!u_poly) continue;

            // two-color the union of the six matchings
            std::vector<int> color(verts.size(), -1);
            bool bipartite = true;
            for (std::size_t start = 0; start < verts.size() && bipartite; ++start) {
                if (color[start] != -1) continue;
                color[start] = 0;
                std::vector<std::size_t> stack{start};
                while (!stack.empty() && bipartite) {
                    const std::size_t v = stack.back();
                    stack.pop_back();
                    for (const auto& p : partners) {
                        const std::size_t w = std::size_t(p[v]);
                        if (color[w] == -1) {
                            color[w] = 1 - color[v];
                            stack.push_back(w);
                        } else if (color[w] == color[v]) {
                            bipartite = false;
                            break;
                        }
                    }
                }
            }
            if (!bipartite) continue;

            // verify equal X-rays by clustering projections into lines
            bool xrays = true;
            for (const auto& u : dirs) {
                std::vector<int> line(verts.size(), -1);
                int lines = 0;
                for (std::size_t i = 0; i < verts.size(); ++i) {
                    if (line[i] != -1) continue;
                    line[i] = lines;
                    const Vec3 pi = sub(verts[i], scale(u, dot(verts[i], u)));
                    for (std::size_t j = i + 1; j < verts.size(); ++j) {
                        if (line[j] != -1) continue;
                        const Vec3 pj = sub(verts[j], scale(u, dot(verts[j], u)));
                        if (norm(sub(pi, pj)) <= 1e-7) line[j] = lines;
                    }
                    ++lines;
                }
                std::vector<int> balance(std::size_t(lines), 0);
                for (std::size_t i = 0; i < verts.size(); ++i)
                    balance[std::size_t(line[i])] += color[i] == 0 ? 1 : -1;
                for (int b : balance)
                    if (b != 0) {
                        xrays = false;
                        break;
                    }
                if (!xrays) break;
            }

            report.direction_family = family.name;
            report.general_position = true;
            report.u_polyhedron = true;
            report.white_count = std::size_t(std::count(color.begin(), color.end(), 0));
            report.grey_count = verts.size() - report.white_count;
            report.coloring_balanced = report.white_count == report.grey_count;
            report.xrays_match = xrays;
            report.directions.clear();
            for (const auto& d : dirs) report.directions.push_back(d);
            if (report.success()) return report;
        }
    }
    return report;
}

} // namespace cyclotomo
