// Discrete parallel X-rays of finite planar sets, U-polygon verification,
// and a brute-force uniqueness oracle over the convex subsets of a patch.
#pragma once

#include <utility>
#include <vector>

#include "cyclotomo/geometry.hpp"

namespace cyclotomo {

struct XRayTable {
    Direction direction;
    // line key -> positive count, sorted ascending by key value
    std::vector<std::pair<CycNum, unsigned>> rows;

    unsigned long total() const;
    bool operator==(const XRayTable& o) const;
};

XRayTable xray(const PointSet& f, const Direction& d);

bool xrays_equal(const PointSet& f, const PointSet& g, const std::vector<Direction>& dirs);

/// Every line through a vertex in a listed direction must meet another
/// vertex. The vertices must form a nondegenerate convex polygon.
bool verify_u_polygon(const std::vector<Point>& vertices, const std::vector<Direction>& dirs);

struct CollisionReport {
    bool found = false;
    PointSet first, second; // distinct convex subsets with equal X-rays
    std::vector<Direction> directions;
    unsigned long long subsets_examined = 0;
    bool exhaustive = false;
    double elapsed_seconds = 0.0;
};

/// Enumerates every convex subset of the patch with at most max_subset_size
/// points (via their vertex sets in strictly convex position), fingerprints
/// the X-rays in the given directions, and reports the first collision
/// between distinct subsets. Patch size is capped at 40 points.
CollisionReport uniqueness_oracle(const PointSet& patch, const std::vector<Direction>& dirs,
                                  unsigned max_subset_size = 12, double budget_seconds = 60.0);

} // namespace cyclotomo
