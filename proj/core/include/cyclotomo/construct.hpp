// The explicit U-polygon configuration with N directions: a regular N-gon
// with N translates attached edge-to-edge, its two-coloring with equal
// X-rays, and the homothety embedding into a model-set patch.
#pragma once

#include <optional>
#include <string>

#include "cyclotomo/modelset.hpp"
#include "cyclotomo/tomo.hpp"

namespace cyclotomo {

struct Coloring {
    std::vector<Point> white, grey;
    std::string strategy; // "alternation" or "matching"
};

struct UPolygonInstance {
    FieldTag tag;
    std::vector<Point> hull;           // ccw vertices of the U-polygon
    std::vector<Direction> directions; // N pairwise nonparallel directions
    Coloring coloring;
    PointSet interior_lattice; // patch points inside the hull, after embedding
    bool embedded = false;
};

/// z -> lambda * z + t with positive real lambda.
struct Homothety {
    CycNum lambda;
    CycNum t;
};

Point apply(const Homothety& h, const Point& p);

/// Vertices zeta_N^k of the regular N-gon plus the N translates across its
/// edges (translation v_k + v_{k+1}); the hull of the union is a U-polygon
/// for the N directions e^{h pi i / N}. Verified exactly on construction.
UPolygonInstance build_regular_upolygon(const FieldTag& tag);

/// Two-coloring of the hull with equal X-rays in all listed directions:
/// alternation around the hull first, per-line bipartite matching as the
/// fallback. Throws if no valid coloring exists.
Coloring color_vertices(const std::vector<Point>& hull, const std::vector<Direction>& dirs);

/// Searches scalars from a ladder of integers times powers of the scaling
/// unit of the field, and translations anchored on patch points, accepting
/// when every image point lies in the patch.
std::optional<Homothety> embed_homothety(const PointSet& f, const PointSet& patch,
                                         unsigned attempts = 20000);

/// Applies an embedding found by embed_homothety to the instance and fills
/// interior_lattice with the patch points inside the hull. Returns false if
/// no embedding was found within the attempt budget.
bool embed_instance(UPolygonInstance& inst, const PointSet& patch, unsigned attempts = 20000);

} // namespace cyclotomo
