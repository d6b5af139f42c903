// Numeric 3D check: the 120-vertex great rhombicosidodecahedron, inscribed
// in the unit sphere, is a U-polyhedron for six suitable axes in general
// position, and its vertices admit a two-coloring with equal X-rays.
#pragma once

#include <array>
#include <string>
#include <vector>

namespace cyclotomo {

struct Demo3dReport {
    double tolerance = 1e-9;
    std::size_t vertex_count = 0;
    std::string direction_family; // family that passed, empty if none did
    bool general_position = false;
    bool u_polyhedron = false;
    bool coloring_balanced = false;
    bool xrays_match = false;
    std::size_t white_count = 0;
    std::size_t grey_count = 0;
    std::vector<std::array<double, 3>> directions;

    bool success() const {
        return vertex_count == 120 && general_position && u_polyhedron && coloring_balanced &&
               xrays_match;
    }
};

Demo3dReport demo_3d_upolyhedron(double tolerance = 1e-9);

} // namespace cyclotomo
