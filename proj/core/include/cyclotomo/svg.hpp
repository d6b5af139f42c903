#pragma once

#include <string>

#include "cyclotomo/construct.hpp"

namespace cyclotomo {

struct RenderSpec {
    double width = 800;
    double height = 800;
    double scale = 0; // units per pixel; 0 fits the content
    std::string background = "#ffffff";
    std::string point_fill = "#303030";
    std::string white_fill = "#ffffff";
    std::string grey_fill = "#808080";
    std::string interior_fill = "#9ecae1";
    std::string direction_stroke = "#c03030";
    bool show_directions = true;
};

/// Deterministic standalone SVG: two renders of equal input are
/// byte-identical. Coordinates carry 12 significant digits.
std::string render_svg(const PointSet& points, const RenderSpec& spec = {});
std::string render_svg(const UPolygonInstance& inst, const RenderSpec& spec = {});

} // namespace cyclotomo
