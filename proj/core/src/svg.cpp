#include "cyclotomo/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace cyclotomo {

namespace {

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

struct Frame {
    double ox = 0, oy = 0, scale = 1; // world -> canvas
    double width = 0, height = 0;

    std::pair<double, double> map(double x, double y) const {
        return {(x - ox) * scale + width / 2, height / 2 - (y - oy) * scale};
    }
};

Frame fit(const std::vector<std::pair<double, double>>& pts, const RenderSpec& spec) {
    Frame f;
    f.width = spec.width;
    f.height = spec.height;
    if (pts.empty()) {
        f.scale = 1;
        return f;
    }
    double xmin = pts[0].first, xmax = xmin, ymin = pts[0].second, ymax = ymin;
    for (const auto& [x, y] : pts) {
        xmin = std::min(xmin, x);
        xmax = std::max(xmax, x);
        ymin = std::min(ymin, y);
        ymax = std::max(ymax, y);
    }
    f.ox = (xmin + xmax) / 2;
    f.oy = (ymin + ymax) / 2;
    if (spec.scale > 0) {
        f.scale = 1.0 / spec.scale;
    } else {
        const double spanx = std::max(xmax - xmin, 1e-9);
        const double spany = std::max(ymax - ymin, 1e-9);
        f.scale = 0.9 * std::min(spec.width / spanx, spec.height / spany);
    }
    return f;
}

std::pair<double, double> approx_xy(const Point& p) {
    double re, im;
    p.z().approx_complex(re, im);
    return {re, im};
}

void open_svg(std::ostringstream& os, const RenderSpec& spec) {
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(spec.width)
       << "\" height=\"" << num(spec.height) << "\" viewBox=\"0 0 " << num(spec.width) << " "
       << num(spec.height) << "\">\n"
       << "<rect width=\"100%\" height=\"100%\" fill=\"" << spec.background << "\"/>\n";
}

void emit_circle(std::ostringstream& os, const Frame& f, double x, double y, double r,
                 const std::string& fill, const std::string& stroke) {
    const auto [cx, cy] = f.map(x, y);
    os << "<circle cx=\"" << num(cx) << "\" cy=\"" << num(cy) << "\" r=\"" << num(r)
       << "\" fill=\"" << fill << "\" stroke=\"" << stroke << "\" stroke-width=\"1\"/>\n";
}

} // namespace

std::string render_svg(const PointSet& points, const RenderSpec& spec) {
    std::ostringstream os;
    open_svg(os, spec);
    std::vector<std::pair<double, double>> xs;
    for (const auto& p : points.points) xs.push_back(approx_xy(p));
    const Frame f = fit(xs, spec);
    os << "<g id=\"points\">\n";
    for (const auto& [x, y] : xs) emit_circle(os, f, x, y, 3.0, spec.point_fill, spec.point_fill);
    os << "</g>\n</svg>\n";
    return os.str();
}

std::string render_svg(const UPolygonInstance& inst, const RenderSpec& spec) {
    std::ostringstream os;
    open_svg(os, spec);

    std::vector<std::pair<double, double>> all;
    for (const auto& p : inst.hull) all.push_back(approx_xy(p));
    for (const auto& p : inst.interior_lattice.points) all.push_back(approx_xy(p));
    const Frame f = fit(all, spec);

    // hull outline
    os << "<polygon points=\"";
    for (std::size_t i = 0; i < inst.hull.size(); ++i) {
        const auto [x, y] = approx_xy(inst.hull[i]);
        const auto [cx, cy] = f.map(x, y);
        os << (i ? " " : "") << num(cx) << "," << num(cy);
    }
    os << "\" fill=\"none\" stroke=\"#404040\" stroke-width=\"1.5\"/>\n";

    if (spec.show_directions) {
        // direction fan through the centroid
        double gx = 0, gy = 0;
        for (const auto& [x, y] : all) {
            gx += x;
            gy += y;
        }
        if (!all.empty()) {
            gx /= double(all.size());
            gy /= double(all.size());
        }
        const double len = 0.45 * std::min(spec.width, spec.height) / f.scale;
        os << "<g id=\"directions\" stroke=\"" << spec.direction_stroke
           << "\" stroke-width=\"0.75\">\n";
        for (const auto& d : inst.directions) {
            double re, im;
            d.w().approx_complex(re, im);
            const double n = std::hypot(re, im);
            const auto [x1, y1] = f.map(gx - len * re / n, gy - len * im / n);
            const auto [x2, y2] = f.map(gx + len * re / n, gy + len * im / n);
            os << "<line x1=\"" << num(x1) << "\" y1=\"" << num(y1) << "\" x2=\"" << num(x2)
               << "\" y2=\"" << num(y2) << "\"/>\n";
        }
        os << "</g>\n";
    }

    os << "<g id=\"interior\">\n";
    for (const auto& p : inst.interior_lattice.points) {
        const auto [x, y] = approx_xy(p);
        emit_circle(os, f, x, y, 3.0, spec.interior_fill, spec.point_fill);
    }
    os << "</g>\n<g id=\"white\">\n";
    for (const auto& p : inst.coloring.white) {
        const auto [x, y] = approx_xy(p);
        emit_circle(os, f, x, y, 4.5, spec.white_fill, spec.point_fill);
    }
    os << "</g>\n<g id=\"grey\">\n";
    for (const auto& p : inst.coloring.grey) {
        const auto [x, y] = approx_xy(p);
        emit_circle(os, f, x, y, 4.5, spec.grey_fill, spec.point_fill);
    }
    os << "</g>\n</svg>\n";
    return os.str();
}

} // namespace cyclotomo
