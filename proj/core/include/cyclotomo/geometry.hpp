// Exact planar geometry: points with cyclotomic coordinates, directions,
// line keys, convex hulls and convexity-in-patch tests. The plane is the
// complex plane; conductors are kept divisible by 4 so that real and
// imaginary parts stay inside the field.
#pragma once

#include <optional>
#include <vector>

#include "cyclotomo/cyclotomic.hpp"
#include "cyclotomo/fieldtag.hpp"
#include "cyclotomo/slope.hpp"

namespace cyclotomo {

class Point {
public:
    Point() : z_(CycNum(0).lifted(4)) {}
    explicit Point(const CycNum& z) : z_(z.conductor() % 4 == 0 ? z : z.lifted(std::lcm(z.conductor(), 4ul))) {}

    const CycNum& z() const { return z_; }
    CycNum re() const;
    CycNum im() const;

    bool operator==(const Point& o) const { return z_ == o.z_; }
    bool operator!=(const Point& o) const { return !(*this == o); }
    std::string key() const { return z_.key(); }

    Point operator+(const Point& o) const { return Point(z_ + o.z_); }
    Point operator-(const Point& o) const { return Point(z_ - o.z_); }

private:
    CycNum z_;
};

/// A nonzero planar direction; scale-canonicalized by the first nonzero
/// coefficient so rational multiples compare equal.
class Direction {
public:
    explicit Direction(const CycNum& w);
    const CycNum& w() const { return w_; }
    bool operator==(const Direction& o) const { return w_ == o.w_; }
    std::string key() const { return w_.key(); }

private:
    CycNum w_;
};

struct PointSet {
    FieldTag tag;
    std::vector<Point> points; // deduplicated, in insertion order

    bool contains(const Point& p) const;
    std::size_t size() const { return points.size(); }
};

PointSet make_point_set(const FieldTag& tag, std::vector<Point> pts);

/// Slope of the direction: infinity for vertical, Im(w)/Re(w) otherwise.
Slope slope_of(const Direction& d);

/// Lines parallel to d are the fibers of this real value; two points share
/// a key exactly when they lie on one line in direction d.
CycNum line_key(const Point& p, const Direction& d);

/// Orientation of the triple: +1 left turn, -1 right turn, 0 collinear.
int orientation(const Point& a, const Point& b, const Point& c);

/// Counterclockwise list of extreme points, starting at the lexicographic
/// minimum; collinear non-extreme points are excluded. Degenerate inputs
/// yield hulls of size 0, 1 or 2.
std::vector<Point> convex_hull(const std::vector<Point>& pts);

/// Closed point-in-convex-polygon test against a hull vertex list.
bool hull_contains(const std::vector<Point>& hull, const Point& p);

/// C = conv(C) intersected with the patch. The empty set and singletons
/// qualify. Throws if s is not a subset of the patch.
bool is_convex_subset(const PointSet& s, const PointSet& patch);

} // namespace cyclotomo
