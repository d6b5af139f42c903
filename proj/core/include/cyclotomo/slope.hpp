#pragma once

#include <string>
#include <vector>

#include "cyclotomo/cyclotomic.hpp"

namespace cyclotomo {

/// A point of the extended real line: a real cyclotomic value or infinity.
/// Represents the slope of a planar direction.
class Slope {
public:
    Slope() : inf_(true) {}
    explicit Slope(CycNum v) : inf_(false), v_(std::move(v)) {}
    static Slope infinity() { return Slope(); }
    static Slope of_long(long v) { return Slope(CycNum(v)); }

    bool is_infinite() const { return inf_; }
    const CycNum& value() const;

    bool operator==(const Slope& o) const;
    bool operator!=(const Slope& o) const { return !(*this == o); }

    std::string key() const { return inf_ ? "inf" : v_.key(); }
    /// Floating slope; infinity maps to +HUGE_VAL.
    double approx() const;

private:
    bool inf_;
    CycNum v_;
};

/// Strict order by angle in [0, pi): finite nonnegative slopes ascending,
/// then infinity, then negative slopes ascending.
bool angle_less(const Slope& a, const Slope& b);

/// Sorts by angle; throws std::invalid_argument on duplicates.
std::vector<Slope> angle_order(std::vector<Slope> slopes);

} // namespace cyclotomo
