#include "cyclotomo/slope.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cyclotomo {

const CycNum& Slope::value() const {
    if (inf_) throw std::domain_error("Slope::value: slope is infinite");
    return v_;
}

bool Slope::operator==(const Slope& o) const {
    if (inf_ || o.inf_) return inf_ == o.inf_;
    return v_ == o.v_;
}

double Slope::approx() const { return inf_ ? HUGE_VAL : v_.approx_real(); }

bool angle_less(const Slope& a, const Slope& b) {
    // angle(s) = arctan(s) in [0, pi/2) for s >= 0, pi/2 for infinity,
    // pi + arctan(s) in (pi/2, pi) for s < 0
    const int cls_a = a.is_infinite() ? 1 : (a.value().sign() >= 0 ? 0 : 2);
    const int cls_b = b.is_infinite() ? 1 : (b.value().sign() >= 0 ? 0 : 2);
    if (cls_a != cls_b) return cls_a < cls_b;
    if (cls_a == 1) return false;
    return real_compare(a.value(), b.value()) < 0;
}

std::vector<Slope> angle_order(std::vector<Slope> slopes) {
    std::sort(slopes.begin(), slopes.end(),
              [](const Slope& a, const Slope& b) { return angle_less(a, b); });
    for (std::size_t i = 1; i < slopes.size(); ++i)
        if (slopes[i - 1] == slopes[i])
            throw std::invalid_argument("angle_order: slopes must be pairwise distinct");
    return slopes;
}

} // namespace cyclotomo
