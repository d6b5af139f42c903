// Cross ratios on the extended real line and the finite forbidden set of
// cross-ratio values attached to a symmetry order n.
#pragma once

#include <array>
#include <string>
#include <unordered_set>
#include <vector>

#include "cyclotomo/cyclotomic.hpp"
#include "cyclotomo/fieldtag.hpp"
#include "cyclotomo/slope.hpp"

namespace cyclotomo {

/// <t1,t2,t3,t4> = (t3-t1)(t4-t2) / ((t3-t2)(t4-t1)), with the factors
/// containing an infinite entry cancelling to 1. The four values must be
/// pairwise distinct and at most one may be infinite.
CycNum cross_ratio(const Slope& t1, const Slope& t2, const Slope& t3, const Slope& t4);

/// Index quadruple (k1,k2,k3,k4) modulo m with
/// k3 < k1 <= k2 < k4 <= m-1 and k1 + k2 = k3 + k4.
struct QuadrupleIndex {
    unsigned long m = 0;
    unsigned long k1 = 0, k2 = 0, k3 = 0, k4 = 0;

    void validate() const;
    bool operator<(const QuadrupleIndex& o) const {
        return std::array{k1, k2, k3, k4} < std::array{o.k1, o.k2, o.k3, o.k4};
    }
};

/// (1 - z^k1)(1 - z^k2) / ((1 - z^k3)(1 - z^k4)) for z = zeta_m.
/// Real and positive whenever the index constraints hold; equals the sine
/// quotient sin(k1 pi/m) sin(k2 pi/m) / (sin(k3 pi/m) sin(k4 pi/m)).
CycNum quadruple_value(const QuadrupleIndex& q);

struct CrossRatioEntry {
    CycNum value;          // expressed at conductor N
    QuadrupleIndex witness; // lexicographically smallest producing index
    double approx = 0.0;
};

/// The forbidden set for symmetry order n: all quadruple values at conductor
/// m = lcm(2n,12) that lie in the real subfield of Q(zeta_N), deduplicated
/// and sorted ascending.
class CrossRatioSet {
public:
    FieldTag tag;
    std::vector<CrossRatioEntry> entries;

    bool contains(const CycNum& v) const;
    std::size_t size() const { return entries.size(); }

    /// Membership keys at conductor N; built by the enumerator.
    const std::unordered_set<std::string>& keys() const { return keys_; }
    void rebuild_keys();

private:
    std::unordered_set<std::string> keys_;
};

CrossRatioSet forbidden_cross_ratios(const FieldTag& tag);

/// Orbit of c under the six permutation transforms
/// {c, 1/c, 1-c, 1/(1-c), (c-1)/c, c/(c-1)}, deduplicated in that order.
/// Requires c different from 0 and 1.
std::vector<CycNum> cross_ratio_orbit(const CycNum& c);

/// "a+b√d" for values in a quadratic real subfield, plain rationals as
/// "p/q", empty string when no such short form applies.
std::string pretty_quadratic(const CycNum& v);

} // namespace cyclotomo
