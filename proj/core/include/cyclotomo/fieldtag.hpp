#pragma once

#include <numeric>
#include <stdexcept>

namespace cyclotomo {

/// Field parameters attached to a symmetry order n: N = lcm(n,2) is the
/// rotation order, m = lcm(2n,12) the working conductor. N | m and 4 | m.
struct FieldTag {
    unsigned long n = 3;
    unsigned long N = 6;
    unsigned long m = 12;

    static FieldTag for_symmetry(unsigned long n) {
        if (n < 3) throw std::invalid_argument("FieldTag: n must be at least 3");
        FieldTag t;
        t.n = n;
        t.N = std::lcm(n, 2ul);
        t.m = std::lcm(2 * n, 12ul);
        return t;
    }
};

} // namespace cyclotomo
