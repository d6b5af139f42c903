// Finite patches of n-cyclotomic model sets by cut-and-project: integer
// combinations of the powers of zeta_n whose physical embedding lies in a
// disc and whose algebraic-conjugate (star map) image lies in a window.
// n = 3 and n = 4 are the lattice cases with no internal filter.
#pragma once

#include <utility>
#include <vector>

#include "cyclotomo/geometry.hpp"

namespace cyclotomo {

struct WindowSpec {
    enum class Shape { Disc, Ngon };
    Shape shape = Shape::Disc;
    Rational radius = Rational(1);  // disc radius or ngon circumradius
    unsigned sides = 0;             // ngon only, >= 3
    Rational rotation = Rational(0); // ngon only, in turns
    std::pair<Rational, Rational> shift{Rational(0), Rational(0)};

    static WindowSpec disc(const Rational& r);
    static WindowSpec ngon(unsigned sides, const Rational& r, const Rational& rotation_turns);
};

struct PatchSpec {
    FieldTag tag;
    Rational physical_radius = Rational(3);
    WindowSpec window;
    unsigned long star_exponent = 1;
};

struct Patch {
    PatchSpec spec;
    std::vector<std::vector<long>> coords; // integer coefficients over 1..zeta^{phi-1}
    unsigned long boundary_hits = 0;       // star images landing on the window boundary

    PointSet to_point_set() const;
};

/// Standard internal-space exponents: 2, 3 and 5 for n = 5, 8, 12; the
/// smallest valid exponent otherwise (unused in the lattice cases).
unsigned long default_star_exponent(unsigned long n);

/// zeta_n -> zeta_n^e on an element of Q(zeta_n). Requires gcd(e, n) = 1.
CycNum star_map(const CycNum& x, unsigned long e);

/// -1 outside, 0 on the boundary, +1 in the interior (window is closed).
int window_classify(const WindowSpec& w, const CycNum& p);
inline bool window_contains(const WindowSpec& w, const CycNum& p) {
    return window_classify(w, p) >= 0;
}

/// Exhaustive coefficient-box enumeration with exact boundary decisions.
/// Throws when the search box would exceed ten million candidates.
Patch generate_patch(const PatchSpec& spec);

} // namespace cyclotomo
