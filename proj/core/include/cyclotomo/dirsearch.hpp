// Search for the largest slope set, containing the normalization anchors
// {0, 1, inf}, all of whose angle-ordered 4-subsets have a cross ratio inside
// the forbidden set. The maximum cardinality is the direction bound for the
// symmetry order; the magic number follows from it.
#pragma once

#include <string>
#include <vector>

#include "cyclotomo/crossratio.hpp"
#include "cyclotomo/fieldtag.hpp"
#include "cyclotomo/slope.hpp"

namespace cyclotomo {

struct SearchOptions {
    double budget_seconds = 300.0;
    bool allow_large = false; // required once lcm(2n,12) exceeds 600
};

struct SearchDiagnostics {
    unsigned long long tuples_checked = 0;
    unsigned long long nodes = 0;
    // 4-subsets failing the literal angle-ordered test but passing under a
    // cyclic rotation or reversal of the tuple; not used for the bound.
    unsigned long long rotation_only_accepts = 0;
    // c/(c-1) stays inside the set for every member c; this is what makes
    // the anchored normalization lossless.
    bool closed_under_rotation = false;
    bool seeded_with_regular = false;
};

struct BoundResult {
    FieldTag tag;
    unsigned bound = 0;       // reported direction bound
    unsigned search_max = 0;  // largest admissible set the search found
    std::vector<Slope> witness; // angle-ordered, attains search_max
    bool exhaustive = false;
    double elapsed_seconds = 0.0;
    bool matches_regular = false; // profile comparison, set when |witness| == N
    std::string note;
    SearchDiagnostics diag;
};

struct MagicResult {
    FieldTag tag;
    unsigned magic = 0;
    bool exhaustive = false;
    std::string note;
    BoundResult base;
};

/// {0, 1, inf} plus the three admissible placements of a fourth slope for
/// each forbidden value c: c/(c-1), (c-1)/c, 1/(1-c). Deduplicated exactly,
/// sorted by angle; finite values carried at conductor N.
std::vector<Slope> candidate_slopes(const CrossRatioSet& set);

/// Exhaustive anchored branch-and-bound over an explicit candidate pool.
BoundResult search_over_slopes(const FieldTag& tag, const CrossRatioSet& set,
                               std::vector<Slope> pool, const SearchOptions& opts = {});

BoundResult max_admissible_set(const FieldTag& tag, const SearchOptions& opts = {});

/// Direction bound + 1 except for n = 4, where the cross-ratio bound of 7 is
/// not attained by a direction system of the square lattice and the magic
/// number stays at 7.
MagicResult magic_number(const FieldTag& tag, const SearchOptions& opts = {});

/// Slopes tan(h*pi/N), h = 0..N-1, exactly, at conductor N (vertical maps
/// to the infinite slope); angle-ordered.
std::vector<Slope> regular_direction_slopes(const FieldTag& tag);

/// True when the multiset of cross ratios over all angle-ordered 4-subsets
/// of the witness equals that of the regular direction slopes.
bool witness_matches_regular(const FieldTag& tag, const std::vector<Slope>& witness);

} // namespace cyclotomo
