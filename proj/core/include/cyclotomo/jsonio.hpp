// JSON encodings of the toolkit's values and result records. Numbers that
// fit 64 bits are emitted as JSON integers, anything larger as a decimal
// string; parsing accepts both.
#pragma once

#include <string>

#include "json.hpp"

#include "cyclotomo/construct.hpp"
#include "cyclotomo/crossratio.hpp"
#include "cyclotomo/demo3d.hpp"
#include "cyclotomo/dirsearch.hpp"
#include "cyclotomo/modelset.hpp"
#include "cyclotomo/tomo.hpp"

namespace cyclotomo {

using Json = nlohmann::json;

Json rational_json(const Rational& q);
Rational rational_from_json(const Json& j);

Json cyc_json(const CycNum& v); // {"m": ..., "coeffs": [[num, den], ...]}
CycNum cyc_from_json(const Json& j);

Json slope_json(const Slope& s); // "inf" or the cyclotomic encoding
Slope slope_from_json(const Json& j);

Json cross_ratio_set_json(const CrossRatioSet& set);
Json bound_json(const BoundResult& r);
Json magic_json(const MagicResult& r);

Json window_json(const WindowSpec& w);
WindowSpec window_from_json(const Json& j);
Json patch_json(const Patch& p);
Patch patch_from_json(const Json& j);

Json xray_json(const XRayTable& t);
Json collision_json(const CollisionReport& r);
Json instance_json(const UPolygonInstance& inst);
Json demo3d_json(const Demo3dReport& r);

/// Canonical serialization used by every CLI verb: two-space indentation,
/// sorted keys, trailing newline. Parsing and re-dumping is byte-identical.
std::string dump_json(const Json& j);

} // namespace cyclotomo
