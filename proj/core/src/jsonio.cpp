#include "cyclotomo/jsonio.hpp"

#include <stdexcept>

namespace cyclotomo {

namespace {

Json int_json(const Integer& v) {
    if (v.fits_slong_p()) return Json(v.get_si());
    return Json(v.get_str());
}

Integer int_from_json(const Json& j) {
    if (j.is_number_integer()) return Integer(static_cast<long>(j.get<long long>()));
    if (j.is_string()) return Integer(j.get<std::string>());
    throw std::invalid_argument("expected an integer or a decimal string");
}

} // namespace

Json rational_json(const Rational& q) {
    return Json::array({int_json(q.get_num()), int_json(q.get_den())});
}

Rational rational_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2)
        throw std::invalid_argument("expected a [numerator, denominator] pair");
    Rational q(int_from_json(j[0]), int_from_json(j[1]));
    mpq_canonicalize(q.get_mpq_t());
    return q;
}

Json cyc_json(const CycNum& v) {
    Json coeffs = Json::array();
    for (const auto& c : v.coeffs()) coeffs.push_back(rational_json(c));
    return Json{{"m", v.conductor()}, {"coeffs", coeffs}};
}

CycNum cyc_from_json(const Json& j) {
    const unsigned long m = j.at("m").get<unsigned long>();
    std::vector<Rational> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.push_back(rational_from_json(c));
    return CycNum(m, std::move(coeffs));
}

Json slope_json(const Slope& s) {
    if (s.is_infinite()) return Json("inf");
    return cyc_json(s.value());
}

Slope slope_from_json(const Json& j) {
    if (j.is_string() && j.get<std::string>() == "inf") return Slope::infinity();
    return Slope(cyc_from_json(j));
}

Json cross_ratio_set_json(const CrossRatioSet& set) {
    Json values = Json::array();
    for (const auto& e : set.entries) {
        Json v = cyc_json(e.value);
        v["approx"] = e.approx;
        const std::string pretty = pretty_quadratic(e.value);
        if (!pretty.empty()) v["pretty"] = pretty;
        v["witness"] = {e.witness.k1, e.witness.k2, e.witness.k3, e.witness.k4};
        values.push_back(std::move(v));
    }
    return Json{{"n", set.tag.n},
                {"N", set.tag.N},
                {"m", set.tag.m},
                {"count", set.size()},
                {"values", values}};
}

namespace {

Json witness_json(const std::vector<Slope>& witness) {
    Json w = Json::array();
    for (const auto& s : witness) w.push_back(slope_json(s));
    return w;
}

Json diag_json(const SearchDiagnostics& d) {
    return Json{{"tuples_checked", d.tuples_checked},
                {"nodes", d.nodes},
                {"rotation_only_accepts", d.rotation_only_accepts},
                {"closed_under_rotation", d.closed_under_rotation},
                {"seeded_with_regular", d.seeded_with_regular}};
}

} // namespace

Json bound_json(const BoundResult& r) {
    Json j{{"n", r.tag.n},
           {"bound", r.bound},
           {"search_max", r.search_max},
           {"exhaustive", r.exhaustive},
           {"witness", witness_json(r.witness)},
           {"matches_regular", r.matches_regular},
           {"elapsed_s", r.elapsed_seconds},
           {"diagnostics", diag_json(r.diag)}};
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

Json magic_json(const MagicResult& r) {
    Json j = bound_json(r.base);
    j["magic"] = r.magic;
    j["exhaustive"] = r.exhaustive;
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

Json window_json(const WindowSpec& w) {
    Json j{{"shape", w.shape == WindowSpec::Shape::Disc ? "disc" : "ngon"},
           {"radius", rational_json(w.radius)},
           {"shift", {rational_json(w.shift.first), rational_json(w.shift.second)}}};
    if (w.shape == WindowSpec::Shape::Ngon) {
        j["sides"] = w.sides;
        j["rotation"] = rational_json(w.rotation);
    }
    return j;
}

WindowSpec window_from_json(const Json& j) {
    WindowSpec w;
    const std::string shape = j.at("shape").get<std::string>();
    if (shape == "disc") {
        w = WindowSpec::disc(rational_from_json(j.at("radius")));
    } else if (shape == "ngon") {
        w = WindowSpec::ngon(j.at("sides").get<unsigned>(), rational_from_json(j.at("radius")),
                             j.contains("rotation") ? rational_from_json(j.at("rotation"))
                                                    : Rational(0));
    } else {
        throw std::invalid_argument("unknown window shape: " + shape);
    }
    if (j.contains("shift")) {
        w.shift.first = rational_from_json(j.at("shift")[0]);
        w.shift.second = rational_from_json(j.at("shift")[1]);
    }
    return w;
}

Json patch_json(const Patch& p) {
    Json points = Json::array();
    for (const auto& c : p.coords) {
        Json row = Json::array();
        for (long v : c) row.push_back(v);
        points.push_back(std::move(row));
    }
    return Json{{"n", p.spec.tag.n},
                {"radius", rational_json(p.spec.physical_radius)},
                {"window", window_json(p.spec.window)},
                {"star", p.spec.star_exponent},
                {"boundary_hits", p.boundary_hits},
                {"points", points}};
}

Patch patch_from_json(const Json& j) {
    Patch p;
    p.spec.tag = FieldTag::for_symmetry(j.at("n").get<unsigned long>());
    p.spec.physical_radius = rational_from_json(j.at("radius"));
    if (j.contains("window")) p.spec.window = window_from_json(j.at("window"));
    if (j.contains("star")) p.spec.star_exponent = j.at("star").get<unsigned long>();
    if (j.contains("boundary_hits")) p.boundary_hits = j.at("boundary_hits").get<unsigned long>();
    const std::size_t deg = totient(p.spec.tag.n);
    for (const auto& row : j.at("points")) {
        std::vector<long> c;
        for (const auto& v : row) c.push_back(v.get<long>());
        if (c.size() != deg)
            throw std::invalid_argument("patch point has the wrong coefficient count");
        p.coords.push_back(std::move(c));
    }
    return p;
}

Json xray_json(const XRayTable& t) {
    Json rows = Json::array();
    for (const auto& [key, count] : t.rows)
        rows.push_back(Json{{"key", cyc_json(key)}, {"count", count}});
    return Json{{"direction", cyc_json(t.direction.w())}, {"rows", rows}, {"total", t.total()}};
}

namespace {

Json point_array(const std::vector<Point>& pts) {
    Json a = Json::array();
    for (const auto& p : pts) a.push_back(cyc_json(p.z()));
    return a;
}

} // namespace

Json collision_json(const CollisionReport& r) {
    Json dirs = Json::array();
    for (const auto& d : r.directions) dirs.push_back(cyc_json(d.w()));
    Json j{{"found", r.found},
           {"directions", dirs},
           {"subsets_examined", r.subsets_examined},
           {"exhaustive", r.exhaustive},
           {"elapsed_s", r.elapsed_seconds}};
    if (r.found) {
        j["first"] = point_array(r.first.points);
        j["second"] = point_array(r.second.points);
    }
    return j;
}

Json instance_json(const UPolygonInstance& inst) {
    Json dirs = Json::array();
    for (const auto& d : inst.directions) dirs.push_back(cyc_json(d.w()));
    Json j{{"n", inst.tag.n},
           {"N", inst.tag.N},
           {"vertices", point_array(inst.hull)},
           {"directions", dirs},
           {"white", point_array(inst.coloring.white)},
           {"grey", point_array(inst.coloring.grey)},
           {"coloring_strategy", inst.coloring.strategy},
           {"embedded", inst.embedded}};
    if (inst.embedded) j["interior"] = point_array(inst.interior_lattice.points);
    return j;
}

Json demo3d_json(const Demo3dReport& r) {
    Json dirs = Json::array();
    for (const auto& d : r.directions) dirs.push_back(Json{d[0], d[1], d[2]});
    Json j{{"vertex_count", r.vertex_count},
           {"tolerance", r.tolerance},
           {"general_position", r.general_position},
           {"u_polyhedron", r.u_polyhedron},
           {"coloring_balanced", r.coloring_balanced},
           {"xrays_match", r.xrays_match},
           {"white", r.white_count},
           {"grey", r.grey_count},
           {"success", r.success()},
           {"directions", dirs}};
    j["direction_family"] =
        r.direction_family.empty() ? Json("not identified") : Json(r.direction_family);
    return j;
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

} // namespace cyclotomo
