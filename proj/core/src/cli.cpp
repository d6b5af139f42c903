#include "cyclotomo/cli.hpp"

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "cyclotomo/jsonio.hpp"
#include "cyclotomo/svg.hpp"

namespace cyclotomo {

namespace {

Rational parse_rational(const std::string& s) {
    Rational q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("not a rational: '" + s + "'");
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator: '" + s + "'");
    mpq_canonicalize(q.get_mpq_t());
    return q;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

WindowSpec parse_window(const std::string& s) {
    const auto parts = split(s, ':');
    if (parts.size() == 2 && parts[0] == "disc") return WindowSpec::disc(parse_rational(parts[1]));
    if ((parts.size() == 3 || parts.size() == 4) && parts[0] == "ngon")
        return WindowSpec::ngon(static_cast<unsigned>(std::stoul(parts[1])),
                                parse_rational(parts[2]),
                                parts.size() == 4 ? parse_rational(parts[3]) : Rational(0));
    throw std::invalid_argument("window must be disc:<r> or ngon:<k>:<r>[:<rot>]");
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    return Json::parse(in);
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write '" + path + "'");
    out << content;
}

Direction direction_from_coeffs(const std::string& csv, unsigned long n) {
    const std::size_t deg = totient(n);
    std::vector<Rational> coeffs(deg, Rational(0));
    const auto parts = split(csv, ',');
    if (parts.size() > deg)
        throw std::invalid_argument("direction has more coefficients than the field degree");
    for (std::size_t i = 0; i < parts.size(); ++i) coeffs[i] = parse_rational(parts[i]);
    return Direction(CycNum(n, std::move(coeffs)));
}

} // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact toolkit for the discrete tomography of cyclotomic point sets"};
    app.require_subcommand(0, 1);

    unsigned long n = 3;
    long budget = 300;
    bool allow_large = false;
    std::string out_file, svg_file, json_file;
    std::string window_arg, shift_arg, star_arg, radius_arg;
    std::string points_file, dirs_file, direction_csv;
    unsigned max_size = 12;
    long vu_budget = 60;
    double tolerance = 1e-9;

    auto* c_set = app.add_subcommand("cross-ratio-set", "forbidden cross-ratio values");
    c_set->add_option("--n", n, "symmetry order (>= 3)")->required();
    c_set->add_option("--out", out_file, "also write the JSON to a file");

    auto* c_bound = app.add_subcommand("bound", "direction bound via exhaustive search");
    c_bound->add_option("--n", n)->required();
    c_bound->add_option("--budget-seconds", budget);
    c_bound->add_flag("--allow-large", allow_large, "permit conductors above 600");

    auto* c_magic = app.add_subcommand("magic", "magic number of the symmetry order");
    c_magic->add_option("--n", n)->required();
    c_magic->add_option("--budget-seconds", budget);

    auto* c_upoly = app.add_subcommand("upolygon", "build and verify the N-direction instance");
    c_upoly->add_option("--n", n)->required();
    c_upoly->add_option("--svg", svg_file, "write an SVG rendering");
    c_upoly->add_option("--json", json_file, "also write the JSON to a file");

    auto* c_patch = app.add_subcommand("patch", "cut-and-project patch generation");
    c_patch->add_option("--n", n)->required();
    c_patch->add_option("--radius", radius_arg, "physical radius (rational)")->required();
    c_patch->add_option("--window", window_arg, "disc:<r> or ngon:<k>:<r>[:<rot>]");
    c_patch->add_option("--shift", shift_arg, "internal shift <q>,<q>");
    c_patch->add_option("--star", star_arg, "star exponent (coprime to n)");
    c_patch->add_option("--out", out_file, "output file")->required();

    auto* c_xray = app.add_subcommand("xray", "X-ray table of a stored point set");
    c_xray->add_option("--points", points_file)->required();
    c_xray->add_option("--direction", direction_csv, "integer coefficients over the power basis")
        ->required();

    auto* c_vu = app.add_subcommand("verify-uniqueness",
                                    "search for equal-X-ray convex subset pairs");
    c_vu->add_option("--points", points_file)->required();
    c_vu->add_option("--directions", dirs_file)->required();
    c_vu->add_option("--max-size", max_size);
    c_vu->add_option("--budget-seconds", vu_budget);

    auto* c_demo = app.add_subcommand("demo3d", "120-vertex polyhedron check");
    c_demo->add_option("--tolerance", tolerance);

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n" << app.help();
        return 2;
    }

    try {
        if (c_set->parsed()) {
            const auto set = forbidden_cross_ratios(FieldTag::for_symmetry(n));
            const std::string doc = dump_json(cross_ratio_set_json(set));
            out << doc;
            if (!out_file.empty()) write_file(out_file, doc);
            return 0;
        }
        if (c_bound->parsed()) {
            SearchOptions opts;
            opts.budget_seconds = double(budget);
            opts.allow_large = allow_large;
            const auto r = max_admissible_set(FieldTag::for_symmetry(n), opts);
            out << dump_json(bound_json(r));
            return 0;
        }
        if (c_magic->parsed()) {
            SearchOptions opts;
            opts.budget_seconds = double(budget);
            const auto r = magic_number(FieldTag::for_symmetry(n), opts);
            out << dump_json(magic_json(r));
            return 0;
        }
        if (c_upoly->parsed()) {
            const auto inst = build_regular_upolygon(FieldTag::for_symmetry(n));
            const std::string doc = dump_json(instance_json(inst));
            out << doc;
            if (!json_file.empty()) write_file(json_file, doc);
            if (!svg_file.empty()) write_file(svg_file, render_svg(inst));
            return 0;
        }
        if (c_patch->parsed()) {
            PatchSpec spec;
            spec.tag = FieldTag::for_symmetry(n);
            spec.physical_radius = parse_rational(radius_arg);
            if (!window_arg.empty()) spec.window = parse_window(window_arg);
            if (!shift_arg.empty()) {
                const auto parts = split(shift_arg, ',');
                if (parts.size() != 2) throw std::invalid_argument("shift must be <q>,<q>");
                spec.window.shift = {parse_rational(parts[0]), parse_rational(parts[1])};
            }
            spec.star_exponent =
                star_arg.empty() ? default_star_exponent(n) : std::stoul(star_arg);
            const auto patch = generate_patch(spec);
            const std::string doc = dump_json(patch_json(patch));
            out << doc;
            write_file(out_file, doc);
            return 0;
        }
        if (c_xray->parsed()) {
            const Patch patch = patch_from_json(read_json_file(points_file));
            const auto ps = patch.to_point_set();
            const Direction d = direction_from_coeffs(direction_csv, patch.spec.tag.n);
            out << dump_json(xray_json(xray(ps, d)));
            return 0;
        }
        if (c_vu->parsed()) {
            const Patch patch = patch_from_json(read_json_file(points_file));
            const auto ps = patch.to_point_set();
            const Json dj = read_json_file(dirs_file);
            std::vector<Direction> dirs;
            for (const auto& row : dj.at("directions")) {
                std::ostringstream csv;
                for (std::size_t i = 0; i < row.size(); ++i)
                    csv << (i ? "," : "") << row[i].get<long>();
                dirs.push_back(direction_from_coeffs(csv.str(), patch.spec.tag.n));
            }
            const auto report = uniqueness_oracle(ps, dirs, max_size, double(vu_budget));
            out << dump_json(collision_json(report));
            return report.found ? 1 : 0;
        }
        if (c_demo->parsed()) {
            const auto report = demo_3d_upolyhedron(tolerance);
            out << dump_json(demo3d_json(report));
            return report.success() ? 0 : 1;
        }
        err << app.help();
        return 2;
    } catch (const Json::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::logic_error& e) {
        err << "verification failed: " << e.what() << "\n";
        return 1;
    }
}

} // namespace cyclotomo
