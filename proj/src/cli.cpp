#include "arcrope/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "arcrope/arcpres.hpp"
#include "arcrope/bounds.hpp"
#include "arcrope/builder.hpp"
#include "arcrope/connectsum.hpp"
#include "arcrope/curve_io.hpp"
#include "arcrope/errors.hpp"
#include "arcrope/mesh.hpp"
#include "arcrope/presentation_io.hpp"
#include "arcrope/thickness.hpp"

namespace arcrope {

namespace {

void write_text(const std::string& text, const std::string& path, std::ostream& out) {
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(path);
    if (!f) {
        throw ParseError(0, "cannot write '" + path + "'");
    }
    f << text;
}

std::string format_double(double v, const char* fmt = "%.9g") {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    std::snprintf(buf, sizeof(buf), fmt, v);
    return buf;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"arc-presentation realization and ropelength bound toolkit"};
    app.require_subcommand(1);

    // validate
    auto* cmd_validate = app.add_subcommand("validate", "check an arc-presentation file");
    std::string validate_file;
    cmd_validate->add_option("file", validate_file, "presentation file")->required();
    cmd_validate->callback([&] {
        const ArcPresentation a = load_presentation(validate_file);
        const LinkStructure ls = link_structure(a);
        out << "valid alpha=" << a.alpha() << " components=" << ls.components << '\n';
    });

    // skip
    auto* cmd_skip = app.add_subcommand("skip", "total skip of a presentation");
    std::string skip_file;
    cmd_skip->add_option("file", skip_file, "presentation file")->required();
    cmd_skip->callback([&] { out << total_skip(load_presentation(skip_file)) << '\n'; });

    // extremal
    auto* cmd_extremal = app.add_subcommand("extremal", "maximal-skip zig-zag presentation");
    int extremal_alpha = 0;
    std::string extremal_out;
    cmd_extremal->add_option("--alpha", extremal_alpha, "arc count (>= 2)")->required();
    cmd_extremal->add_option("-o,--output", extremal_out, "output file (default stdout)");
    cmd_extremal->callback(
        [&] { write_text(emit_presentation(extremal(extremal_alpha)), extremal_out, out); });

    // maxskip-oracle
    auto* cmd_oracle = app.add_subcommand("maxskip-oracle",
                                          "exhaustive maximum skip over single-cycle "
                                          "presentations (alpha <= 9)");
    int oracle_alpha = 0;
    cmd_oracle->add_option("--alpha", oracle_alpha, "arc count (2..9)")->required();
    cmd_oracle->callback([&] { out << max_skip_oracle(oracle_alpha) << '\n'; });

    // bound
    auto* cmd_bound = app.add_subcommand("bound", "ropelength upper bounds");
    int bound_crossing = 0;
    std::string bound_file;
    bool bound_exact = false;
    bool bound_report = false;
    auto* opt_crossing = cmd_bound->add_option("--crossing", bound_crossing,
                                               "crossing number of a non-split link (>= 2)");
    auto* opt_file = cmd_bound->add_option("--file", bound_file, "presentation file");
    cmd_bound->add_flag("--exact", bound_exact, "print the closed-form value");
    cmd_bound->add_flag("--report", bound_report, "print the full key=value report");
    opt_crossing->excludes(opt_file);
    cmd_bound->callback([&] {
        if (*opt_crossing) {
            if (bound_report) {
                out << format_bound_report(bound_report_for_crossing(bound_crossing));
            } else {
                out << format_double(crossing_number_bound(bound_crossing, bound_exact), "%.2f")
                    << '\n';
            }
        } else if (*opt_file) {
            const ArcPresentation a = load_presentation(bound_file);
            const long long skip = total_skip(a);
            const double value = ropelength_bound(a.alpha(), skip);
            if (bound_report) {
                out << "alpha=" << a.alpha() << '\n'
                    << "skip=" << skip << '\n'
                    << "skip_bound=" << skip_bound(a.alpha()) << '\n'
                    << "prism_bound=" << format_double(value) << '\n';
            } else {
                out << format_double(value, "%.2f") << '\n';
            }
        } else {
            throw CLI::RequiredError("--crossing or --file");
        }
    });

    // build
    auto* cmd_build = app.add_subcommand("build", "realize a presentation as a unit-thickness curve");
    std::string build_file, build_out, build_mesh;
    double build_density = 10.0;
    cmd_build->add_option("file", build_file, "presentation file")->required();
    cmd_build->add_option("-o,--output", build_out, "curve output file (default stdout)");
    cmd_build->add_option("--mesh", build_mesh, "also write a tube mesh (Wavefront OBJ)");
    cmd_build->add_option("--density", build_density, "mesh rings per unit length (default 10)");
    cmd_build->callback([&] {
        const ArcPresentation a = load_presentation(build_file);
        const BuildResult result = build(a);
        write_text(emit_curves(result.components), build_out, out);
        if (!build_mesh.empty()) {
            TubeMesh merged;
            for (const PiecewiseCurve& c : result.components) {
                const TubeMesh m = sweep_tube(c, 16, 1.0, build_density);
                const int offset = static_cast<int>(merged.vertices.size());
                merged.vertices.insert(merged.vertices.end(), m.vertices.begin(), m.vertices.end());
                for (const auto& f : m.faces) {
                    merged.faces.push_back({f[0] + offset, f[1] + offset, f[2] + offset});
                }
            }
            std::ofstream f(build_mesh);
            if (!f) throw ParseError(0, "cannot write '" + build_mesh + "'");
            f << to_obj(merged);
        }
        err << "length=" << format_double(result.total_length())
            << " bound=" << format_double(ropelength_bound(result.prism.alpha, total_skip(a)))
            << '\n';
    });

    // thickness
    auto* cmd_thickness = app.add_subcommand("thickness", "thickness report for a closed curve");
    std::string thickness_file;
    double thickness_density = 100.0;
    int thickness_refine = 40;
    cmd_thickness->add_option("file", thickness_file, "curve file")->required();
    cmd_thickness->add_option("--density", thickness_density, "samples per unit length");
    cmd_thickness->add_option("--refine", thickness_refine, "refinement rounds per candidate");
    cmd_thickness->callback([&] {
        std::ifstream f(thickness_file);
        if (!f) throw ParseError(0, "cannot open '" + thickness_file + "'");
        std::ostringstream buf;
        buf << f.rdbuf();
        const PiecewiseCurve c = parse_single_curve(buf.str());
        const ThicknessReport r = thickness_report(c, thickness_density, thickness_refine);
        if (!r.critical_found) {
            err << "warning: no doubly-critical chord met tolerance; dcsd is the minimum over "
                   "near-critical pairs\n";
        }
        out << "thickness=" << format_double(r.thickness)
            << " min_radius=" << format_double(r.min_radius)
            << " dcsd=" << format_double(r.dcsd) << " witness=("
            << format_double(r.witness.s, "%.6f") << ',' << format_double(r.witness.t, "%.6f")
            << ")\n";
    });

    // connect-sum
    auto* cmd_cs = app.add_subcommand("connect-sum", "join built curves into a composite");
    std::vector<std::string> cs_files;
    std::string cs_out;
    cmd_cs->add_option("curves", cs_files, "two or more built curve files")
        ->required()
        ->expected(2, -1);
    cmd_cs->add_option("-o,--output", cs_out, "curve output file (default stdout)");
    cmd_cs->callback([&] {
        const auto load_one = [](const std::string& path) {
            std::ifstream f(path);
            if (!f) throw ParseError(0, "cannot open '" + path + "'");
            std::ostringstream buf;
            buf << f.rdbuf();
            return parse_single_curve(buf.str());
        };
        PiecewiseCurve composite = load_one(cs_files.front());
        for (std::size_t i = 1; i < cs_files.size(); ++i) {
            const ConnectSumResult r = connect_sum_auto(composite, load_one(cs_files[i]));
            composite = r.curve;
            err << "join " << i << ": case="
                << (r.plan.kind == JoinCase::Flat ? "flat" : "bitangent")
                << " l1=" << format_double(r.plan.l1) << " l2=" << format_double(r.plan.l2)
                << " saved_length=" << format_double(r.plan.saved_length) << '\n';
        }
        write_text(emit_curve(composite), cs_out, out);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

}  // namespace arcrope
