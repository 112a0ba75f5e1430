#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>

#include "arcrope/arcpres.hpp"
#include "arcrope/builder.hpp"
#include "arcrope/cli.hpp"
#include "arcrope/curve_io.hpp"
#include "arcrope/errors.hpp"
#include "arcrope/mesh.hpp"
#include "arcrope/presentation_io.hpp"
#include "doctest.h"
#include "test_helpers.hpp"

using namespace arcrope;
using arcrope::testing::circle_curve;
using arcrope::testing::data_dir;
using arcrope::testing::trefoil_path;
using arcrope::testing::trefoil_presentation;

namespace {

int run(const std::vector<std::string>& args, std::string* out_text = nullptr,
        std::string* err_text = nullptr) {
    std::vector<const char*> argv{"arcrope"};
    for (const std::string& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    if (out_text) *out_text = out.str();
    if (err_text) *err_text = err.str();
    return code;
}

std::string temp_file(const std::string& name, const std::string& contents) {
    const std::string path = std::string("/tmp/arcrope_test_") + name;
    std::ofstream f(path);
    f << contents;
    return path;
}

}  // namespace

TEST_SUITE("io") {

TEST_CASE("catalog trefoil parses to the known presentation") {
    const ArcPresentation a = load_presentation(trefoil_path());
    CHECK(a.alpha() == 5);
    CHECK(total_skip(a) == 12);
    CHECK(a.arcs[0].x == 1);
    CHECK(a.arcs[0].y == 3);
    REQUIRE(a.arcs[0].theta_fraction.has_value());
    CHECK(a.arcs[0].theta_fraction->first == 1);
    CHECK(a.arcs[0].theta_fraction->second == 5);

    const ArcPresentation mirror = load_presentation(arcrope::testing::trefoil_mirror_path());
    CHECK(total_skip(mirror) == 12);
}

TEST_CASE("presentation round-trip is field-exact") {
    std::mt19937_64 rng(404);
    std::vector<ArcPresentation> cases{trefoil_presentation(), extremal(7), extremal(8)};
    for (int rep = 0; rep < 20; ++rep) {
        cases.push_back(random_single_cycle(3 + static_cast<int>(rng() % 10), rng));
    }
    for (const ArcPresentation& a : cases) {
        const ArcPresentation back = parse_presentation(emit_presentation(a));
        REQUIRE(back.alpha() == a.alpha());
        for (int i = 0; i < a.alpha(); ++i) {
            CHECK(back.arcs[i].x == a.arcs[i].x);
            CHECK(back.arcs[i].y == a.arcs[i].y);
            CHECK(back.arcs[i].theta == a.arcs[i].theta);
            CHECK(back.arcs[i].theta_fraction == a.arcs[i].theta_fraction);
        }
    }
}

TEST_CASE("decimal page angles survive a round-trip") {
    const ArcPresentation a =
        validate({{1, 2, 0.25, {}}, {2, 3, 1.7320508075688772, {}}, {3, 1, 4.5, {}}});
    const ArcPresentation back = parse_presentation(emit_presentation(a));
    for (int i = 0; i < 3; ++i) CHECK(back.arcs[i].theta == a.arcs[i].theta);
}

TEST_CASE("decimal page angles are normalized into one turn") {
    const ArcPresentation a = parse_presentation("arcpres alpha=2\n1 2 7.0\n2 1 1.0\n");
    CHECK(a.arcs[0].theta == doctest::Approx(7.0 - 2.0 * 3.14159265358979323846).epsilon(1e-12));
    CHECK(a.arcs[1].theta == 1.0);
}

TEST_CASE("presentation parse failures") {
    CHECK_THROWS_AS(parse_presentation(""), ParseError);
    CHECK_THROWS_AS(parse_presentation("arcpres alpha=2\n1 2 0\n"), ParseError);  // count mismatch
    CHECK_THROWS_AS(parse_presentation("arcpres alpha=1\n1 2 zzz\n"), ParseError);
    // duplicated page angle forwards the validation error
    CHECK_THROWS_AS(parse_presentation("arcpres alpha=2\n1 2 0\n2 1 0\n"), ValidationError);
    // sparse level sets are rejected with a renumbering hint
    try {
        parse_presentation("arcpres alpha=3\n1 3 0\n3 4 1/4\n4 1 1/2\n");
        FAIL("expected ValidationError");
    } catch (const ValidationError& e) {
        CHECK(std::string(e.what()).find("renumber") != std::string::npos);
    }
}

TEST_CASE("curve interchange round-trip is exact") {
    const BuildResult r = build(trefoil_presentation());
    const std::string text = emit_curves(r.components);
    const std::vector<PiecewiseCurve> back = parse_curves(text);
    REQUIRE(back.size() == 1);
    REQUIRE(back[0].pieces.size() == r.curve().pieces.size());
    CHECK(back[0].closed);
    CHECK(back[0].length() == r.curve().length());  // %.17g round-trips exactly
    CHECK(check_continuity(back[0], 1e-9).empty());

    std::mt19937_64 rng(405);
    for (int alpha : {4, 6, 9}) {
        const PiecewiseCurve c = build(random_single_cycle(alpha, rng)).curve();
        const PiecewiseCurve rt = parse_single_curve(emit_curve(c));
        CHECK(rt.length() == c.length());
    }
}

TEST_CASE("multi-block curve files") {
    std::vector<PiecewiseCurve> curves{circle_curve(1.0), arcrope::testing::stadium_curve()};
    const std::vector<PiecewiseCurve> back = parse_curves(emit_curves(curves));
    REQUIRE(back.size() == 2);
    CHECK(back[1].length() == curves[1].length());
    CHECK_THROWS_AS(parse_single_curve(emit_curves(curves)), ParseError);
    CHECK_THROWS_AS(parse_curves("seg 0 0 0 1 1 1\n"), ParseError);
    CHECK_THROWS_AS(parse_curves("curve closed=1 pieces=2\nseg 0 0 0 1 1 1\n"), ParseError);
}

TEST_CASE("tube mesh over a circle is a watertight torus") {
    const TubeMesh m = sweep_tube(circle_curve(1.0), 8, 0.5, 10.0);
    CHECK(is_watertight(m));
    // Euler characteristic via V - E + F with E = 3F/2 on a closed triangle mesh
    const long long v = static_cast<long long>(m.vertices.size());
    const long long f = static_cast<long long>(m.faces.size());
    CHECK(v - 3 * f / 2 + f == 0);
    CHECK(v % 8 == 0);

    const std::string obj = to_obj(m);
    CHECK(obj.rfind("v ", 0) == 0);
    CHECK(obj.find("\nf 1 ") != std::string::npos);
}

TEST_CASE("tube mesh over the built trefoil is watertight at full radius") {
    const TubeMesh m = sweep_tube(build(trefoil_presentation()).curve(), 12, 1.0, 6.0);
    CHECK(is_watertight(m));
}

TEST_CASE("mesh parameter validation") {
    CHECK_THROWS_AS(sweep_tube(circle_curve(1.0), 3, 0.5, 10.0), ValidationError);
    CHECK_THROWS_AS(sweep_tube(circle_curve(1.0), 8, 1.5, 10.0), ValidationError);
    CHECK_THROWS_AS(sweep_tube(circle_curve(1.0), 8, 0.0, 10.0), ValidationError);
}

TEST_CASE("cli: skip, bound, oracle, validate") {
    std::string out, err;
    CHECK(run({"skip", trefoil_path()}, &out) == 0);
    CHECK(out == "12\n");

    CHECK(run({"bound", "--crossing", "3"}, &out) == 0);
    CHECK(out == "44.57\n");

    CHECK(run({"bound", "--crossing", "3", "--exact"}, &out) == 0);
    CHECK(out == "44.53\n");

    CHECK(run({"maxskip-oracle", "--alpha", "6"}, &out) == 0);
    CHECK(out == "18\n");

    CHECK(run({"validate", trefoil_path()}, &out) == 0);
    CHECK(out == "valid alpha=5 components=1\n");

    CHECK(run({"bound", "--file", trefoil_path()}, &out) == 0);
    CHECK(out == "43.47\n");

    CHECK(run({"bound", "--crossing", "3", "--report"}, &out) == 0);
    CHECK(out.find("alpha=5") != std::string::npos);
}

TEST_CASE("cli: exit codes") {
    std::string out, err;
    CHECK(run({"validate", "/nonexistent/file.arcs"}, &out, &err) == 2);
    const std::string bad = temp_file("bad.arcs", "arcpres alpha=2\n1 2 0\n2 1 0\n");
    CHECK(run({"validate", bad}, &out, &err) == 1);
    CHECK(!err.empty());
    CHECK(run({"no-such-command"}, &out, &err) == 2);
    std::remove(bad.c_str());
}

TEST_CASE("cli: extremal output parses and scores") {
    std::string out;
    CHECK(run({"extremal", "--alpha", "6"}, &out) == 0);
    CHECK(total_skip(parse_presentation(out)) == 18);
}

TEST_CASE("cli: build, thickness, connect-sum pipeline") {
    const std::string curve_a = "/tmp/arcrope_test_a.curve";
    const std::string curve_b = "/tmp/arcrope_test_b.curve";
    const std::string obj_path = "/tmp/arcrope_test_a.obj";
    const std::string composite = "/tmp/arcrope_test_ab.curve";
    std::string out, err;

    CHECK(run({"build", trefoil_path(), "-o", curve_a, "--mesh", obj_path}, &out, &err) == 0);
    CHECK(run({"build", arcrope::testing::trefoil_mirror_path(), "-o", curve_b}, &out, &err) == 0);

    std::ifstream obj(obj_path);
    REQUIRE(obj.good());
    std::string first_line;
    std::getline(obj, first_line);
    CHECK(first_line.rfind("v ", 0) == 0);

    CHECK(run({"thickness", curve_a, "--density", "40"}, &out, &err) == 0);
    CHECK(out.find("thickness=") != std::string::npos);
    CHECK(out.find("min_radius=1") != std::string::npos);
    CHECK(out.find("dcsd=") != std::string::npos);
    CHECK(out.find("witness=(") != std::string::npos);

    CHECK(run({"connect-sum", curve_a, curve_b, "-o", composite}, &out, &err) == 0);
    CHECK(err.find("case=bitangent") != std::string::npos);
    CHECK(err.find("saved_length=") != std::string::npos);
    std::ifstream comp(composite);
    std::ostringstream buf;
    buf << comp.rdbuf();
    const PiecewiseCurve c = parse_single_curve(buf.str());
    CHECK(check_continuity(c, 1e-9).empty());

    for (const std::string& p : {curve_a, curve_b, obj_path, composite}) std::remove(p.c_str());
}

TEST_CASE("cli: split links build one curve block per component") {
    const std::string pres = temp_file(
        "split.arcs", "arcpres alpha=4\n1 2 0\n2 1 1/4\n3 4 1/2\n4 3 3/4\n");
    std::string out, err;
    CHECK(run({"build", pres}, &out, &err) == 0);
    const std::vector<PiecewiseCurve> curves = parse_curves(out);
    REQUIRE(curves.size() == 2);
    for (const PiecewiseCurve& c : curves) CHECK(check_continuity(c, 1e-9).empty());

    // the thickness report is defined for a single closed curve
    const std::string two = temp_file("two.curve", out);
    CHECK(run({"thickness", two}, &out, &err) == 2);
    std::remove(pres.c_str());
    std::remove(two.c_str());
}

TEST_CASE("mutated inputs either parse or raise the documented errors") {
    const std::string pres = emit_presentation(extremal(6));
    const std::string curve = emit_curve(build(extremal(6)).curve());
    std::mt19937_64 rng(777);
    const std::string junk = "#/\\x 1.5e308 -0 nan 9999999999999999999999 seg arc curve alpha=";

    const auto mutate = [&](const std::string& base) {
        std::string s = base;
        switch (rng() % 5) {
            case 0:  // truncate
                s.resize(rng() % (s.size() + 1));
                break;
            case 1:  // duplicate a line
                s += s.substr(0, s.find('\n') + 1);
                break;
            case 2: {  // splice junk at a random spot
                const std::size_t at = rng() % (s.size() + 1);
                const std::size_t off = rng() % junk.size();
                s.insert(at, junk.substr(off, 1 + rng() % 8));
                break;
            }
            case 3:  // flip a byte
                if (!s.empty()) s[rng() % s.size()] ^= 0x20;
                break;
            default:  // swap two lines
                s = s.substr(s.find('\n') + 1) + s.substr(0, s.find('\n') + 1);
                break;
        }
        return s;
    };

    for (int rep = 0; rep < 250; ++rep) {
        CHECK_NOTHROW([&] {
            try {
                parse_presentation(mutate(pres));
            } catch (const ParseError&) {
            } catch (const ValidationError&) {
            }
        }());
        CHECK_NOTHROW([&] {
            try {
                parse_curves(mutate(curve));
            } catch (const ParseError&) {
            }
        }());
    }
}

TEST_CASE("the mirror catalog file negates page angles mod a full turn") {
    const ArcPresentation a = load_presentation(trefoil_path());
    const ArcPresentation m = load_presentation(arcrope::testing::trefoil_mirror_path());
    REQUIRE(m.alpha() == a.alpha());
    const double tau = 2.0 * 3.14159265358979323846;
    for (int i = 0; i < a.alpha(); ++i) {
        CHECK(m.arcs[i].x == a.arcs[i].x);
        CHECK(m.arcs[i].y == a.arcs[i].y);
        const double want = a.arcs[i].theta == 0.0 ? 0.0 : tau - a.arcs[i].theta;
        CHECK(m.arcs[i].theta == doctest::Approx(want).epsilon(1e-12));
    }
}

}  // TEST_SUITE
