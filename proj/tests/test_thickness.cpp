#include <cmath>
#include <numbers>

#include "arcrope/arcpres.hpp"
#include "arcrope/builder.hpp"
#include "arcrope/errors.hpp"
#include "arcrope/thickness.hpp"
#include "doctest.h"
#include "test_helpers.hpp"

using namespace arcrope;
using arcrope::testing::circle_curve;
using arcrope::testing::stadium_curve;
using arcrope::testing::trefoil_presentation;

TEST_SUITE("thickness") {

TEST_CASE("unit circle: diametral chords, thickness one") {
    const ThicknessReport r = thickness_report(circle_curve(1.0));
    CHECK(r.critical_found);
    CHECK(r.dcsd == doctest::Approx(2.0).epsilon(1e-7));
    CHECK(r.min_radius == doctest::Approx(1.0));
    CHECK(r.thickness == doctest::Approx(1.0).epsilon(1e-6));
    // witness endpoints are antipodal
    CHECK((r.witness.p_s + r.witness.p_t).norm() < 1e-4);
}

TEST_CASE("radius-3 circle: thickness three") {
    const ThicknessReport r = thickness_report(circle_curve(3.0));
    CHECK(r.thickness == doctest::Approx(3.0).epsilon(1e-6));
    CHECK(r.dcsd == doctest::Approx(6.0).epsilon(1e-6));
}

TEST_CASE("stadium: chord-limited at the parallel segments") {
    const ThicknessReport r = thickness_report(stadium_curve());
    CHECK(r.critical_found);
    CHECK(r.dcsd == doctest::Approx(2.0).epsilon(1e-3));
    CHECK(r.thickness == doctest::Approx(1.0).epsilon(1e-3));
}

TEST_CASE("dcsd requires a closed curve") {
    PiecewiseCurve open;
    open.closed = false;
    open.pieces.push_back(LineSegment{{0, 0, 0}, {1, 0, 0}});
    CHECK_THROWS_AS(dcsd_estimate(open), ValidationError);
    CHECK_THROWS_AS(dcsd_estimate(circle_curve(1.0), 5.0), ValidationError);
}

TEST_CASE("scaling equivariance") {
    const PiecewiseCurve base = stadium_curve();
    const ThicknessReport r1 = thickness_report(base);
    for (double lambda : {0.5, 2.0}) {
        const ThicknessReport rs = thickness_report(scaled(base, lambda));
        CHECK(rs.thickness == doctest::Approx(lambda * r1.thickness).epsilon(1e-6));
        CHECK(rs.dcsd == doctest::Approx(lambda * r1.dcsd).epsilon(1e-6));
        CHECK(rs.min_radius == doctest::Approx(lambda * r1.min_radius).epsilon(1e-12));
    }
}

TEST_CASE("rigid motions leave the report invariant") {
    const PiecewiseCurve base = stadium_curve();
    const RigidMotion m = RigidMotion::translation({5, -2, 3})
                              .compose(RigidMotion::rotation_x(0.7))
                              .compose(RigidMotion::rotation_z(-1.1));
    const ThicknessReport r1 = thickness_report(base);
    const ThicknessReport r2 = thickness_report(transformed(base, m));
    CHECK(r2.thickness == doctest::Approx(r1.thickness).epsilon(1e-9));
    CHECK(r2.dcsd == doctest::Approx(r1.dcsd).epsilon(1e-9));
}

TEST_CASE("dcsd does not increase with density") {
    const PiecewiseCurve c = stadium_curve();
    const double d50 = dcsd_estimate(c, 50.0).dcsd;
    const double d100 = dcsd_estimate(c, 100.0).dcsd;
    CHECK(d100 <= d50 + 1e-6);

    const PiecewiseCurve t = build(trefoil_presentation()).curve();
    CHECK(dcsd_estimate(t, 100.0).dcsd <= dcsd_estimate(t, 50.0).dcsd + 1e-6);
}

TEST_CASE("built trefoil has unit thickness") {
    const PiecewiseCurve c = build(trefoil_presentation()).curve();
    const ThicknessReport r = thickness_report(c);
    CHECK(r.min_radius == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(r.dcsd >= 2.0 - 1e-3);
    CHECK(r.thickness >= 0.999);
    CHECK(r.thickness <= 1.001);
}

TEST_CASE("triple circumradius on circles is the radius") {
    CHECK(triple_circumradius_check(circle_curve(1.0), 20.0) == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(triple_circumradius_check(circle_curve(3.0), 15.0) == doctest::Approx(3.0).epsilon(1e-9));
}

TEST_CASE("triple circumradius on the stadium" * doctest::timeout(60)) {
    const double r = triple_circumradius_check(stadium_curve(), 100.0);
    CHECK(r <= 1.0 + 1e-9);
    CHECK(r >= 1.0 - 1e-3);
}

TEST_CASE("overlap scan flags pinched tubes and passes honest ones") {
    CHECK(!tube_overlap_suspected(stadium_curve()));

    // flattened stadium: parallel segments only 0.5 apart
    PiecewiseCurve pinched;
    pinched.closed = true;
    pinched.pieces.push_back(LineSegment{{0, -0.25, 0}, {3, -0.25, 0}});
    pinched.pieces.push_back(
        CircularArc{{3, 0, 0}, {0, 0, 1}, {3, -0.25, 0}, std::numbers::pi});
    pinched.pieces.push_back(LineSegment{{3, 0.25, 0}, {0, 0.25, 0}});
    pinched.pieces.push_back(CircularArc{{0, 0, 0}, {0, 0, 1}, {0, 0.25, 0}, std::numbers::pi});
    CHECK(tube_overlap_suspected(pinched));
}

}  // TEST_SUITE
