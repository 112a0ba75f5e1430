#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "arcrope/arcpres.hpp"
#include "arcrope/builder.hpp"
#include "arcrope/errors.hpp"
#include "doctest.h"
#include "test_helpers.hpp"

using namespace arcrope;
using arcrope::testing::trefoil_presentation;

namespace {

constexpr double kPi = std::numbers::pi;
const double kTau = 2.0 * kPi;

double min_distance_between(const std::vector<CurvePiece>& a, const std::vector<CurvePiece>& b,
                            double density = 20.0) {
    PiecewiseCurve ca{a, false}, cb{b, false};
    double best = 1e300;
    for (const SamplePoint& p : sample(ca, density)) {
        for (const SamplePoint& q : sample(cb, density)) {
            best = std::min(best, (p.position - q.position).norm());
        }
    }
    return best;
}

}  // namespace

TEST_SUITE("builder") {

TEST_CASE("layout geometry") {
    CHECK(layout(trefoil_presentation()).apothem ==
          doctest::Approx(1.376381920471174).epsilon(1e-12));
    CHECK(layout(extremal(3)).apothem == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-12));

    const PrismLayout l4 = layout(extremal(4));
    REQUIRE(l4.face_directions.size() == 4);
    CHECK((l4.face_directions[0] - Vec3{1, 0, 0}).norm() < 1e-12);
    CHECK((l4.face_directions[1] - Vec3{0, 1, 0}).norm() < 1e-12);
    CHECK((l4.face_directions[2] - Vec3{-1, 0, 0}).norm() < 1e-12);
    CHECK((l4.face_directions[3] - Vec3{0, -1, 0}).norm() < 1e-12);

    CHECK_THROWS_AS(layout(extremal(2)), ValidationError);
}

TEST_CASE("faces follow increasing page angle") {
    const ArcPresentation a = trefoil_presentation();
    const PrismLayout l = layout(a);
    // page angles: arc 2 at 0, arc 0 at tau/5, arc 3 at 2tau/5, arc 1 at 3tau/5, arc 4 at 4tau/5
    CHECK(l.face_arc == std::vector<int>{2, 0, 3, 1, 4});
    for (int i = 0; i < 5; ++i) CHECK(l.face_arc[l.arc_face[l.face_arc[i]]] == l.face_arc[i]);
}

TEST_CASE("ropelength bound values") {
    CHECK(ropelength_bound(5, 12) == doctest::Approx(43.471782472661).epsilon(1e-10));
    CHECK(ropelength_bound(5, 12) == doctest::Approx(43.47).epsilon(3e-4));
    CHECK(ropelength_bound(3, 4) == doctest::Approx(14.888879575907).epsilon(1e-10));
    // slope exactly 2 in skip
    for (int s = 5; s < 20; ++s) {
        CHECK(ropelength_bound(7, s + 1) - ropelength_bound(7, s) == doctest::Approx(2.0));
    }
}

TEST_CASE("trefoil build: counts, continuity, curvature, length accounting") {
    const ArcPresentation a = trefoil_presentation();
    const BuildResult r = build(a);

    REQUIRE(r.components.size() == 1);
    const PiecewiseCurve& c = r.curve();
    CHECK(c.closed);
    // no |x-y| = 1 arcs: every fin has 3 pieces, plus one binding per floor
    CHECK(c.pieces.size() == 3 * 5 + 5);
    CHECK(r.fins.size() == 5);
    CHECK(r.bindings.size() == 5);
    for (int level = 1; level <= 5; ++level) CHECK(r.bindings[level - 1].level == level);

    CHECK(check_continuity(c, 1e-9).empty());
    CHECK(infimal_radius_of_curvature(c) == doctest::Approx(1.0).epsilon(1e-13));

    double binding_total = 0.0;
    for (const BindingPart& b : r.bindings) binding_total += b.length;
    const double expected = (kPi - 2.0) * 5 + 2.0 * 12 + binding_total;
    CHECK(c.length() == doctest::Approx(expected).epsilon(1e-12));
    CHECK(c.length() == doctest::Approx(43.015963306169).epsilon(1e-9));
    CHECK(c.length() <= ropelength_bound(5, 12));

    for (const FinPart& fin : r.fins) {
        double len = 0.0;
        for (const CurvePiece& p : fin.pieces) len += piece_length(p);
        CHECK(len == doctest::Approx(fin.length).epsilon(1e-12));
    }
}

TEST_CASE("adjacent-face binding arcs have radius exactly one") {
    // consecutive pages in cycle order put every binding on adjacent faces
    for (int alpha = 3; alpha <= 12; ++alpha) {
        std::vector<int> levels;  // zig-zag cycle 1, alpha, 2, alpha-1, ...
        for (int i = 0; i < alpha; ++i) {
            levels.push_back(i % 2 == 0 ? i / 2 + 1 : alpha - i / 2);
        }
        std::vector<ArcTriple> arcs(alpha);
        for (int i = 0; i < alpha; ++i) {
            arcs[i] = {levels[i], levels[(i + 1) % alpha], kTau * i / alpha, {}};
        }
        const BuildResult r = build(validate(std::move(arcs)));
        for (const BindingPart& b : r.bindings) {
            const auto* arc = std::get_if<CircularArc>(&b.piece);
            REQUIRE(arc != nullptr);
            CHECK(arc->radius() == doctest::Approx(1.0).epsilon(1e-13));
        }
    }
}

TEST_CASE("adjacent-level arcs drop the vertical fin segment") {
    const ArcPresentation a = validate({{1, 2, 0.0, {}}, {2, 3, 2.0, {}}, {3, 1, 4.0, {}}});
    const BuildResult r = build(a);
    CHECK(r.fins[0].pieces.size() == 2);  // |1-2| = 1
    CHECK(r.fins[1].pieces.size() == 2);
    CHECK(r.fins[2].pieces.size() == 3);  // |3-1| = 2
    CHECK(check_continuity(r.curve(), 1e-9).empty());
    CHECK(r.curve().length() <= ropelength_bound(3, total_skip(a)));
}

TEST_CASE("opposite faces give a straight diameter binding") {
    // levels cycle [4,2,3,1] with pages chosen so level 4's arcs sit on
    // opposite faces (ranks 0 and 2)
    const ArcPresentation a = validate({{4, 2, 0.0, {}},
                                        {2, 3, kTau / 4.0, {}},
                                        {3, 1, 3.0 * kTau / 4.0, {}},
                                        {1, 4, kTau / 2.0, {}}});
    const BuildResult r = build(a);
    const BindingPart& top = r.bindings[3];
    REQUIRE(top.level == 4);
    const auto* seg = std::get_if<LineSegment>(&top.piece);
    REQUIRE(seg != nullptr);
    CHECK(seg->length() == doctest::Approx(2.0 / std::tan(kPi / 4.0)).epsilon(1e-12));
    CHECK(check_continuity(r.curve(), 1e-9).empty());
}

TEST_CASE("multi-component presentations build one closed loop per component") {
    const ArcPresentation split = validate({{1, 2, 0.0, {}},
                                            {2, 1, kTau / 4.0, {}},
                                            {3, 4, kTau / 2.0, {}},
                                            {4, 3, 3.0 * kTau / 4.0, {}}});
    const BuildResult r = build(split);
    REQUIRE(r.components.size() == 2);
    for (const PiecewiseCurve& c : r.components) {
        CHECK(c.closed);
        CHECK(check_continuity(c, 1e-9).empty());
    }
    CHECK_THROWS_AS(r.curve(), ValidationError);
    CHECK(min_distance_between(r.components[0].pieces, r.components[1].pieces) >= 2.0 - 1e-6);
}

TEST_CASE("distinct fins and distinct floors keep their tubes apart") {
    // Fins sharing a level connect through that floor's binding arc; points
    // near the joint are close in space but adjacent along the curve, so the
    // two-unit separation applies to fins with no common level.
    std::mt19937_64 rng(23);
    for (int alpha : {5, 8}) {
        const ArcPresentation a = random_single_cycle(alpha, rng);
        const BuildResult r = build(a);
        for (std::size_t i = 0; i < r.fins.size(); ++i) {
            for (std::size_t j = i + 1; j < r.fins.size(); ++j) {
                const ArcTriple& ai = a.arcs[r.fins[i].arc_index];
                const ArcTriple& aj = a.arcs[r.fins[j].arc_index];
                const bool share_level =
                    ai.x == aj.x || ai.x == aj.y || ai.y == aj.x || ai.y == aj.y;
                if (share_level) continue;
                CHECK(min_distance_between(r.fins[i].pieces, r.fins[j].pieces) >= 2.0 - 1e-6);
            }
        }
        for (std::size_t i = 0; i < r.bindings.size(); ++i) {
            for (std::size_t j = i + 1; j < r.bindings.size(); ++j) {
                CHECK(min_distance_between({r.bindings[i].piece}, {r.bindings[j].piece}) >=
                      2.0 - 1e-6);
            }
        }
    }
}

TEST_CASE("a maximal-skip nine-arc presentation builds under its bound") {
    const ArcPresentation a = extremal(9);
    REQUIRE(total_skip(a) == 40);
    const BuildResult r = build(a);
    CHECK(check_continuity(r.curve(), 1e-9).empty());
    CHECK(r.curve().length() <= ropelength_bound(9, 40));
}

TEST_CASE("random builds stay tangent-matched, curvature-bounded and under the bound") {
    std::mt19937_64 rng(101);
    for (int alpha = 3; alpha <= 12; ++alpha) {
        for (int rep = 0; rep < 5; ++rep) {
            const ArcPresentation a = random_single_cycle(alpha, rng);
            const BuildResult r = build(a);
            const PiecewiseCurve& c = r.curve();
            CHECK(check_continuity(c, 1e-9).empty());
            CHECK(infimal_radius_of_curvature(c) == doctest::Approx(1.0).epsilon(1e-13));
            CHECK(c.length() <= ropelength_bound(alpha, total_skip(a)) + 1e-9);

            int adjacent = 0;
            for (const ArcTriple& arc : a.arcs) {
                if (std::abs(arc.x - arc.y) == 1) ++adjacent;
            }
            CHECK(c.pieces.size() == static_cast<std::size_t>(4 * alpha - adjacent));
        }
    }
}

TEST_CASE("alpha two cannot be built") {
    CHECK_THROWS_AS(build(extremal(2)), ValidationError);
}

}  // TEST_SUITE
