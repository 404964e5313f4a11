#include <doctest.h>

#include <cmath>

#include "hd/curves.hpp"
#include "hd/errors.hpp"

using namespace hd;

namespace {
rat q(long long n, long long d = 1) { return make_rat(n, d); }
}  // namespace

TEST_CASE("pre-image points of {y=0}") {
    CHECK(preimage_point(1, q(1)) == rpoint{q(0), q(1)});
    CHECK(preimage_point(1, q(2)) == rpoint{q(3, 2), q(2)});
    CHECK_THROWS_AS(preimage_point(1, q(0)), discontinuity_error);
    CHECK_THROWS_AS(preimage_point(3, q(0)), discontinuity_error);
}

TEST_CASE("image points of {y=-x}") {
    CHECK(image_point(1, q(1)) == rpoint{q(0), q(-1)});
    CHECK(image_point(1, q(2)) == rpoint{q(3, 2), q(-7, 2)});
}

TEST_CASE("forward images equal the pre-image identification exactly") {
    CHECK(image_identity_check(3, q(5, 7)));
    for (long long n = 1; n <= 6; ++n)
        CHECK(image_identity_check(static_cast<int>(n), q(9, 4)));
    CHECK(image_identity_check(4, q(-13, 5)));
}

TEST_CASE("telescoped x coordinate") {
    // one term: f^-1_x(3,0) = 3 - 1/3
    CHECK(telescoped_x_check(1, q(3)));
    CHECK(preimage_point(1, q(3)).x == q(8, 3));
    CHECK(telescoped_x_check(4, q(9, 4)));
    CHECK(telescoped_x_check(5, q(-6, 5)));
}

TEST_CASE("discontinuity parameter sets") {
    curves_config cfg;
    discontinuity_set d1 = discontinuity_params(1, cfg);
    REQUIRE(d1.params.size() == 1);
    CHECK(d1.params[0].exact());
    CHECK(d1.params[0].lo == 0);

    discontinuity_set d2 = discontinuity_params(2, cfg);
    REQUIRE(d2.params.size() == 3);
    auto poly = [](const rat& t) { return 2 * t * t - 1; };  // roots +-1/sqrt(2)
    CHECK(poly(d2.params[0].lo) * poly(d2.params[0].hi) < 0);
    CHECK(poly(d2.params[2].lo) * poly(d2.params[2].hi) < 0);
    CHECK(d2.params[2].width() <= cfg.bracket_width);
    CHECK(d2.params[1].lo == 0);

    discontinuity_set d3 = discontinuity_params(3, cfg);
    CHECK(d3.params.size() == 7);
    // every level-2 parameter persists at level 3
    for (const auto& p : d2.params) {
        bool found = false;
        for (const auto& r : d3.params)
            if (!(r.hi < p.lo || p.hi < r.lo)) found = true;
        CHECK(found);
    }
    // mirror symmetry
    for (std::size_t i = 0; i < d3.params.size(); ++i) {
        const auto& a = d3.params[i];
        const auto& b = d3.params[d3.params.size() - 1 - i];
        CHECK(a.lo == -b.hi);
    }
}

TEST_CASE("branch decomposition") {
    curves_config cfg;
    discontinuity_set d3 = discontinuity_params(3, cfg);
    auto brs = branches(curve_family::preimage_of_y_zero, 3, d3, cfg);
    CHECK(brs.size() == d3.params.size() + 1);  // 8 = 1 + |D(3)| branches
    int pos = 0, neg = 0;
    for (const auto& b : brs) (b.side > 0 ? pos : neg)++;
    CHECK(pos == 4);
    CHECK(neg == 4);
}

TEST_CASE("monotonicity along branches") {
    curves_config cfg;
    discontinuity_set d1 = discontinuity_params(1, cfg);
    auto brs1 = branches(curve_family::preimage_of_y_zero, 1, d1, cfg);
    for (const auto& b : brs1) CHECK(monotonicity_check(b, 100, cfg).pass);

    discontinuity_set d3 = discontinuity_params(3, cfg);
    for (const auto& b : branches(curve_family::preimage_of_y_zero, 3, d3, cfg))
        CHECK(monotonicity_check(b, 50, cfg).pass);

    discontinuity_set d2 = discontinuity_params(2, cfg);
    for (const auto& b : branches(curve_family::image_of_anti_diagonal, 2, d2, cfg))
        CHECK(monotonicity_check(b, 50, cfg).pass);
}

TEST_CASE("consecutive pre-image levels stay apart") {
    curves_config cfg;
    for (int n : {2, 3}) {
        disjointness_report r = disjointness_check(n, 14, 0.0, cfg);
        CHECK(r.pass);
        CHECK(r.min_gap_sampled > 0);
        CHECK(r.min_gap_matched_height > 0);
    }
}

TEST_CASE("boundary behaviour near discontinuity parameters") {
    curves_config cfg;
    root_bracket zero{q(0), q(0), 0};

    boundary_report r1 = boundary_limits_check(1, zero, false, 12, cfg);
    CHECK(r1.pass);
    CHECK(r1.expected_x == trend::to_minus_inf);
    CHECK(r1.expected_y == trend::to_zero_plus);

    boundary_report l1 = boundary_limits_check(1, zero, true, 12, cfg);
    CHECK(l1.pass);
    CHECK(l1.expected_y == trend::to_zero_minus);

    boundary_report inf1 = boundary_limits_check_at_infinity(1, true, 12, cfg);
    CHECK(inf1.pass);
    CHECK(inf1.expected_x == trend::to_plus_inf);
    CHECK(inf1.expected_y == trend::to_plus_inf);

    discontinuity_set d2 = discontinuity_params(2, cfg);
    const root_bracket& td = d2.params[2];  // 1/sqrt(2), level 1
    boundary_report l2 = boundary_limits_check(2, td, true, 12, cfg);
    CHECK(l2.pass);
    // the deepest-level parameter: y vanishes (the source text's item list
    // swaps this with the divergent case)
    CHECK(l2.expected_y == trend::to_zero_minus);
    boundary_report r2 = boundary_limits_check(2, td, false, 12, cfg);
    CHECK(r2.pass);
    CHECK(r2.expected_y == trend::to_zero_plus);
    // one level deeper the same parameter becomes shallow and y diverges
    boundary_report l3 = boundary_limits_check(3, td, true, 12, cfg);
    CHECK(l3.pass);
    CHECK(l3.expected_y == trend::to_plus_inf);
}

TEST_CASE("zero crossings of the all-positive branch") {
    curves_config cfg;
    auto zc = zero_crossing_sequence(6, cfg);
    REQUIRE(zc.size() == 6);
    CHECK(zc[0].t.exact());
    CHECK(zc[0].t.lo == 1);
    CHECK(zc[0].y_lo == 1);
    for (std::size_t i = 0; i + 1 < zc.size(); ++i) CHECK(zc[i].y_hi < zc[i + 1].y_lo);
    // t_2 is the outer positive root of 2t^4 - 4t^2 + 1
    double t2 = to_double(zc[1].t.mid());
    CHECK(std::abs(t2 - std::sqrt(1.0 + std::sqrt(2.0) / 2.0)) < 1e-9);
    double y2 = to_double(zc[1].y_lo);
    CHECK(y2 > 1.0);
    CHECK(std::abs(y2 - (2 * t2 - 1 / t2)) < 1e-9);
}

TEST_CASE("the axis crossing of the first sign-changing branch") {
    curves_config cfg;
    root_bracket t0 = axis_crossing_t0(cfg);
    CHECK(t0.width() <= cfg.bracket_width);
    CHECK(std::abs(to_double(t0.mid()) - std::sqrt(1.0 - std::sqrt(2.0) / 2.0)) < 1e-9);
    rpoint lo = preimage_point(2, t0.lo), hi = preimage_point(2, t0.hi);
    CHECK(lo.x < 0);
    CHECK(hi.x > 0);
    CHECK(lo.y > -1);
    CHECK(hi.y < 0);
    CHECK(std::abs(to_double(lo.y) - (-0.7653669)) < 1e-6);
}

TEST_CASE("heights of the mapped sign-changing family shrink") {
    curves_config cfg;
    auto hs = d_curve_heights(4, 5, cfg);
    REQUIRE(hs.size() == 4);
    CHECK(hs[0].max_abs_y < 1.0);
    for (std::size_t i = 0; i + 1 < hs.size(); ++i)
        CHECK(hs[i + 1].max_abs_y < hs[i].max_abs_y);
}

TEST_CASE("adaptive branch sampling yields finite plottable polylines") {
    curves_config cfg;
    discontinuity_set d1 = discontinuity_params(1, cfg);
    auto brs = branches(curve_family::preimage_of_y_zero, 1, d1, cfg);
    auto pts = sample_branch(brs.back(), 40, 0.25, 2000, cfg);
    REQUIRE(pts.size() >= 40);
    for (const auto& p : pts) {
        CHECK(std::isfinite(p.x));
        CHECK(std::isfinite(p.y));
        CHECK(std::abs(p.x - (p.t - 1.0 / p.t)) < 1e-9);
        CHECK(std::abs(p.y - p.t) < 1e-9);
    }
}
