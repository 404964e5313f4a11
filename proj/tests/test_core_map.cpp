#include <doctest.h>

#include "hd/errors.hpp"
#include "hd/map.hpp"
#include "hd/orbit.hpp"
#include "hd/verify.hpp"
#include "hd/zpoint.hpp"

using namespace hd;

namespace {
rpoint rp(long long xn, long long xd, long long yn, long long yd) {
    return {make_rat(xn, xd), make_rat(yn, yd)};
}
}  // namespace

TEST_CASE("forward map on worked points") {
    CHECK(apply_f(rp(1, 1, 1, 1)) == rp(2, 1, -1, 1));
    CHECK(apply_f(rp(2, 1, -1, 1)) == rp(1, 1, -2, 1));
    CHECK(apply_f(rp(0, 1, 1, 1)) == rp(1, 1, 0, 1));  // lands on {y=0}
    CHECK_THROWS_AS(apply_f(rp(3, 1, 0, 1)), discontinuity_error);
}

TEST_CASE("inverse map on worked points") {
    CHECK(apply_f_inv(rp(1, 1, -2, 1)) == rp(2, 1, -1, 1));
    CHECK(apply_f_inv(rp(1, 1, 0, 1)) == rp(0, 1, 1, 1));  // the level-1 curve at t=1
    CHECK_THROWS_AS(apply_f_inv(rp(2, 1, -2, 1)), discontinuity_error);
}

TEST_CASE("inverse composed with forward is the identity") {
    det_rng rng(7);
    int checked = 0;
    while (checked < 200) {
        rpoint p{rng.random_rat(10, 30), rng.random_rat(10, 30)};
        if (p.y == 0) continue;
        CHECK(apply_f_inv(apply_f(p)) == p);
        // and the other composition where defined
        if (p.x + p.y != 0) CHECK(apply_f(apply_f_inv(p)) == p);
        ++checked;
    }
}

TEST_CASE("jacobian entries, determinant, trace") {
    mat2<rat> j = jacobian(rp(0, 1, 1, 1));
    CHECK(j.a11 == 1);
    CHECK(j.a12 == -1);
    CHECK(j.a21 == -1);
    CHECK(j.a22 == 2);
    CHECK(j.det() == 1);
    CHECK(jacobian(rp(0, 1, 2, 1)).trace() == rat(9, 4));
    det_rng rng(13);
    for (int i = 0; i < 100; ++i) {
        rpoint p{rng.random_rat(10, 40), rng.random_rat(10, 40)};
        if (p.y == 0) continue;
        CHECK(jacobian(p).det() == 1);
    }
}

TEST_CASE("mirror symmetry") {
    CHECK(mirror(rp(1, 1, 1, 1)) == rp(-1, 1, -1, 1));
    CHECK(apply_f(rp(-1, 1, -1, 1)) == rp(-2, 1, 1, 1));
    CHECK(apply_f(rp(-1, 1, -1, 1)) == mirror(apply_f(rp(1, 1, 1, 1))));
    rpoint p = rp(3, 7, -5, 2);
    CHECK(mirror(mirror(p)) == p);
}

TEST_CASE("orbit records and termination causes") {
    orbit_record rec = orbit(rp(1, 1, 1, 1), 2, 0);
    REQUIRE(rec.points.size() == 3);
    CHECK(rec.at_time(0) == rp(1, 1, 1, 1));
    CHECK(rec.at_time(1) == rp(2, 1, -1, 1));
    CHECK(rec.at_time(2) == rp(1, 1, -2, 1));
    CHECK(rec.fwd == fwd_termination::alive);

    orbit_record hit = orbit(rp(0, 1, 1, 1), 2, 0);
    CHECK(hit.fwd == fwd_termination::hit_y_zero);
    CHECK(hit.fwd_event_time == 1);
    CHECK(hit.at_time(1).y == 0);
    CHECK(hit.max_time() == 1);

    orbit_record hitb = orbit(rp(1, 1, -1, 1), 0, 1);
    CHECK(hitb.bwd == bwd_termination::hit_anti_diagonal);
    CHECK(hitb.bwd_event_time == 0);
}

TEST_CASE("consecutive orbit points are exact images") {
    orbit_record rec = orbit(rp(3, 7, 5, 2), 6, 6);
    for (int t = rec.min_time(); t < rec.max_time(); ++t)
        CHECK(apply_f(rec.at_time(t)) == rec.at_time(t + 1));
}

TEST_CASE("bit budget stops deep orbits as data, not as corruption") {
    exact_limits tiny;
    tiny.max_bits = 4000;
    orbit_record rec = orbit(rp(1, 1, 1, 3), 40, 0, tiny);
    CHECK(rec.fwd == fwd_termination::truncated);
    CHECK(rec.fwd_event_time < 40);
    // sign streams raise instead, because a clipped stream would corrupt words
    CHECK_THROWS_AS(signs(rp(1, 1, 1, 3), 40, 0, tiny), resource_error);
}

TEST_CASE("depth cap truncates the request") {
    exact_limits lim;
    lim.max_depth = 4;
    orbit_record rec = orbit(rp(1, 1, 1, 3), 10, 0, lim);
    CHECK(rec.fwd == fwd_termination::truncated);
    CHECK(rec.max_time() == 4);
}

TEST_CASE("shared-denominator representation agrees with the rational ops") {
    rpoint p = rp(-7, 3, 9, 5);
    zpoint z = zpoint::from(p);
    z.step_forward();
    CHECK(z.to_rpoint() == apply_f(p));
    zpoint zb = zpoint::from(p);
    zb.step_backward();
    CHECK(zb.to_rpoint() == apply_f_inv(p));
}

TEST_CASE("float mode guards the discontinuity band") {
    CHECK_THROWS_AS(apply_f(dpoint{1.0, 1e-13}, 1e-12), discontinuity_error);
    dpoint q = apply_f(dpoint{1.0, 1.0}, 1e-12);
    CHECK(q.x == doctest::Approx(2.0));
    CHECK(q.y == doctest::Approx(-1.0));
}

TEST_CASE("sign streams label both directions") {
    sign_stream s = signs(rp(1, 1, 1, 1), 3, 3);
    REQUIRE(s.fwd.size() >= 3);
    CHECK(s.fwd[0] == 1);   // y(p) = 1
    CHECK(s.fwd[1] == -1);  // y(f p) = -1
    CHECK(s.bwd[0] == 1);   // x + y = 2
    sign_stream on_axis = signs(rp(2, 1, 0, 1), 3, 3);
    CHECK(on_axis.fwd == std::vector<int>{0});
    CHECK(on_axis.fwd_finite);
}
