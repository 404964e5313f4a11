#include <doctest.h>

#include <cmath>

#include "hd/boole.hpp"
#include "hd/errors.hpp"
#include "hd/verify.hpp"

using namespace hd;

namespace {
rat q(long long n, long long d = 1) { return make_rat(n, d); }
}  // namespace

TEST_CASE("the map itself") {
    CHECK(apply_B(q(2)) == q(3, 2));
    CHECK(apply_B(q(1)) == q(0));
    CHECK(apply_B(q(-1, 2)) == q(3, 2));
    CHECK_THROWS_AS(apply_B(q(0)), discontinuity_error);
}

TEST_CASE("words of known points") {
    coordinate_word w1 = b_word(q(1), 8);
    CHECK(w1.entries == std::vector<long long>{1});
    CHECK(w1.finite());

    // 13/10 lies in (1, sqrt 2): one more positive step, then the sign flips
    coordinate_word w = b_word(q(13, 10), 8);
    REQUIRE(w.entries.size() >= 2);
    CHECK(w.entries[0] == 2);
    CHECK(w.entries[1] < 0);

    coordinate_word w0 = b_word(q(0), 8);
    CHECK(w0.entries.empty());
    CHECK(w0.finite());
}

TEST_CASE("word of 8/5 against a direct rational iteration") {
    // independent oracle: iterate with plain mpq arithmetic and RLE by hand
    rat x = q(8, 5);
    std::vector<int> sgns;
    for (int k = 0; k <= 10; ++k) {
        sgns.push_back(sgn(x));
        if (x == 0) break;
        x = x - 1 / x;
    }
    std::vector<long long> expect;
    for (int s : sgns) {
        if (expect.empty() || (expect.back() > 0) != (s > 0))
            expect.push_back(s);
        else
            expect.back() += s;
    }
    coordinate_word w = b_word(q(8, 5), 10);
    CHECK(w.entries == expect);
    CHECK_FALSE(w.finite());
}

TEST_CASE("one-sided coding") {
    symbol_sequence h_half = h_B(q(1, 2), 6);
    REQUIRE_FALSE(h_half.future.empty());
    CHECK(h_half.future[0] == 1);  // (0,1) codes 1

    symbol_sequence h3 = h_B(q(3), 6);
    CHECK(h3.future[0] == 2);  // (1,oo) codes 2

    symbol_sequence h1 = h_B(q(1), 6);
    CHECK(h1.future == std::vector<int>{0});  // lands on 0 next step
    CHECK(h1.future_status == side_status::terminated);
    CHECK(h_B(q(-1), 6).future == std::vector<int>{0});

    symbol_sequence hphi = h_B(q(8, 5), 6);
    CHECK(sigma_membership(hphi));
}

TEST_CASE("shift commutes with the map") {
    det_rng rng(5);
    exact_limits lim;
    lim.max_bits = 4'000'000;
    int done = 0;
    while (done < 100) {
        rat x = rng.random_rat(20, 40);
        if (x == 0) continue;
        sign_stream s;
        try {
            s = boole_signs(x, 11, lim);
        } catch (const resource_error&) {
            continue;
        }
        if (s.fwd_finite) continue;
        symbol_sequence a = shift(h_B(x, 10, lim));
        symbol_sequence b = h_B(apply_B(x), 9, lim);
        std::size_t n = std::min(a.future.size(), b.future.size());
        for (std::size_t k = 0; k < n; ++k) CHECK(a.future[k] == b.future[k]);
        ++done;
    }
}

TEST_CASE("decoding word prefixes to intervals") {
    rat tol = q(1, 1000000000);
    std::vector<long long> one = {1};
    interval i1 = decode_B(one, tol);
    CHECK(i1.lo == 0);
    CHECK(i1.hi == 1);  // both ends resolve exactly here

    std::vector<long long> two = {2};
    interval i2 = decode_B(two, tol);
    CHECK(i2.lo == 1);
    CHECK(std::abs(to_double(i2.hi) - (1.0 + std::sqrt(5.0)) / 2.0) < 1e-8);

    std::vector<long long> p21 = {2, -1};
    interval i3 = decode_B(p21, tol);
    CHECK(i3.lo >= 1);
    rat mid = (i3.lo + i3.hi) / 2;
    rat b2 = apply_B(apply_B(mid));
    CHECK(b2 > -1);
    CHECK(b2 < 0);

    std::vector<long long> bad = {2, 3};
    CHECK_THROWS_AS(decode_B(bad, tol), parse_error);
}

TEST_CASE("round trip through decode") {
    rat tol = q(1, 1000000000);
    for (auto x : {q(7, 3), q(-12, 5), q(3, 7)}) {
        coordinate_word w = b_word(x, 12);
        std::size_t complete = w.finite() ? w.entries.size() : w.entries.size() - 1;
        REQUIRE(complete >= 1);
        interval enc = decode_B({w.entries.data(), complete}, tol);
        CHECK(enc.contains(x));
    }
}

TEST_CASE("pre-image derivative sums") {
    measure_report m0 = measure_preservation_check(0.0, 1e-15);
    CHECK(m0.pass);
    CHECK(m0.derivative_sum == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(measure_preservation_check(3.0, 1e-12).pass);
    det_rng rng(11);
    for (int i = 0; i < 100; ++i) {
        double y = static_cast<double>(rng.uniform(-50'000, 50'000)) / 1000.0;
        CHECK(measure_preservation_check(y, 1e-12).pass);
    }
    // the exact identity on the rational family x+ = r, x- = -1/r
    for (auto r : {q(1), q(7, 3), q(-12, 5), q(1, 9)}) CHECK(measure_identity_exact(r));
}

TEST_CASE("word entries alternate") {
    det_rng rng(17);
    for (int i = 0; i < 100; ++i) {
        rat x = rng.random_rat(20, 30);
        if (x == 0) continue;
        coordinate_word w = b_word(x, 10);
        CHECK(alternating_signs({w.entries.data(), w.entries.size()}));
    }
}
