#include <doctest.h>

#include "hd/errors.hpp"
#include "hd/rational.hpp"

using namespace hd;

TEST_CASE("parsing rationals and decimals") {
    CHECK(parse_rat("3/7") == rat(3, 7));
    CHECK(parse_rat("-4/6") == rat(-2, 3));
    CHECK(parse_rat("0.25") == rat(1, 4));
    CHECK(parse_rat("-1.5") == rat(-3, 2));
    CHECK(parse_rat("10") == rat(10));
    CHECK(parse_rat(" 5 / 2 ") == rat(5, 2));
    CHECK_THROWS_AS(parse_rat("1/0"), parse_error);
    CHECK_THROWS_AS(parse_rat("abc"), parse_error);
    CHECK_THROWS_AS(parse_rat(""), parse_error);
    CHECK_THROWS_AS(parse_rat("1.2.3"), parse_error);
}

TEST_CASE("canonical serialization") {
    CHECK(to_string(rat(4, 6)) == "2/3");
    CHECK(to_string(rat(-4, 2)) == "-2");
    CHECK(to_string(rat(0)) == "0");
    rat q(3, -9);
    q.canonicalize();
    CHECK(to_string(q) == "-1/3");
}

TEST_CASE("round-trip double formatting") {
    for (double v : {0.1, -1.5, 3.141592653589793, 1e-12, -0.7653668647301796}) {
        CHECK(std::stod(format_double(v)) == v);
    }
}

TEST_CASE("simplest rational in an interval") {
    CHECK(simplest_in_interval(rat(1, 3), rat(1, 2)) == rat(1, 2));
    CHECK(simplest_in_interval(rat(2, 7), rat(3, 7)) == rat(1, 3));
    CHECK(simplest_in_interval(rat(-1, 2), rat(1, 3)) == rat(0));
    CHECK(simplest_in_interval(rat(5), rat(5)) == rat(5));
    CHECK(simplest_in_interval(rat(99, 100), rat(101, 100)) == rat(1));
    // the simplest value always lies inside
    rat lo(414213, 1000000), hi(414214, 1000000);
    rat s = simplest_in_interval(lo, hi);
    CHECK(lo <= s);
    CHECK(s <= hi);
    CHECK(s.get_den() <= lo.get_den());
}

TEST_CASE("rationalizing doubles") {
    auto half = snap_to_rational(0.5, 1e-9, 1000);
    REQUIRE(half.has_value());
    CHECK(*half == rat(1, 2));
    auto third = snap_to_rational(1.0 / 3.0, 1e-9, 1000);
    REQUIRE(third.has_value());
    CHECK(*third == rat(1, 3));
    CHECK_FALSE(snap_to_rational(0.7071067811865476, 1e-12, 1000).has_value());
}

TEST_CASE("bit size accounting") {
    CHECK(bit_size(rat(1)) == 2);  // 1 bit numerator + 1 bit denominator
    CHECK(bit_size(rat(255, 16)) == 13);
}
