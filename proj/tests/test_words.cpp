#include <doctest.h>

#include "hd/errors.hpp"
#include "hd/words.hpp"

using namespace hd;

namespace {
coordinate_word mk(std::vector<long long> e, word_status st = word_status::truncated) {
    coordinate_word w;
    w.entries = std::move(e);
    w.status = st;
    return w;
}
}  // namespace

TEST_CASE("forward run-length encoding closes strictly on a zero") {
    std::vector<int> s = {1, 1, 1, 0};
    coordinate_word w = i_word_from_signs(s, true);
    CHECK(w.entries == std::vector<long long>{3});
    CHECK(w.finite());

    std::vector<int> t = {1, -1, -1};
    coordinate_word wt = i_word_from_signs(t, false);
    CHECK(wt.entries == std::vector<long long>{1, -2});
    CHECK_FALSE(wt.finite());

    std::vector<int> z = {0};
    coordinate_word wz = i_word_from_signs(z, true);
    CHECK(wz.entries.empty());
    CHECK(wz.finite());
}

TEST_CASE("backward run-length encoding counts the landing point into the run") {
    // x+y signs +, -, -, - and then the orbit dies on {y=-x}: the worked
    // finite example fixes the word as 1 (+) -4
    std::vector<int> s = {1, -1, -1, -1, 0};
    coordinate_word w = j_word_from_signs(s, true);
    CHECK(w.entries == std::vector<long long>{1, -4});
    CHECK(w.finite());

    std::vector<int> t = {1, -1, -1, -1, -1};
    coordinate_word wt = j_word_from_signs(t, false);
    CHECK(wt.entries == std::vector<long long>{1, -4});
    CHECK_FALSE(wt.finite());
}

TEST_CASE("alternating sign validation") {
    CHECK(alternating_signs(std::vector<long long>{3, -2, 5}));
    CHECK_FALSE(alternating_signs(std::vector<long long>{3, 2}));
    CHECK_FALSE(alternating_signs(std::vector<long long>{3, 0, -1}));
    CHECK(alternating_signs(std::vector<long long>{}));
}

TEST_CASE("coordinate dynamics: decrement, pop, grow, prepend") {
    auto [a1, b1] = coordinate_step(mk({3, -2}), mk({1, -4}));
    CHECK(a1.entries == std::vector<long long>{2, -2});
    CHECK(b1.entries == std::vector<long long>{2, -4});

    auto [a2, b2] = coordinate_step(mk({1, -2}), mk({3, -4}));
    CHECK(a2.entries == std::vector<long long>{-2});
    CHECK(b2.entries == std::vector<long long>{4, -4});

    auto [a3, b3] = coordinate_step(mk({2, -2}), mk({-1, 4}));
    CHECK(a3.entries == std::vector<long long>{1, -2});
    CHECK(b3.entries == std::vector<long long>{1, -1, 4});

    // mirrored half: i0 < 0 raises toward -1, j0 tracks sign(i0)
    auto [a4, b4] = coordinate_step(mk({-3, 2}), mk({-2, 4}));
    CHECK(a4.entries == std::vector<long long>{-2, 2});
    CHECK(b4.entries == std::vector<long long>{-3, 4});
    auto [a5, b5] = coordinate_step(mk({-1, 2}), mk({3, -4}));
    CHECK(a5.entries == std::vector<long long>{2});
    CHECK(b5.entries == std::vector<long long>{-1, 3, -4});
}

TEST_CASE("stepping an exhausted truncated word is an error") {
    CHECK_THROWS_AS(coordinate_step(mk({1}), mk({2})), exhausted_word_error);
    CHECK_THROWS_AS(coordinate_step(mk({}), mk({2})), exhausted_word_error);
    // a finite lone 1 pops to the empty finite word: the image lies on {y=0}
    auto [a, b] = coordinate_step(mk({1}, word_status::finite), mk({2}));
    CHECK(a.entries.empty());
    CHECK(a.finite());
    CHECK(b.entries == std::vector<long long>{3});
}

TEST_CASE("stepping across the anti-diagonal seeds a complete run of two") {
    auto [a, b] = coordinate_step(mk({2, -1}), mk({}, word_status::finite));
    CHECK(a.entries == std::vector<long long>{1, -1});
    CHECK(b.entries == std::vector<long long>{2});
    CHECK(b.finite());
}

TEST_CASE("symbol map") {
    CHECK(symbol_of(3) == 2);
    CHECK(symbol_of(2) == 2);
    CHECK(symbol_of(1) == 1);
    CHECK(symbol_of(-1) == -1);
    CHECK(symbol_of(-2) == -2);  // the mirrored boundary case
    CHECK(symbol_of(-5) == -2);
}
