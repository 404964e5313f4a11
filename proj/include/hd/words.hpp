#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hd/orbit.hpp"

namespace hd {

enum class word_status : std::uint8_t {
    truncated,  // scan hit the depth window; last run is a lower bound
    finite,     // orbit landed exactly on the relevant discontinuity
};

// One oplus-coordinate i0 (+) i1 (+) ...: nonzero entries of strictly
// alternating sign. A finite word is complete; a truncated one is a prefix.
struct coordinate_word {
    std::vector<long long> entries;
    word_status status = word_status::truncated;
    int depth = 0;  // scan depth that produced a truncated word

    bool finite() const { return status == word_status::finite; }
    friend bool operator==(const coordinate_word& a, const coordinate_word& b) {
        return a.entries == b.entries && a.status == b.status;
    }
};

bool alternating_signs(std::span<const long long> entries);

std::string to_string(const coordinate_word& w);

// Signed run-length encoding of the forward y-sign stream. A trailing zero
// entry in the stream (landing on {y=0}) closes the run at its strict count.
coordinate_word i_word_from_signs(std::span<const int> fwd, bool finite);

// Backward (x+y)-sign stream. A trailing zero (landing on {y=-x}) is counted
// into the run in progress; the paper's worked finite example fixes this
// inclusive convention.
coordinate_word j_word_from_signs(std::span<const int> bwd, bool finite);

// The i0>1 / i0=1 / j0>0 / j0<0 case table of the coordinate dynamics, plus
// its mirror. Must agree with re-extracting both words at f(p).
std::pair<coordinate_word, coordinate_word> coordinate_step(const coordinate_word& wi,
                                                            const coordinate_word& wj);

// i0 > 1 -> 2, i0 = 1 -> 1, i0 = -1 -> -1, i0 <= -2 -> -2.
int symbol_of(long long i0);

}  // namespace hd
