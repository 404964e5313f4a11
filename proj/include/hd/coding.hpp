#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hd/orbit.hpp"
#include "hd/symbols.hpp"
#include "hd/words.hpp"

namespace hd {

// i-word: signed run lengths of y along the forward orbit.
coordinate_word i_word(const rpoint& p, int max_depth, const exact_limits& lim = {});

// j-word: signed run lengths of x+y along the backward orbit.
coordinate_word j_word(const rpoint& p, int max_depth, const exact_limits& lim = {});

struct point_coding {
    coordinate_word wi, wj;
    symbol_sequence hi, hj;
};

// h(p) = (h_i(p), h_j(p)) with `window` past symbols and window+1 future
// symbols per sequence (minus whatever a terminated side cuts off).
point_coding code_point(const rpoint& p, int window, const exact_limits& lim = {});

struct commutation_report {
    bool hi_ok = false;
    bool hj_ok = false;
    int window = 0;
    std::string detail;  // first mismatch, if any
    bool ok() const { return hi_ok && hj_ok; }
};

// Checks shift(h_i(p)) == h_i(f(p)) and shift(h_j(p)) == h_j(f(p)) on the
// overlapping window, in exact arithmetic, reusing one orbit sign stream.
commutation_report verify_commutation(const rpoint& p, int depth, const exact_limits& lim = {});

// Same check for the two extraction routes: per-iterate symbols against the
// closed-form block assembly (full-orbit points only).
commutation_report verify_two_routes(const rpoint& p, int window, const exact_limits& lim = {});

}  // namespace hd
