#pragma once

#include <span>

#include "hd/orbit.hpp"
#include "hd/symbols.hpp"
#include "hd/words.hpp"

namespace hd {

// B(x) = x - 1/x, the one-dimensional ancestor of the plane map. Its coding
// is the forward half of the generic engine with x itself as the side
// functional and no backward side.

rat apply_B(const rat& x);
double apply_B(double x, double eps);

// Forward sign stream of (sign(B^k x)); a trailing zero marks the orbit
// landing on 0 at that step.
sign_stream boole_signs(const rat& x, int max_depth, const exact_limits& lim = {});

coordinate_word b_word(const rat& x, int max_depth, const exact_limits& lim = {});

// Future-only coding; shift . h_B = h_B . B.
symbol_sequence h_B(const rat& x, int depth, const exact_limits& lim = {});

struct interval {
    rat lo, hi;  // outer enclosure
    bool contains(const rat& x) const { return lo <= x && x <= hi; }
    rat width() const { return hi - lo; }
};

// Outer rational bracket of the set of x whose word starts with the given
// complete-entry prefix. Per-component bisection through the pre-image
// chain; each endpoint carries at most `tol` slack per pulled-back level.
interval decode_B(std::span<const long long> prefix, const rat& tol,
                  const exact_limits& lim = {});

struct measure_report {
    double derivative_sum = 0;
    double error = 0;
    bool pass = false;
};

// 1/B'(x+) + 1/B'(x-) over the two pre-images of y.
measure_report measure_preservation_check(double y, double tol);

// Exact form of the same identity on the rational family x+ = r, x- = -1/r.
bool measure_identity_exact(const rat& r);

}  // namespace hd
