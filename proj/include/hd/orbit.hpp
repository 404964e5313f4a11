#pragma once

#include <cstddef>
#include <vector>

#include "hd/map.hpp"
#include "hd/rational.hpp"

namespace hd {

struct exact_limits {
    // Combined bit length of one point's shared-denominator representation.
    std::size_t max_bits = 1'000'000;
    int max_depth = 64;
};

enum class fwd_termination { alive, hit_y_zero, truncated };
enum class bwd_termination { alive, hit_anti_diagonal, truncated };

struct orbit_record {
    std::vector<rpoint> points;  // times -m .. n
    int origin = 0;              // index of time 0
    fwd_termination fwd = fwd_termination::alive;
    bwd_termination bwd = bwd_termination::alive;
    int fwd_event_time = 0;  // hit time, or depth reached for truncation
    int bwd_event_time = 0;

    int min_time() const { return -origin; }
    int max_time() const { return static_cast<int>(points.size()) - 1 - origin; }
    const rpoint& at_time(int t) const { return points[static_cast<std::size_t>(t + origin)]; }
};

// Iterates both directions until the requested depth, a discontinuity hit,
// or the bit budget. Termination is data, not an error.
orbit_record orbit(const rpoint& p, int n_fwd, int n_bwd, const exact_limits& lim = {});

// The one bi-infinite sign record everything symbolic is read from.
//
//   fwd[k] = sign(y(f^k p)),        k = 0..; a trailing 0 entry (fwd_finite)
//                                   marks the forward orbit landing on {y=0}.
//   bwd[k] = sign((x+y)(f^-k p)),   k = 0..; a trailing 0 entry (bwd_finite)
//                                   marks the backward orbit landing on {y=-x}.
//
// Since (x+y) o f = y, bwd[k] equals sign(y(f^-(k+1) p)) whenever that point
// exists; together the two arrays are the signed itinerary of the orbit.
struct sign_stream {
    std::vector<int> fwd;
    std::vector<int> bwd;
    bool fwd_finite = false;
    bool bwd_finite = false;
};

// fwd_depth/bwd_depth are highest orbit times scanned, so fwd holds up to
// fwd_depth+1 entries. Throws resource_error when the bit budget trips.
sign_stream signs(const rpoint& p, int fwd_depth, int bwd_depth, const exact_limits& lim = {});

// Stream for f(p) extracted from an already computed stream of p (shift by
// one; the time-0 entries move across the origin).
sign_stream shift_stream(const sign_stream& s);

}  // namespace hd
