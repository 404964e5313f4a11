#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hd/words.hpp"

namespace hd {

enum class side_status : std::uint8_t {
    truncated,   // ends at the window edge
    terminated,  // ends in the symbol 0 (or is the degenerate single-0 side)
};

// Two-sided windowed symbol sequence over {-2,-1,0,1,2} with marked origin.
// past[k] is the symbol at time -(k+1); future[k] the symbol at time k.
struct symbol_sequence {
    std::vector<int> past;
    std::vector<int> future;
    side_status past_status = side_status::truncated;
    side_status future_status = side_status::truncated;

    friend bool operator==(const symbol_sequence&, const symbol_sequence&) = default;
};

// Closed-form block assembly of the i-coordinate coding. Word-driven: finite
// words emit their complete sides ending in 0; truncated words fill at most
// `fillable` symbols and a larger window throws window_error.
symbol_sequence assemble_h_i(const coordinate_word& wi, const coordinate_word& wj,
                             int past_window, int future_window);

// Same for the j-coordinate coding; the time-0 symbol is the last symbol of
// the j0 block.
symbol_sequence assemble_h_j(const coordinate_word& wi, const coordinate_word& wj,
                             int past_window, int future_window);

// Independent route: reads each time-k symbol off the orbit sign stream
// directly (the symbol of the word at f^k(p)). Agrees with the block
// assembly on full-orbit points; at finite tails the assembly is normative.
symbol_sequence extract_h_i(const sign_stream& s, int past_window, int future_window);
symbol_sequence extract_h_j(const sign_stream& s, int past_window, int future_window);

// Origin moves one step forward; symbols unchanged.
symbol_sequence shift(const symbol_sequence& seq);

symbol_sequence negate(const symbol_sequence& seq);

// Membership in the subshift: alphabet, zeros only at the outer ends, and
// the local block grammar of at least one of the two coordinate codings.
bool sigma_membership(const symbol_sequence& seq);

// "... -2 -2 -1 2 ; 2 2 1 ..." rendering with the origin marker.
std::string to_string(const symbol_sequence& seq);

}  // namespace hd
