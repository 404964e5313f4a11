#include "hd/coding.hpp"

#include <algorithm>

#include "hd/errors.hpp"

namespace hd {

coordinate_word i_word(const rpoint& p, int max_depth, const exact_limits& lim) {
    sign_stream s = signs(p, max_depth, 0, lim);
    return i_word_from_signs(s.fwd, s.fwd_finite);
}

coordinate_word j_word(const rpoint& p, int max_depth, const exact_limits& lim) {
    sign_stream s = signs(p, 0, max_depth, lim);
    return j_word_from_signs(s.bwd, s.bwd_finite);
}

point_coding code_point(const rpoint& p, int window, const exact_limits& lim) {
    // Depth margin so that truncated words always fill the requested window.
    sign_stream s = signs(p, window + 2, window + 1, lim);
    point_coding pc;
    pc.wi = i_word_from_signs(s.fwd, s.fwd_finite);
    pc.wj = j_word_from_signs(s.bwd, s.bwd_finite);
    pc.hi = assemble_h_i(pc.wi, pc.wj, window, window + 1);
    pc.hj = assemble_h_j(pc.wi, pc.wj, window, window + 1);
    return pc;
}

namespace {

// Compares b against a on the symbol positions both sides define; the
// shorter window wins. Statuses are not compared: a terminated side must
// still agree symbol-for-symbol where both exist.
bool agree_on_overlap(const symbol_sequence& a, const symbol_sequence& b, std::string* why) {
    std::size_t np = std::min(a.past.size(), b.past.size());
    for (std::size_t k = 0; k < np; ++k) {
        if (a.past[k] != b.past[k]) {
            if (why)
                *why = "past mismatch at time -" + std::to_string(k + 1) + ": " +
                       std::to_string(a.past[k]) + " vs " + std::to_string(b.past[k]);
            return false;
        }
    }
    std::size_t nf = std::min(a.future.size(), b.future.size());
    for (std::size_t k = 0; k < nf; ++k) {
        if (a.future[k] != b.future[k]) {
            if (why)
                *why = "future mismatch at time " + std::to_string(k) + ": " +
                       std::to_string(a.future[k]) + " vs " + std::to_string(b.future[k]);
            return false;
        }
    }
    return true;
}

}  // namespace

commutation_report verify_commutation(const rpoint& p, int depth, const exact_limits& lim) {
    commutation_report rep;
    rep.window = depth - 1;
    int w = rep.window;

    sign_stream sp = signs(p, depth + 1, depth, lim);
    sign_stream sf = shift_stream(sp);

    coordinate_word wi = i_word_from_signs(sp.fwd, sp.fwd_finite);
    coordinate_word wj = j_word_from_signs(sp.bwd, sp.bwd_finite);
    coordinate_word fwi = i_word_from_signs(sf.fwd, sf.fwd_finite);
    coordinate_word fwj = j_word_from_signs(sf.bwd, sf.bwd_finite);

    symbol_sequence hi = assemble_h_i(wi, wj, w, w + 2);
    symbol_sequence hj = assemble_h_j(wi, wj, w, w + 2);
    symbol_sequence hi_f = assemble_h_i(fwi, fwj, w, w + 1);
    symbol_sequence hj_f = assemble_h_j(fwi, fwj, w, w + 1);

    std::string why;
    rep.hi_ok = agree_on_overlap(shift(hi), hi_f, &why);
    if (!rep.hi_ok) rep.detail = "sigma_i . h_i != h_i . f: " + why;
    rep.hj_ok = agree_on_overlap(shift(hj), hj_f, &why);
    if (!rep.hj_ok && rep.detail.empty()) rep.detail = "sigma_j . h_j != h_j . f: " + why;
    return rep;
}

commutation_report verify_two_routes(const rpoint& p, int window, const exact_limits& lim) {
    commutation_report rep;
    rep.window = window;
    sign_stream s = signs(p, window + 2, window + 1, lim);
    coordinate_word wi = i_word_from_signs(s.fwd, s.fwd_finite);
    coordinate_word wj = j_word_from_signs(s.bwd, s.bwd_finite);

    std::string why;
    rep.hi_ok = agree_on_overlap(assemble_h_i(wi, wj, window, window + 1),
                                 extract_h_i(s, window, window + 1), &why);
    if (!rep.hi_ok) rep.detail = "h_i assembly vs per-iterate: " + why;
    rep.hj_ok = agree_on_overlap(assemble_h_j(wi, wj, window, window + 1),
                                 extract_h_j(s, window, window + 1), &why);
    if (!rep.hj_ok && rep.detail.empty()) rep.detail = "h_j assembly vs per-iterate: " + why;
    return rep;
}

}  // namespace hd
