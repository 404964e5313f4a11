#include "hd/words.hpp"

#include <cassert>
#include <cstdlib>

#include "hd/errors.hpp"

namespace hd {

bool alternating_signs(std::span<const long long> entries) {
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (entries[i] == 0) return false;
        if (i > 0 && (entries[i] > 0) == (entries[i - 1] > 0)) return false;
    }
    return true;
}

std::string to_string(const coordinate_word& w) {
    std::string s;
    for (std::size_t i = 0; i < w.entries.size(); ++i) {
        if (i) s += "(+)";
        s += std::to_string(w.entries[i]);
    }
    if (w.finite())
        s += s.empty() ? "(finite)" : " (finite)";
    else
        s += s.empty() ? "(truncated)" : " ...";
    return s;
}

coordinate_word i_word_from_signs(std::span<const int> fwd, bool finite) {
    coordinate_word w;
    w.status = finite ? word_status::finite : word_status::truncated;
    w.depth = static_cast<int>(fwd.size()) - 1;
    if (fwd.empty()) return w;
    if (fwd[0] == 0) return w;  // on {y=0} now: empty finite word

    long long run = 0;
    int cur = fwd[0];
    for (int s : fwd) {
        if (s == 0) break;  // strict count; the zero is not part of the run
        if (s == cur) {
            ++run;
        } else {
            w.entries.push_back(cur * run);
            cur = s;
            run = 1;
        }
    }
    w.entries.push_back(cur * run);
    return w;
}

coordinate_word j_word_from_signs(std::span<const int> bwd, bool finite) {
    coordinate_word w;
    w.status = finite ? word_status::finite : word_status::truncated;
    w.depth = static_cast<int>(bwd.size()) - 1;
    if (bwd.empty()) return w;
    if (bwd[0] == 0) return w;  // on {y=-x} now: empty finite word

    long long run = 0;
    int cur = bwd[0];
    for (int s : bwd) {
        if (s == 0) {
            ++run;  // the landing point joins the run in progress
            break;
        }
        if (s == cur) {
            ++run;
        } else {
            w.entries.push_back(cur * run);
            cur = s;
            run = 1;
        }
    }
    w.entries.push_back(cur * run);
    return w;
}

std::pair<coordinate_word, coordinate_word> coordinate_step(const coordinate_word& wi,
                                                            const coordinate_word& wj) {
    if (wi.entries.empty())
        throw exhausted_word_error(wi.finite() ? "cannot step: point lies on {y=0}"
                                               : "cannot step: empty truncated i-word");
    long long i0 = wi.entries[0];
    int si = i0 > 0 ? 1 : -1;

    coordinate_word ni = wi;
    if (std::llabs(i0) > 1) {
        ni.entries[0] = i0 - si;
    } else {
        if (wi.entries.size() == 1 && !wi.finite())
            throw exhausted_word_error("i-word exhausted: |i0| = 1 with no successor");
        ni.entries.erase(ni.entries.begin());
    }

    coordinate_word nj = wj;
    if (wj.entries.empty()) {
        if (!wj.finite())
            throw exhausted_word_error("cannot step: empty truncated j-word");
        // p sits on {y=-x}; going forward the landing point joins the fresh
        // run inclusively, so f(p) starts with a complete run of 2.
        nj.entries.push_back(2LL * si);
    } else {
        long long j0 = wj.entries[0];
        if ((j0 > 0) == (i0 > 0)) {
            nj.entries[0] = j0 + si;
        } else {
            nj.entries.insert(nj.entries.begin(), si);
        }
    }
    return {std::move(ni), std::move(nj)};
}

int symbol_of(long long i0) {
    assert(i0 != 0);
    if (i0 > 1) return 2;
    if (i0 == 1) return 1;
    if (i0 == -1) return -1;
    return -2;
}

}  // namespace hd
