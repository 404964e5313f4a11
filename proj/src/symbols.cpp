#include "hd/symbols.hpp"

#include <cstdlib>

#include "hd/errors.hpp"

namespace hd {

namespace {

int sgn_ll(long long v) { return v > 0 ? 1 : -1; }

// Emits up to `window` symbols, recording whether the side is complete.
struct side_builder {
    std::vector<int> out;
    int window;
    bool clipped = false;
    bool terminated = false;

    explicit side_builder(int w) : window(w) {}

    bool full() const { return static_cast<int>(out.size()) >= window; }

    void push(int sym) {
        if (full()) {
            clipped = true;
            return;
        }
        out.push_back(sym);
    }

    void push_run(int sym, long long count) {
        for (long long i = 0; i < count; ++i) push(sym);
    }

    void terminate() {
        if (full()) {
            clipped = true;
        } else {
            out.push_back(0);
        }
        terminated = true;
    }

    side_status status() const {
        return (terminated && !clipped) ? side_status::terminated : side_status::truncated;
    }
};

long long fillable_i_future(const coordinate_word& wi) {
    if (wi.entries.empty()) return 0;
    long long n = std::llabs(wi.entries[0]) - 1;
    for (std::size_t k = 1; k < wi.entries.size(); ++k) n += std::llabs(wi.entries[k]);
    return n;
}

long long fillable_word_total(const coordinate_word& w) {
    long long n = 0;
    for (long long e : w.entries) n += std::llabs(e);
    return n;
}

void require_fillable(const coordinate_word& w, long long fillable, int window,
                      const char* what) {
    if (!w.finite() && fillable < window)
        throw window_error(std::string(what) + ": window exceeds word content",
                           static_cast<int>(fillable));
}

}  // namespace

symbol_sequence assemble_h_i(const coordinate_word& wi, const coordinate_word& wj,
                             int past_window, int future_window) {
    symbol_sequence seq;

    if (wi.entries.empty()) {
        if (!wi.finite())
            throw window_error("h_i: empty truncated i-word", 0);
        // On a pre-image of {y=0} right now: the whole i-coding is "0".
        seq.future = {0};
        seq.future_status = side_status::terminated;
        seq.past_status = side_status::terminated;
        return seq;
    }

    require_fillable(wi, fillable_i_future(wi), future_window, "h_i future");

    side_builder fut(future_window);
    int s0 = sgn_ll(wi.entries[0]);
    fut.push_run(2 * s0, std::llabs(wi.entries[0]) - 1);
    for (std::size_t n = 1; n < wi.entries.size() && !fut.full(); ++n) {
        int sp = sgn_ll(wi.entries[n - 1]);
        int sn = sgn_ll(wi.entries[n]);
        fut.push(1 * sp);
        fut.push_run(2 * sn, std::llabs(wi.entries[n]) - 1);
    }
    if (wi.finite() && !fut.clipped) fut.terminate();
    seq.future = std::move(fut.out);
    seq.future_status = fut.status();

    if (wj.entries.empty()) {
        if (!wj.finite())
            throw window_error("h_i past: empty truncated j-word", 0);
        if (past_window > 0) {
            seq.past = {0};  // no backward orbit: zero right away at time -1
        }
        seq.past_status = side_status::terminated;
        return seq;
    }

    require_fillable(wj, fillable_word_total(wj), past_window, "h_i past");

    side_builder pst(past_window);
    int sj0 = sgn_ll(wj.entries[0]);
    if (sj0 == s0) {
        pst.push_run(2 * sj0, std::llabs(wj.entries[0]));
    } else {
        pst.push(1 * sj0);
        pst.push_run(2 * sj0, std::llabs(wj.entries[0]) - 1);
    }
    for (std::size_t m = 1; m < wj.entries.size() && !pst.full(); ++m) {
        int sm = sgn_ll(wj.entries[m]);
        pst.push(1 * sm);
        pst.push_run(2 * sm, std::llabs(wj.entries[m]) - 1);
    }
    if (wj.finite() && !pst.clipped) pst.terminate();
    seq.past = std::move(pst.out);
    seq.past_status = pst.status();
    return seq;
}

symbol_sequence assemble_h_j(const coordinate_word& wi, const coordinate_word& wj,
                             int past_window, int future_window) {
    symbol_sequence seq;

    if (wj.entries.empty()) {
        if (!wj.finite())
            throw window_error("h_j: empty truncated j-word", 0);
        // On an image of {y=-x} right now: the whole j-coding is "0".
        seq.future = {0};
        seq.future_status = side_status::terminated;
        seq.past_status = side_status::terminated;
        return seq;
    }

    long long jfill = 1 + fillable_word_total(wi);  // time-0 symbol + i blocks
    if (!wi.finite() && jfill < future_window)
        throw window_error("h_j future: window exceeds word content",
                           static_cast<int>(jfill));

    side_builder fut(future_window);
    long long j0 = wj.entries[0];
    int sj0 = sgn_ll(j0);
    fut.push(symbol_of(j0));
    if (wi.entries.empty()) {
        // Forward orbit is already dead; finite case guaranteed here.
        if (!fut.clipped) fut.terminate();
    } else {
        int si0 = sgn_ll(wi.entries[0]);
        if (si0 == sj0) {
            fut.push_run(2 * si0, std::llabs(wi.entries[0]));
        } else {
            fut.push(1 * si0);
            fut.push_run(2 * si0, std::llabs(wi.entries[0]) - 1);
        }
        for (std::size_t n = 1; n < wi.entries.size() && !fut.full(); ++n) {
            int sn = sgn_ll(wi.entries[n]);
            fut.push(1 * sn);
            fut.push_run(2 * sn, std::llabs(wi.entries[n]) - 1);
        }
        if (wi.finite() && !fut.clipped) fut.terminate();
    }
    seq.future = std::move(fut.out);
    seq.future_status = fut.status();

    require_fillable(wj, fillable_word_total(wj) - 1, past_window, "h_j past");

    side_builder pst(past_window);
    // Remainder of the j0 block after its time-0 symbol, read outward.
    pst.push_run(2 * sj0, std::llabs(j0) - 2);
    if (std::llabs(j0) >= 2) pst.push(1 * sj0);
    for (std::size_t m = 1; m < wj.entries.size() && !pst.full(); ++m) {
        int sm = sgn_ll(wj.entries[m]);
        pst.push_run(2 * sm, std::llabs(wj.entries[m]) - 1);
        pst.push(1 * sm);
    }
    if (wj.finite() && !pst.clipped) pst.terminate();
    seq.past = std::move(pst.out);
    seq.past_status = pst.status();
    return seq;
}

namespace {

// sign at index k of a stream array, or 9 when outside the window
constexpr int kMissing = 9;

int stream_at(const std::vector<int>& v, long long k) {
    if (k < 0 || k >= static_cast<long long>(v.size())) return kMissing;
    return v[static_cast<std::size_t>(k)];
}

}  // namespace

symbol_sequence extract_h_i(const sign_stream& s, int past_window, int future_window) {
    symbol_sequence seq;
    side_builder fut(future_window);
    for (int k = 0; !fut.full(); ++k) {
        int sig = stream_at(s.fwd, k);
        if (sig == kMissing) break;
        if (sig == 0) {
            fut.terminate();
            break;
        }
        int nxt = stream_at(s.fwd, k + 1);
        if (nxt == kMissing) break;
        if (nxt == 0) {
            // the i-word at f^k(p) is the lone entry +-1, which codes 0
            fut.terminate();
            break;
        }
        fut.push(nxt == sig ? 2 * sig : sig);
    }
    seq.future = std::move(fut.out);
    seq.future_status = fut.status();

    side_builder pst(past_window);
    for (int k = 1; !pst.full(); ++k) {
        int sig = stream_at(s.bwd, k - 1);  // sign(y(f^-k p))
        if (sig == kMissing) break;
        if (sig == 0) {
            pst.terminated = true;  // backward orbit ends; nothing further exists
            break;
        }
        int nxt = k == 1 ? stream_at(s.fwd, 0) : stream_at(s.bwd, k - 2);
        if (nxt == 0) {
            pst.terminate();  // p itself sits on {y=0}
            break;
        }
        pst.push(nxt == sig ? 2 * sig : sig);
    }
    seq.past = std::move(pst.out);
    seq.past_status = pst.status();
    return seq;
}

symbol_sequence extract_h_j(const sign_stream& s, int past_window, int future_window) {
    symbol_sequence seq;
    side_builder fut(future_window);
    for (int k = 0; !fut.full(); ++k) {
        int tau = k == 0 ? stream_at(s.bwd, 0) : stream_at(s.fwd, k - 1);
        if (tau == kMissing) break;
        if (tau == 0) {
            if (k == 0) fut.terminate();  // on {y=-x} now
            // otherwise f^k(p) does not exist; stop quietly
            else
                fut.terminated = true;
            break;
        }
        int prev = k == 0 ? stream_at(s.bwd, 1)
                 : k == 1 ? stream_at(s.bwd, 0)
                          : stream_at(s.fwd, k - 2);
        if (prev == kMissing) break;
        fut.push((prev == tau || prev == 0) ? 2 * tau : tau);
    }
    seq.future = std::move(fut.out);
    seq.future_status = fut.status();

    side_builder pst(past_window);
    for (int k = 1; !pst.full(); ++k) {
        int tau = stream_at(s.bwd, k);
        if (tau == kMissing) break;
        if (tau == 0) {
            pst.terminate();  // f^-k(p) lies on {y=-x}
            break;
        }
        int nxt = stream_at(s.bwd, k + 1);
        if (nxt == kMissing) break;
        pst.push((nxt == tau || nxt == 0) ? 2 * tau : tau);
    }
    seq.past = std::move(pst.out);
    seq.past_status = pst.status();
    return seq;
}

symbol_sequence shift(const symbol_sequence& seq) {
    if (seq.future.size() <= 1)
        throw empty_future_error("shift: no symbol available for the new origin");
    symbol_sequence out = seq;
    out.past.insert(out.past.begin(), out.future.front());
    out.future.erase(out.future.begin());
    return out;
}

symbol_sequence negate(const symbol_sequence& seq) {
    symbol_sequence out = seq;
    for (int& v : out.past) v = -v;
    for (int& v : out.future) v = -v;
    return out;
}

namespace {

bool grammar_ok(const std::vector<int>& stream, bool i_style) {
    for (std::size_t k = 0; k + 1 < stream.size(); ++k) {
        int a = stream[k], b = stream[k + 1];
        if (a == 0 || b == 0) continue;  // zero placement checked separately
        int sa = a > 0 ? 1 : -1;
        bool ok;
        if (i_style) {
            // run continues (or closes with its own-sign 1); a 1 flips sign
            ok = (std::abs(a) == 2) ? (b == 2 * sa || b == sa)
                                    : (b == -2 * sa || b == -sa);
        } else {
            // 2 continues the run; a fresh run always opens with opposite 1
            ok = (b == 2 * sa || b == -sa);
        }
        if (!ok) return false;
    }
    return true;
}

}  // namespace

bool sigma_membership(const symbol_sequence& seq) {
    std::vector<int> stream(seq.past.rbegin(), seq.past.rend());
    stream.insert(stream.end(), seq.future.begin(), seq.future.end());
    if (stream.empty()) return false;
    for (std::size_t k = 0; k < stream.size(); ++k) {
        int v = stream[k];
        if (v < -2 || v > 2) return false;
        if (v == 0 && k != 0 && k + 1 != stream.size()) return false;
    }
    return grammar_ok(stream, true) || grammar_ok(stream, false);
}

std::string to_string(const symbol_sequence& seq) {
    std::string s;
    if (seq.past_status == side_status::truncated) s += "... ";
    for (auto it = seq.past.rbegin(); it != seq.past.rend(); ++it)
        s += std::to_string(*it) + " ";
    s += ";";
    for (int v : seq.future) s += " " + std::to_string(v);
    if (seq.future_status == side_status::truncated) s += " ...";
    return s;
}

}  // namespace hd
