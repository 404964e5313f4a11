#include "hd/boole.hpp"

#include <cassert>
#include <cmath>
#include <cstdlib>

#include "hd/errors.hpp"

namespace hd {

rat apply_B(const rat& x) {
    if (x == 0) throw discontinuity_error("B undefined at 0");
    return x - 1 / x;
}

double apply_B(double x, double eps) {
    if (std::abs(x) < eps) throw discontinuity_error("B undefined (|x| < eps)");
    return x - 1.0 / x;
}

namespace {

// x = a/m with m > 0, unreduced; one step is three multiplies.
struct bline {
    mpz_class a, m;

    static bline from(const rat& x) { return {x.get_num(), x.get_den()}; }

    void step() {  // x - 1/x = (a^2 - m^2) / (a m)
        mpz_class A = a * a - m * m;
        mpz_class M = a * m;
        if (sgn(M) < 0) {
            mpz_neg(M.get_mpz_t(), M.get_mpz_t());
            mpz_neg(A.get_mpz_t(), A.get_mpz_t());
        }
        a = A;
        m = M;
    }

    std::size_t bits() const { return bit_size(a) + bit_size(m); }
};

}  // namespace

sign_stream boole_signs(const rat& x, int max_depth, const exact_limits& lim) {
    sign_stream out;
    bline b = bline::from(x);
    for (int k = 0;; ++k) {
        int s = sgn(b.a);
        out.fwd.push_back(s);
        if (s == 0) {
            out.fwd_finite = true;
            break;
        }
        if (k == max_depth) break;
        b.step();
        if (b.bits() > lim.max_bits)
            throw resource_error("Boole orbit exceeded bit budget", b.bits());
    }
    return out;
}

coordinate_word b_word(const rat& x, int max_depth, const exact_limits& lim) {
    sign_stream s = boole_signs(x, max_depth, lim);
    return i_word_from_signs(s.fwd, s.fwd_finite);
}

symbol_sequence h_B(const rat& x, int depth, const exact_limits& lim) {
    coordinate_word w = b_word(x, depth + 1, lim);
    coordinate_word no_past;
    no_past.status = word_status::finite;
    symbol_sequence seq = assemble_h_i(w, no_past, 0, depth + 1);
    seq.past.clear();
    seq.past_status = side_status::terminated;
    return seq;
}

namespace {

struct endpointv {
    enum class kind { finite, plus_inf, minus_inf } k = kind::finite;
    rat v;
};

// Solves B(x) = t on one monotone component, returning an enclosure of
// width <= tol. round_up picks which end the caller keeps.
rat solve_branch(const rat& t, int side, const rat& tol, bool round_up) {
    assert(side == 1 || side == -1);
    if (side < 0) return -solve_branch(-t, +1, tol, !round_up);
    // B is increasing from -inf to +inf on (0, inf).
    rat lo = 1, hi = 1;
    for (int guard = 0; apply_B(lo) >= t; ++guard) {
        lo /= 2;
        if (guard > 600) throw bracket_error("decode: no lower probe");
    }
    for (int guard = 0; apply_B(hi) <= t; ++guard) {
        hi *= 2;
        if (guard > 600) throw bracket_error("decode: no upper probe");
    }
    while (hi - lo > tol) {
        rat mid = (lo + hi) / 2;
        rat d = apply_B(mid) - t;
        if (d == 0) return mid;
        if (d < 0)
            lo = mid;
        else
            hi = mid;
    }
    rat snap = simplest_in_interval(lo, hi);
    if (apply_B(snap) == t) return snap;
    return round_up ? hi : lo;
}

endpointv pull_back(const endpointv& e, int side, const rat& tol, bool round_up) {
    if (e.k == endpointv::kind::finite)
        return {endpointv::kind::finite, solve_branch(e.v, side, tol, round_up)};
    if (side > 0) {
        if (e.k == endpointv::kind::minus_inf) return {endpointv::kind::finite, rat(0)};
        return {endpointv::kind::plus_inf, rat(0)};
    }
    if (e.k == endpointv::kind::plus_inf) return {endpointv::kind::finite, rat(0)};
    return {endpointv::kind::minus_inf, rat(0)};
}

}  // namespace

interval decode_B(std::span<const long long> prefix, const rat& tol, const exact_limits&) {
    if (prefix.empty()) throw parse_error("decode: empty prefix");
    if (!alternating_signs({prefix.data(), prefix.size()}))
        throw parse_error("decode: prefix entries must be nonzero with alternating signs");

    // Expand the prefix into its per-step sign sequence.
    std::vector<int> steps;
    for (long long e : prefix) {
        int s = e > 0 ? 1 : -1;
        for (long long i = 0; i < std::llabs(e); ++i) steps.push_back(s);
    }
    // After the prefix the run must break: sigma_K * B^T x <= 0.
    int last = steps.back();
    endpointv lo{endpointv::kind::minus_inf, rat(0)}, hi{endpointv::kind::finite, rat(0)};
    if (last < 0) {
        lo = {endpointv::kind::finite, rat(0)};
        hi = {endpointv::kind::plus_inf, rat(0)};
    }
    for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
        lo = pull_back(lo, *it, tol, false);
        hi = pull_back(hi, *it, tol, true);
    }
    if (lo.k != endpointv::kind::finite || hi.k != endpointv::kind::finite)
        throw bracket_error("decode: unbounded cylinder enclosure");
    return {lo.v, hi.v};
}

measure_report measure_preservation_check(double y, double tol) {
    measure_report rep;
    double r = std::sqrt(y * y + 4.0);
    double xp = (y + r) / 2, xm = (y - r) / 2;
    auto inv_deriv = [](double x) { return 1.0 / (1.0 + 1.0 / (x * x)); };
    rep.derivative_sum = inv_deriv(xp) + inv_deriv(xm);
    rep.error = std::abs(rep.derivative_sum - 1.0);
    rep.pass = rep.error <= tol;
    return rep;
}

bool measure_identity_exact(const rat& r) {
    if (r == 0) return false;
    rat xp = r, xm = -1 / r;
    auto inv_deriv = [](const rat& x) { return 1 / (1 + 1 / (x * x)); };
    return inv_deriv(xp) + inv_deriv(xm) == 1;
}

}  // namespace hd
