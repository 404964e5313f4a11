#include "hd/orbit.hpp"

#include <algorithm>

#include "hd/errors.hpp"
#include "hd/zpoint.hpp"

namespace hd {

namespace {

void check_budget(const zpoint& z, const exact_limits& lim) {
    std::size_t b = z.bits();
    if (b > lim.max_bits)
        throw resource_error("exact orbit exceeded bit budget", b);
}

}  // namespace

orbit_record orbit(const rpoint& p, int n_fwd, int n_bwd, const exact_limits& lim) {
    orbit_record rec;
    int fwd_req = std::min(n_fwd, lim.max_depth);
    int bwd_req = std::min(n_bwd, lim.max_depth);

    std::vector<rpoint> back;
    zpoint z = zpoint::from(p);
    rec.bwd = bwd_termination::alive;
    rec.bwd_event_time = -bwd_req;
    for (int k = 0; k < bwd_req; ++k) {
        if (z.xy_sum_sign() == 0) {
            rec.bwd = bwd_termination::hit_anti_diagonal;
            rec.bwd_event_time = -k;
            break;
        }
        zpoint next = z;
        next.step_backward();
        if (next.bits() > lim.max_bits) {
            rec.bwd = bwd_termination::truncated;
            rec.bwd_event_time = -k;
            break;
        }
        z = next;
        back.push_back(z.to_rpoint());
    }
    if (rec.bwd == bwd_termination::alive && bwd_req < n_bwd) {
        rec.bwd = bwd_termination::truncated;
        rec.bwd_event_time = -bwd_req;
    }

    rec.points.assign(back.rbegin(), back.rend());
    rec.origin = static_cast<int>(rec.points.size());
    rec.points.push_back(p);

    z = zpoint::from(p);
    rec.fwd = fwd_termination::alive;
    rec.fwd_event_time = fwd_req;
    for (int k = 0; k < fwd_req; ++k) {
        if (z.y_sign() == 0) {
            rec.fwd = fwd_termination::hit_y_zero;
            rec.fwd_event_time = k;
            break;
        }
        zpoint next = z;
        next.step_forward();
        if (next.bits() > lim.max_bits) {
            rec.fwd = fwd_termination::truncated;
            rec.fwd_event_time = k;
            break;
        }
        z = next;
        rec.points.push_back(z.to_rpoint());
    }
    if (rec.fwd == fwd_termination::alive && fwd_req < n_fwd) {
        rec.fwd = fwd_termination::truncated;
        rec.fwd_event_time = fwd_req;
    }
    return rec;
}

sign_stream signs(const rpoint& p, int fwd_depth, int bwd_depth, const exact_limits& lim) {
    sign_stream out;
    zpoint z = zpoint::from(p);
    for (int k = 0;; ++k) {
        int s = z.y_sign();
        out.fwd.push_back(s);
        if (s == 0) {
            out.fwd_finite = true;
            break;
        }
        if (k == fwd_depth) break;
        z.step_forward();
        check_budget(z, lim);
    }
    z = zpoint::from(p);
    for (int k = 0;; ++k) {
        int s = z.xy_sum_sign();
        out.bwd.push_back(s);
        if (s == 0) {
            out.bwd_finite = true;
            break;
        }
        if (k == bwd_depth) break;
        z.step_backward();
        check_budget(z, lim);
    }
    return out;
}

sign_stream shift_stream(const sign_stream& s) {
    if (s.fwd.empty() || s.fwd[0] == 0)
        throw discontinuity_error("cannot shift stream: no forward step from {y=0}");
    sign_stream out;
    out.fwd.assign(s.fwd.begin() + 1, s.fwd.end());
    out.fwd_finite = s.fwd_finite;
    out.bwd.reserve(s.bwd.size() + 1);
    out.bwd.push_back(s.fwd[0]);  // (x+y)(f(p)) = y(p)
    out.bwd.insert(out.bwd.end(), s.bwd.begin(), s.bwd.end());
    out.bwd_finite = s.bwd_finite;
    return out;
}

}  // namespace hd
