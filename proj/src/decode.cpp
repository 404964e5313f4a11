#include "hd/decode.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "hd/errors.hpp"

namespace hd {

namespace {

long long abs_sum(std::span<const long long> v) {
    long long n = 0;
    for (long long e : v) n += std::llabs(e);
    return n;
}

// First `count` entries agree and are all complete (not cut by the window).
bool word_starts_with(const coordinate_word& w, std::span<const long long> prefix) {
    if (w.entries.size() < prefix.size()) return false;
    if (w.entries.size() == prefix.size() && !w.finite()) return false;
    for (std::size_t i = 0; i < prefix.size(); ++i)
        if (w.entries[i] != prefix[i]) return false;
    return true;
}

}  // namespace

bool prefixes_match(const rpoint& p, std::span<const long long> i_prefix,
                    std::span<const long long> j_prefix, const exact_limits& lim) {
    int df = static_cast<int>(abs_sum(i_prefix)) + 2;
    int db = static_cast<int>(abs_sum(j_prefix)) + 2;
    sign_stream s;
    try {
        s = signs(p, df, db, lim);
    } catch (const resource_error&) {
        return false;
    }
    return word_starts_with(i_word_from_signs(s.fwd, s.fwd_finite), i_prefix) &&
           word_starts_with(j_word_from_signs(s.bwd, s.bwd_finite), j_prefix);
}

locate_result cylinder_locate(const cylinder_query& q, const exact_limits& lim) {
    if (!alternating_signs({q.i_prefix.data(), q.i_prefix.size()}) ||
        !alternating_signs({q.j_prefix.data(), q.j_prefix.size()}))
        throw parse_error("cylinder query prefixes must be nonzero with alternating signs");

    locate_result res;
    std::vector<cell_box> cells = {{q.x0, q.x1, q.y0, q.y1}};
    for (int level = 0; level <= q.max_refinements; ++level) {
        res.refinements = level;
        std::vector<cell_box> next;
        long long alive = 0;
        for (const cell_box& c : cells) {
            rat w = c.x1 - c.x0, h = c.y1 - c.y0;
            rat cx = (c.x0 + c.x1) / 2, cy = (c.y0 + c.y1) / 2;
            const rpoint probes[5] = {
                {cx, cy},
                {cx - w / 4, cy - h / 4},
                {cx - w / 4, cy + h / 4},
                {cx + w / 4, cy - h / 4},
                {cx + w / 4, cy + h / 4},
            };
            std::optional<rpoint> hit;
            for (const rpoint& pr : probes) {
                if (prefixes_match(pr, q.i_prefix, q.j_prefix, lim)) {
                    hit = pr;
                    break;
                }
            }
            if (!hit) continue;
            ++alive;
            rat size = std::max(w, h);
            if (size <= q.tolerance) {
                res.found = true;
                res.point = *hit;
                res.cell_size = size;
                res.survivors = alive;
                return res;
            }
            if (static_cast<int>(next.size()) + 4 <= q.max_cells) {
                next.push_back({c.x0, cx, c.y0, cy});
                next.push_back({cx, c.x1, c.y0, cy});
                next.push_back({c.x0, cx, cy, c.y1});
                next.push_back({cx, c.x1, cy, c.y1});
            }
        }
        res.survivors = alive;
        if (next.empty()) {
            res.sample_cells.assign(cells.begin(),
                                    cells.begin() + std::min<std::size_t>(cells.size(), 8));
            return res;
        }
        cells = std::move(next);
    }
    res.sample_cells.assign(cells.begin(),
                            cells.begin() + std::min<std::size_t>(cells.size(), 8));
    res.survivors = static_cast<long long>(cells.size());
    return res;
}

rpoint curve_point_from_finite_iword(const coordinate_word& wi, const curves_config& cfg) {
    if (wi.entries.empty() || !wi.finite())
        throw parse_error("curve point lookup needs a nonempty finite i-word");
    if (!alternating_signs({wi.entries.data(), wi.entries.size()}))
        throw parse_error("i-word entries must alternate in sign");

    int n = static_cast<int>(abs_sum({wi.entries.data(), wi.entries.size()}));
    discontinuity_set ds = discontinuity_params(n, cfg);
    for (std::size_t i = 0; i + 1 <= ds.params.size() + 1; ++i) {
        rat t;
        if (i == 0) {
            t = ds.params.front().lo - 1;
        } else if (i == ds.params.size()) {
            t = ds.params.back().hi + 1;
        } else {
            rat gap = ds.params[i].lo - ds.params[i - 1].hi;
            t = simplest_in_interval(ds.params[i - 1].hi + gap / 4,
                                     ds.params[i].lo - gap / 4);
        }
        rpoint p;
        try {
            p = preimage_point(n, t, cfg.limits);
        } catch (const discontinuity_error&) {
            continue;
        }
        coordinate_word got = i_word(p, n + 1, cfg.limits);
        if (got == wi) return p;
    }
    throw branch_error("no level-" + std::to_string(n) + " branch realizes " + to_string(wi));
}

namespace {

constexpr double kNewtonEps = 1e-13;

dpoint iterate_f(dpoint p, int count) {
    for (int i = 0; i < count; ++i) p = apply_f(p, kNewtonEps);
    return p;
}

mat2<double> chain_jacobian(dpoint p, int count) {
    mat2<double> J{1, 0, 0, 1};
    for (int i = 0; i < count; ++i) {
        J = jacobian(p, kNewtonEps) * J;
        p = apply_f(p, kNewtonEps);
    }
    return J;
}

double residual_of(const dpoint& p, int period) {
    dpoint q = iterate_f(p, period);
    return std::max(std::abs(q.x - p.x), std::abs(q.y - p.y));
}

bool cyclic_alternating(std::span<const long long> cycle) {
    if (cycle.empty()) return false;
    std::vector<long long> doubled(cycle.begin(), cycle.end());
    doubled.insert(doubled.end(), cycle.begin(), cycle.end());
    return alternating_signs({doubled.data(), doubled.size()});
}

}  // namespace

periodic_candidate periodic_search(std::span<const long long> i_cycle,
                                   std::span<const long long> j_cycle,
                                   const cylinder_query& seed_box, const exact_limits& lim) {
    periodic_candidate cand;
    long long P = abs_sum(i_cycle);
    cand.period = static_cast<int>(P);
    if (P == 1) {
        cand.note = "period 1 is impossible: f(p) = p forces 1/y = 0";
        return cand;
    }
    if (P != abs_sum(j_cycle)) {
        cand.note = "inconsistent cycles: |i| and |j| symbol lengths differ";
        return cand;
    }
    if (!cyclic_alternating(i_cycle) || !cyclic_alternating(j_cycle)) {
        cand.note = "cycle entries must alternate in sign cyclically";
        return cand;
    }

    // One cycle of prefix keeps the seed cylinder fat enough for the probe
    // grid; Newton supplies the remaining accuracy.
    cylinder_query q = seed_box;
    q.i_prefix.assign(i_cycle.begin(), i_cycle.end());
    q.j_prefix.assign(j_cycle.begin(), j_cycle.end());
    locate_result seed = cylinder_locate(q, lim);
    if (!seed.found) {
        cand.note = "seed cylinder not found after " + std::to_string(seed.refinements) +
                    " refinements (" + std::to_string(seed.survivors) + " cells alive)";
        return cand;
    }

    dpoint p{to_double(seed.point.x), to_double(seed.point.y)};
    int period = cand.period;
    double res = 0;
    int iters = 0;
    try {
        res = residual_of(p, period);
        for (; iters < 100 && res > kNewtonEps; ++iters) {
            dpoint q1 = iterate_f(p, period);
            mat2<double> J = chain_jacobian(p, period);
            double fx = q1.x - p.x, fy = q1.y - p.y;
            double a = J.a11 - 1, b = J.a12, c = J.a21, d = J.a22 - 1;
            double det = a * d - b * c;
            if (det == 0 || !std::isfinite(det)) break;
            double dx = (d * fx - b * fy) / det;
            double dy = (a * fy - c * fx) / det;
            double step = 1.0;
            dpoint trial;
            double tri = res;
            for (int halved = 0; halved < 12; ++halved, step /= 2) {
                trial = {p.x - step * dx, p.y - step * dy};
                tri = residual_of(trial, period);
                if (tri < res) break;
            }
            if (tri >= res) break;
            p = trial;
            res = tri;
        }
    } catch (const discontinuity_error&) {
        cand.note = "Newton stepped onto a discontinuity";
        return cand;
    }
    cand.point = p;
    cand.residual = res;
    if (res > 1e-10) {
        cand.note = "Newton did not converge: residual " + format_double(res) + " after " +
                    std::to_string(iters) + " iterations";
        return cand;
    }

    // Exactly periodic rational orbits exist; recognize them.
    auto sx = snap_to_rational(p.x, 1e-9, 1'000'000);
    auto sy = snap_to_rational(p.y, 1e-9, 1'000'000);
    if (sx && sy) {
        rpoint cexact{*sx, *sy};
        try {
            rpoint it = cexact;
            for (int i = 0; i < period; ++i) it = apply_f(it);
            if (it == cexact) {
                cand.exact_point = cexact;
                cand.residual = 0;
            }
        } catch (const discontinuity_error&) {
        }
    }

    mat2<double> J = chain_jacobian(p, period);
    cand.jac_det = J.det();
    double tr = J.trace();
    double disc = tr * tr - 4 * cand.jac_det;
    if (disc < 0) {
        cand.complex_multipliers = true;
        cand.hyperbolic = false;
    } else {
        double root = std::sqrt(disc);
        double l1 = (tr + root) / 2, l2 = (tr - root) / 2;
        if (std::abs(l1) < std::abs(l2)) std::swap(l1, l2);
        cand.lambda = l1;
        cand.lambda_inv = l2;
        cand.hyperbolic = std::abs(std::abs(l1) - 1.0) > 1e-6;
    }
    cand.found = true;
    cand.note = "converged in " + std::to_string(iters) + " Newton iterations";
    return cand;
}

}  // namespace hd
