#include "hd/curves.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <functional>

#include "hd/errors.hpp"
#include "hd/zpoint.hpp"

namespace hd {

namespace {

void check_budget(const zpoint& z, const exact_limits& lim) {
    std::size_t b = z.bits();
    if (b > lim.max_bits) throw resource_error("curve evaluation exceeded bit budget", b);
}

zpoint preimage_z(int n, const rat& t, const exact_limits& lim) {
    zpoint z = zpoint::from({t, rat(0)});
    for (int j = 0; j < n; ++j) {
        if (z.xy_sum_sign() == 0)
            throw discontinuity_error("f^-" + std::to_string(n) + "(t,0) undefined at t = " +
                                      to_string(t) + ": level " + std::to_string(j));
        z.step_backward();
        check_budget(z, lim);
    }
    return z;
}

zpoint image_z(int n, const rat& t, const exact_limits& lim) {
    zpoint z = zpoint::from({t, -t});
    for (int j = 0; j < n; ++j) {
        if (z.y_sign() == 0)
            throw discontinuity_error("f^" + std::to_string(n) + "(t,-t) undefined at t = " +
                                      to_string(t) + ": step " + std::to_string(j + 1));
        z.step_forward();
        check_budget(z, lim);
    }
    return z;
}

// sign of (x+y)(f^-n(t,0)), strictly increasing in t on each level-n branch
int g_sign(int n, const rat& t, const exact_limits& lim) {
    return preimage_z(n, t, lim).xy_sum_sign();
}

int x_sign(int n, const rat& t, const exact_limits& lim) {
    return sgn(preimage_z(n, t, lim).a);
}

int x_minus_sign(const zpoint& z, const rat& v) {
    mpz_class d = z.a * v.get_den() - v.get_num() * z.m;
    return sgn(d);
}

int y_minus_sign(const zpoint& z, const rat& v) {
    mpz_class d = z.c * v.get_den() - v.get_num() * z.m;
    return sgn(d);
}

using sign_fn = std::function<int(const rat&)>;

root_bracket bisect_root(const sign_fn& sg, rat lo, rat hi, const rat& width, int level) {
    while (hi - lo > width) {
        rat mid = (lo + hi) / 2;
        int s = sg(mid);
        if (s == 0) return {mid, mid, level};
        if (s < 0)
            lo = mid;
        else
            hi = mid;
    }
    rat snap = simplest_in_interval(lo, hi);
    if (sg(snap) == 0) return {snap, snap, level};
    return {lo, hi, level};
}

// Root of an increasing function on the branch (a, b), b absent meaning
// unbounded; the function diverges to -inf at a+ and to +inf at b- (or at
// +inf), so a sign change always exists inside.
root_bracket root_on_branch(const sign_fn& sg, const rat& a, const std::optional<rat>& b,
                            const rat& width, const rat& sweep, int level) {
    rat lo, hi;
    rat span = b ? (*b - a) : rat(1);
    if (span <= 0) throw bracket_error("degenerate branch interval at " + to_string(a));
    rat d = span / 4;
    for (int guard = 0;; d /= 2) {
        if (++guard > 400)
            throw bracket_error("no negative probe right of " + to_string(a));
        lo = a + d;
        int s = sg(lo);
        if (s == 0) return {lo, lo, level};
        if (s < 0) break;
    }
    if (b) {
        d = span / 4;
        for (int guard = 0;; d /= 2) {
            if (++guard > 400)
                throw bracket_error("no positive probe left of " + to_string(*b));
            hi = *b - d;
            int s = sg(hi);
            if (s == 0) return {hi, hi, level};
            if (s > 0) break;
        }
    } else {
        hi = std::max(rat(2 * lo), rat(lo + 1));
        for (int guard = 0;; hi *= 2) {
            if (hi > sweep || ++guard > 200)
                throw bracket_error("no sign change within sweep bound right of " +
                                    to_string(a));
            int s = sg(hi);
            if (s == 0) return {hi, hi, level};
            if (s > 0) break;
        }
    }
    return bisect_root(sg, lo, hi, width, level);
}

root_bracket mirrored(const root_bracket& r) { return {-r.hi, -r.lo, r.level}; }

}  // namespace

bool discontinuity_set::contains(const rat& t) const {
    for (const auto& p : params)
        if (p.lo <= t && t <= p.hi) return true;
    return false;
}

rpoint preimage_point(int n, const rat& t, const exact_limits& lim) {
    return preimage_z(n, t, lim).to_rpoint();
}

rpoint image_point(int n, const rat& t, const exact_limits& lim) {
    return image_z(n, t, lim).to_rpoint();
}

bool image_identity_check(int n, const rat& t, const exact_limits& lim) {
    rpoint fwd = image_point(n, t, lim);
    rpoint bn = preimage_point(n, t, lim);
    rpoint bn1 = preimage_point(n + 1, t, lim);
    return fwd.x == bn.x && fwd.y == -bn1.y;
}

bool telescoped_x_check(int n, const rat& t, const exact_limits& lim) {
    zpoint z = zpoint::from({t, rat(0)});
    rat sum = 0;
    for (int j = 0; j < n; ++j) {
        if (z.xy_sum_sign() == 0)
            throw discontinuity_error("telescoping undefined at level " + std::to_string(j));
        z.step_backward();
        check_budget(z, lim);
        rat y(z.c, z.m);
        y.canonicalize();
        sum += 1 / y;
    }
    rpoint end = z.to_rpoint();
    return end.x == t - sum;
}

discontinuity_set discontinuity_params(int n, const curves_config& cfg) {
    discontinuity_set ds;
    ds.level = 1;
    ds.params = {root_bracket{rat(0), rat(0), 0}};
    for (int k = 1; k < n; ++k) {
        sign_fn sg = [&](const rat& t) { return g_sign(k, t, cfg.limits); };
        std::vector<root_bracket> pos;
        for (const auto& p : ds.params)
            if (p.lo >= 0) pos.push_back(p);
        std::sort(pos.begin(), pos.end(),
                  [](const root_bracket& a, const root_bracket& b) { return a.lo < b.lo; });

        std::vector<root_bracket> fresh;
        for (std::size_t i = 0; i < pos.size(); ++i) {
            std::optional<rat> right;
            if (i + 1 < pos.size()) right = pos[i + 1].lo;
            fresh.push_back(
                root_on_branch(sg, pos[i].hi, right, cfg.bracket_width, cfg.sweep_bound, k));
        }
        for (const auto& r : fresh) {
            ds.params.push_back(r);
            ds.params.push_back(mirrored(r));
        }
        std::sort(ds.params.begin(), ds.params.end(),
                  [](const root_bracket& a, const root_bracket& b) { return a.lo < b.lo; });
        ds.level = k + 1;
    }
    return ds;
}

std::vector<curve_branch> branches(curve_family family, int n, const discontinuity_set& ds,
                                   const curves_config&) {
    std::vector<curve_branch> out;
    curve_branch b;
    b.family = family;
    b.level = n;
    for (std::size_t i = 0; i + 1 <= ds.params.size(); ++i) {
        curve_branch cur = b;
        cur.left = i == 0 ? std::nullopt : std::optional<root_bracket>(ds.params[i - 1]);
        cur.right = ds.params[i];
        cur.side = ds.params[i].lo <= 0 ? -1 : +1;
        out.push_back(cur);
    }
    curve_branch last = b;
    last.left = ds.params.empty() ? std::nullopt : std::optional<root_bracket>(ds.params.back());
    last.right = std::nullopt;
    last.side = +1;
    out.push_back(last);
    return out;
}

namespace {

// Well-separated rational parameters strictly inside the branch interval.
std::vector<rat> branch_params(const curve_branch& b, int samples, const rat& span) {
    std::vector<rat> ts;
    rat a, c;
    if (b.left && b.right) {
        a = b.left->hi;
        c = b.right->lo;
    } else if (b.left) {
        a = b.left->hi;
        c = a + span;
    } else if (b.right) {
        c = b.right->lo;
        a = c - span;
    } else {
        a = -span;
        c = span;
    }
    for (int i = 1; i <= samples; ++i) ts.push_back(a + (c - a) * i / (samples + 1));
    return ts;
}

rpoint eval_family(curve_family fam, int n, const rat& t, const exact_limits& lim) {
    return fam == curve_family::preimage_of_y_zero ? preimage_point(n, t, lim)
                                                   : image_point(n, t, lim);
}

}  // namespace

check_report monotonicity_check(const curve_branch& b, int samples, const curves_config& cfg) {
    check_report rep;
    std::vector<rat> ts = branch_params(b, samples, rat(10));
    rpoint prev;
    bool have_prev = false;
    for (const rat& t : ts) {
        rpoint p = eval_family(b.family, b.level, t, cfg.limits);
        if (have_prev) {
            bool ok;
            if (b.family == curve_family::preimage_of_y_zero)
                ok = prev.x < p.x && prev.y < p.y;
            else
                ok = prev.x < p.x && prev.y > p.y;
            if (!ok) {
                rep.detail = "monotonicity violated near t = " + to_string(t);
                return rep;
            }
            ++rep.checked;
        }
        prev = p;
        have_prev = true;
    }
    rep.pass = true;
    return rep;
}

disjointness_report disjointness_check(int n, int samples, double min_gap,
                                       const curves_config& cfg) {
    disjointness_report rep;
    discontinuity_set dlo = discontinuity_params(n - 1, cfg);
    discontinuity_set dhi = discontinuity_params(n, cfg);

    auto cloud = [&](int level, const discontinuity_set& ds) {
        std::vector<dpoint> pts;
        for (const auto& b : branches(curve_family::preimage_of_y_zero, level, ds, cfg)) {
            for (const rat& t : branch_params(b, samples, rat(10))) {
                rpoint p = preimage_point(level, t, cfg.limits);
                pts.push_back({to_double(p.x), to_double(p.y)});
            }
        }
        return pts;
    };
    std::vector<dpoint> a = cloud(n - 1, dlo), c = cloud(n, dhi);
    double best = std::numeric_limits<double>::infinity();
    for (const auto& p : a)
        for (const auto& q : c) {
            double dx = p.x - q.x, dy = p.y - q.y;
            best = std::min(best, std::hypot(dx, dy));
            ++rep.pairs;
        }
    rep.min_gap_sampled = best;

    // Matched heights on the all-positive branches: both y-ranges are (0,oo).
    std::vector<root_bracket> chain = positive_chain(n, cfg);
    double matched = std::numeric_limits<double>::infinity();
    for (int i = 1; i <= 8; ++i) {
        rat ystar = rat(i) / 2;
        auto solve_x = [&](int level, const rat& edge) {
            sign_fn sg = [&](const rat& t) {
                return y_minus_sign(preimage_z(level, t, cfg.limits), ystar);
            };
            root_bracket tb =
                root_on_branch(sg, edge, std::nullopt, cfg.bracket_width, cfg.sweep_bound, 0);
            return to_double(preimage_point(level, tb.mid(), cfg.limits).x);
        };
        double x1 = solve_x(n - 1, chain[static_cast<std::size_t>(n - 2)].hi);
        double x2 = solve_x(n, chain[static_cast<std::size_t>(n - 1)].hi);
        matched = std::min(matched, std::abs(x1 - x2));
    }
    rep.min_gap_matched_height = matched;
    rep.pass = best > min_gap && matched > min_gap;
    return rep;
}

namespace {

bool diverging(const std::vector<double>& v, int dir) {
    if (v.size() < 2) return false;
    for (std::size_t i = 0; i + 1 < v.size(); ++i) {
        if (dir > 0 && v[i + 1] <= v[i]) return false;
        if (dir < 0 && v[i + 1] >= v[i]) return false;
    }
    double last = std::abs(v.back()), first = std::abs(v.front());
    return std::isinf(last) || last > 2 * first;
}

bool vanishing(const std::vector<double>& v, int sign_wanted) {
    if (v.size() < 2) return false;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (sign_wanted > 0 && v[i] <= 0) return false;
        if (sign_wanted < 0 && v[i] >= 0) return false;
        if (i + 1 < v.size() && std::abs(v[i + 1]) >= std::abs(v[i])) return false;
    }
    return true;
}

bool check_trend(trend t, const std::vector<double>& v) {
    switch (t) {
        case trend::to_plus_inf: return diverging(v, +1);
        case trend::to_minus_inf: return diverging(v, -1);
        case trend::to_zero_plus: return vanishing(v, +1);
        case trend::to_zero_minus: return vanishing(v, -1);
    }
    return false;
}

}  // namespace

boundary_report boundary_limits_check(int n, const root_bracket& t_d, bool from_left,
                                      int probes, const curves_config& cfg) {
    boundary_report rep;
    rep.expected_x = from_left ? trend::to_plus_inf : trend::to_minus_inf;
    bool deepest = t_d.level == n - 1;
    if (from_left)
        rep.expected_y = deepest ? trend::to_zero_minus : trend::to_plus_inf;
    else
        rep.expected_y = deepest ? trend::to_zero_plus : trend::to_minus_inf;

    // Shrink the initial offset until the whole probe ray lives on the branch.
    rat delta(1, 4);
    rat base = from_left ? t_d.lo : t_d.hi;
    for (int guard = 0; guard < 300; ++guard, delta /= 2) {
        try {
            rat t = from_left ? rat(base - delta) : rat(base + delta);
            (void)preimage_z(n, t, cfg.limits);
            break;
        } catch (const discontinuity_error&) {
        }
    }
    std::vector<double> xs, ys;
    rat d = delta;
    for (int k = 0; k < probes; ++k, d /= 2) {
        rat t = from_left ? rat(base - d) : rat(base + d);
        try {
            rpoint p = preimage_point(n, t, cfg.limits);
            xs.push_back(to_double(p.x));
            ys.push_back(to_double(p.y));
        } catch (const discontinuity_error&) {
            rep.detail = "probe fell off the branch at t = " + to_string(t);
            return rep;
        }
    }
    bool okx = check_trend(rep.expected_x, xs);
    bool oky = check_trend(rep.expected_y, ys);
    rep.pass = okx && oky;
    if (!okx) rep.detail = "x trend not observed";
    if (!oky) rep.detail += std::string(rep.detail.empty() ? "" : "; ") + "y trend not observed";
    return rep;
}

boundary_report boundary_limits_check_at_infinity(int n, bool plus_infinity, int probes,
                                                  const curves_config& cfg) {
    boundary_report rep;
    rep.expected_x = plus_infinity ? trend::to_plus_inf : trend::to_minus_inf;
    rep.expected_y = rep.expected_x;
    std::vector<double> xs, ys;
    rat t0 = plus_infinity ? rat(4) : rat(-4);
    rat t = t0;
    for (int k = 0; k < probes; ++k, t *= 2) {
        rpoint p = preimage_point(n, t, cfg.limits);
        xs.push_back(to_double(p.x));
        ys.push_back(to_double(p.y));
    }
    rep.pass = check_trend(rep.expected_x, xs) && check_trend(rep.expected_y, ys);
    if (!rep.pass) rep.detail = "divergence at infinity not observed";
    return rep;
}

std::vector<root_bracket> positive_chain(int max_level, const curves_config& cfg) {
    std::vector<root_bracket> chain;
    chain.push_back({rat(0), rat(0), 0});  // q_1
    for (int k = 1; k < max_level; ++k) {
        sign_fn sg = [&](const rat& t) { return g_sign(k, t, cfg.limits); };
        chain.push_back(root_on_branch(sg, chain.back().hi, std::nullopt, cfg.bracket_width,
                                       cfg.sweep_bound, k));
    }
    return chain;
}

std::vector<zero_crossing> zero_crossing_sequence(int max_n, const curves_config& cfg) {
    std::vector<zero_crossing> out;
    std::vector<root_bracket> chain = positive_chain(max_n, cfg);
    for (int n = 1; n <= max_n; ++n) {
        sign_fn sg = [&](const rat& t) { return x_sign(n, t, cfg.limits); };
        root_bracket tb = root_on_branch(sg, chain[static_cast<std::size_t>(n - 1)].hi,
                                         std::nullopt, cfg.bracket_width, cfg.sweep_bound, n);
        zero_crossing zc;
        zc.level = n;
        zc.t = tb;
        zc.y_lo = preimage_point(n, tb.lo, cfg.limits).y;
        zc.y_hi = tb.exact() ? zc.y_lo : preimage_point(n, tb.hi, cfg.limits).y;
        out.push_back(zc);
    }
    return out;
}

std::vector<d_curve_height> d_curve_heights(int max_n, int samples, const curves_config& cfg) {
    std::vector<d_curve_height> out;
    std::vector<root_bracket> chain = positive_chain(max_n + 1, cfg);
    for (int n = 1; n <= max_n; ++n) {
        const root_bracket& qa = chain[static_cast<std::size_t>(n - 1)];
        const root_bracket& qb = chain[static_cast<std::size_t>(n)];
        double worst = 0;
        for (int i = 0; i < samples; ++i) {
            rat xstar = samples == 1 ? rat(0) : rat(2 * i) / (samples - 1);
            sign_fn sg = [&](const rat& t) {
                return x_minus_sign(preimage_z(n + 1, t, cfg.limits), xstar);
            };
            root_bracket tb =
                root_on_branch(sg, qa.hi, qb.lo, cfg.bracket_width, cfg.sweep_bound, 0);
            double y = to_double(preimage_point(n + 1, tb.mid(), cfg.limits).y);
            worst = std::max(worst, std::abs(y));
        }
        out.push_back({n, worst});
    }
    return out;
}

root_bracket axis_crossing_t0(const curves_config& cfg) {
    std::vector<root_bracket> chain = positive_chain(2, cfg);
    sign_fn sg = [&](const rat& t) { return x_sign(2, t, cfg.limits); };
    return root_on_branch(sg, chain[0].hi, chain[1].lo, cfg.bracket_width, cfg.sweep_bound, 0);
}

std::vector<polyline_point> sample_branch(const curve_branch& b, int base_samples,
                                          double gap_threshold, int max_points,
                                          const curves_config& cfg) {
    const double eps = 1e-12;
    auto eval = [&](double t) -> std::optional<dpoint> {
        dpoint p = b.family == curve_family::preimage_of_y_zero ? dpoint{t, 0.0}
                                                                : dpoint{t, -t};
        try {
            for (int j = 0; j < b.level; ++j)
                p = b.family == curve_family::preimage_of_y_zero ? apply_f_inv(p, eps)
                                                                 : apply_f(p, eps);
        } catch (const discontinuity_error&) {
            return std::nullopt;
        }
        if (!std::isfinite(p.x) || !std::isfinite(p.y)) return std::nullopt;
        return p;
    };

    double a, c;
    double span = 10.0;
    if (b.left && b.right) {
        a = to_double(b.left->hi);
        c = to_double(b.right->lo);
    } else if (b.left) {
        a = to_double(b.left->hi);
        c = a + span;
    } else if (b.right) {
        c = to_double(b.right->lo);
        a = c - span;
    } else {
        a = -span;
        c = span;
    }

    struct node {
        double t;
        std::optional<dpoint> p;
    };
    std::deque<node> nodes;
    for (int i = 0; i <= base_samples + 1; ++i) {
        double t = a + (c - a) * (i + 0.5) / (base_samples + 2.0);
        nodes.push_back({t, eval(t)});
    }
    // Split segments whose endpoints are far apart until dense enough.
    bool grew = true;
    while (grew && static_cast<int>(nodes.size()) < max_points) {
        grew = false;
        std::deque<node> next;
        for (std::size_t i = 0; i < nodes.size(); ++i) {
            next.push_back(nodes[i]);
            if (i + 1 == nodes.size()) break;
            const auto& l = nodes[i];
            const auto& r = nodes[i + 1];
            if (!l.p || !r.p) continue;
            double d = std::hypot(l.p->x - r.p->x, l.p->y - r.p->y);
            if (d > gap_threshold && static_cast<int>(nodes.size() + next.size()) < max_points) {
                double tm = (l.t + r.t) / 2;
                next.push_back({tm, eval(tm)});
                grew = true;
            }
        }
        nodes = std::move(next);
    }
    std::vector<polyline_point> out;
    for (const auto& nd : nodes)
        if (nd.p) out.push_back({nd.t, nd.p->x, nd.p->y});
    return out;
}

}  // namespace hd
