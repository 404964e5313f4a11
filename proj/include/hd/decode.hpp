#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hd/coding.hpp"
#include "hd/curves.hpp"
#include "hd/map.hpp"

namespace hd {

struct cylinder_query {
    std::vector<long long> i_prefix;
    std::vector<long long> j_prefix;
    rat x0, x1, y0, y1;  // search box
    rat tolerance = rat(1) / 100;
    int max_refinements = 12;
    int max_cells = 4096;
};

struct cell_box {
    rat x0, x1, y0, y1;
};

struct locate_result {
    bool found = false;
    rpoint point;
    rat cell_size;
    int refinements = 0;
    long long survivors = 0;         // surviving cells at the last level
    std::vector<cell_box> sample_cells;  // diagnostics when not found
};

// Adaptive quadtree over the box; a cell survives when any of its five
// probes (center + quarter points) re-codes to the queried prefixes.
locate_result cylinder_locate(const cylinder_query& q, const exact_limits& lim = {});

// Whether the exactly-coded words of p start with the queried prefixes.
bool prefixes_match(const rpoint& p, std::span<const long long> i_prefix,
                    std::span<const long long> j_prefix, const exact_limits& lim = {});

// A point on the level-n pre-image branch (n = sum |entries|) whose forward
// run pattern realizes the finite word; verified by re-coding.
rpoint curve_point_from_finite_iword(const coordinate_word& wi, const curves_config& cfg = {});

struct periodic_candidate {
    bool found = false;
    dpoint point{};
    std::optional<rpoint> exact_point;  // set when the orbit snaps to rationals
    int period = 0;
    double residual = 0;
    double jac_det = 0;
    bool complex_multipliers = false;
    double lambda = 0, lambda_inv = 0;  // real multipliers, |lambda| >= 1
    bool hyperbolic = false;
    std::string note;  // diagnostics: NotFound reason or Newton summary
};

// Seeds from cylinder_locate on the doubled cycle, then damped Newton on
// f^P(p) - p with the chained Jacobian. Period 1 is rejected analytically:
// f(p) = p would force 1/y = 0.
periodic_candidate periodic_search(std::span<const long long> i_cycle,
                                   std::span<const long long> j_cycle,
                                   const cylinder_query& seed_box,
                                   const exact_limits& lim = {});

}  // namespace hd
