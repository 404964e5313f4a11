#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hd/rational.hpp"

namespace hd {

struct verify_options {
    std::string suite = "all";  // all|core|curves|coding|boole|decode
    std::uint64_t seed = 42;
    int points = 500;      // commutation sweep size
    int depth = 16;        // commutation orbit depth
    int samples = 100;     // per-branch curve samples
    int curve_level = 6;   // monotonicity/disjointness depth
    std::size_t max_bits = 64'000'000;
};

struct check_result {
    std::string suite;
    std::string name;
    std::string status;  // pass|fail|info
    std::string detail;
    long long count = 0;
    double seconds = 0;
};

struct verify_result {
    std::vector<check_result> checks;
    bool passed = true;  // no check failed (info entries never fail)

    // Deterministic JSON rendering (schema_version, options echo, checks).
    std::string to_json(const verify_options& opt, int indent = 2) const;
};

verify_result run_verify(const verify_options& opt);

// Deterministic rational sampler used by the sweeps; modulo reduction keeps
// draws identical across platforms (std distributions are not portable).
struct det_rng {
    explicit det_rng(std::uint64_t seed);
    std::uint64_t next();
    long long uniform(long long lo, long long hi);
    rat random_rat(long long range, long long max_den);

private:
    std::uint64_t state[4];
};

}  // namespace hd
