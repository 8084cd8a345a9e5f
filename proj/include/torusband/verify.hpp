#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "torusband/intersections.hpp"
#include "torusband/sequences.hpp"

namespace tb {

struct verify_config {
    int n_max{2};
    int r_max{3};
    std::int64_t entry_bound{2};
    int sample_count{50};
    std::uint64_t seed{1};
    cond2_mode cond2{cond2_mode::column};
    t_range_mode t_range{t_range_mode::column};
    exec_policy policy{exec_policy::parallel};
};

struct verify_check {
    std::string name;
    std::int64_t passed{0};
    std::int64_t failed{0};
    std::int64_t expected_deviations{0}; // documented, non-fatal mismatches
    std::vector<std::string> failure_witnesses;
};

struct verify_report {
    std::vector<verify_check> checks;

    std::int64_t mismatches() const {
        std::int64_t t = 0;
        for (const auto& c : checks) t += c.failed;
        return t;
    }
};

/// The cross-verification harness: oracle-vs-combinatorics equivalence,
/// uniqueness enumeration, twist invariance, peel telescoping, d^2 = 0 and
/// representative crossing-freeness; deterministic for a fixed config.
verify_report verify_suite(const verify_config& cfg);

} // namespace tb
