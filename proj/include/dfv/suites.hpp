#pragma once

#include "dfv/records.hpp"

namespace dfv {

struct SuiteResult {
    std::string name;
    bool passed = false;
    ordered_json details;
};

/// Combinatorial vs geometric agreement of the generalized Steinberg map over
/// every class at rank n, with two independent seeds.
SuiteResult run_suite_rs(int n, std::uint64_t seed, int trials = kDefaultTrials,
                         int bound = kDefaultBound);

/// Class counts (formula vs enumeration) and signed-diagram counts, including
/// the sigma-fixed = CI coincidence.
SuiteResult run_suite_counts(int n);

/// The compatibility check of the orbit embedding with the Steinberg maps.
SuiteResult run_suite_conjecture(int n, std::uint64_t seed, int trials = kDefaultTrials,
                                 int bound = kDefaultBound);

}  // namespace dfv
