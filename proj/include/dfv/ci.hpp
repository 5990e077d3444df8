#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dfv/conormal.hpp"
#include "dfv/partial_perm.hpp"

namespace dfv {

/// Label of a sigma-stable class: its canonical data, with the symmetry
/// certificate tau1^T tau2 = tau2^T tau1 checked on construction.
struct CIOrbitLabel {
    CanonicalData data;

    explicit CIOrbitLabel(CanonicalData d);
};

/// True iff tau1^T tau2 is a symmetric 0/1 matrix; constant on S_n-classes.
bool is_sigma_stable(const OmegaPair& w);

enum class XiTieBreak { Ascending, Descending };

/// Companion pair (xi1, xi2): full rank, xi1^T tau1 = xi2^T tau2, and the
/// assembled 2n x 2n matrix (tau1 xi1; tau2 -xi2) invertible. The tie break
/// fixes the row permutations used in the block reduction; either choice
/// yields the same class downstream.
std::pair<PartialPermutation, PartialPermutation> build_xi(
    const OmegaPair& w, XiTieBreak tie = XiTieBreak::Ascending);

/// The involution on classes: canonical representative of (xi2; xi1).
OmegaPair sigma_on_orbit(const OmegaPair& w, XiTieBreak tie = XiTieBreak::Ascending);

/// Sigma-stable classes among enumerate_orbit_reps(n), same ordering.
std::vector<CIOrbitLabel> enumerate_ci_orbits(int n);

struct ConjectureOrbitResult {
    std::string tau1, tau2;
    bool passed = false;
    bool genericity_failure = false;
    std::string message;
    PhiAiii aiii;
    PhiCi ci;
};

struct ConjectureReport {
    int n = 0;
    std::uint64_t seed = 0;
    int total = 0;         // all classes
    int sigma_stable = 0;  // classes checked
    int passed = 0;
    std::vector<ConjectureOrbitResult> results;  // one per sigma-stable class
    std::vector<ConjectureOrbitResult> failed;

    bool allPassed() const { return passed == sigma_stable; }
};

/// Checks, for every sigma-stable class, that the AIII Steinberg values equal
/// the embedded CI values: (lambda, mu) = (lambda_CI, lambda_CI) and identical
/// exotic diagrams. Genericity failures are recorded per orbit, not fatal.
ConjectureReport check_commutativity(int n, std::uint64_t seed,
                                     int trials = kDefaultTrials, int bound = kDefaultBound);

}  // namespace dfv
