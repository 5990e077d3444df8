#pragma once

#include <cstdint>
#include <stdexcept>

#include "dfv/exactlin.hpp"
#include "dfv/partial_perm.hpp"

namespace dfv {

enum class Flavor { AIII, CI };

/// Thrown when no sampled fiber element has a dominance-maximal invariant
/// tuple; callers may raise trials or bound.
struct GenericityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Conormal fiber at the base point of a class: the linear space of 2n x 2n
/// matrices x with Im x inside [omega], x [omega] = 0, x11 strictly upper and
/// x22 strictly lower triangular. CI flavor adds the symplectic condition
/// x^T J + J x = 0. Every element squares to zero.
struct ConormalFiber {
    int n = 0;
    OmegaPair omega;  // canonical representative
    Flavor flavor = Flavor::AIII;
    LinearSubspace space;  // inside Q^(4 n^2), matrices flattened row-major

    int dim() const { return space.dim(); }
    RationalMatrix element(int i) const;
    RationalMatrix combination(const std::vector<int>& coeffs) const;
};

constexpr int kDefaultTrials = 5;
constexpr int kDefaultBound = 100;

ConormalFiber conormal_fiber_basis(const OmegaPair& w);

/// Sigma-fixed fiber; requires the class to be sigma-stable (tau1^T tau2
/// symmetric), else throws std::domain_error.
ConormalFiber ci_conormal_fiber_basis(const OmegaPair& w);

/// Seeded generic sampling: draws `trials` integer-coefficient combinations
/// with coefficients in [-bound, bound] and returns one whose invariant tuple
/// (Jordan types of the diagonal blocks plus the shape of the off-diagonal
/// part) dominates all others.
RationalMatrix sample_generic(const ConormalFiber& f, std::uint64_t seed,
                              int trials = kDefaultTrials, int bound = kDefaultBound);

struct PhiAiii {
    Partition lambda, mu;        // generalized Steinberg value
    SignedYoungDiagram exotic;   // exotic Steinberg value

    friend bool operator==(const PhiAiii&, const PhiAiii&) = default;
};

struct PhiCi {
    Partition lambda;
    SignedYoungDiagram exotic;

    friend bool operator==(const PhiCi&, const PhiCi&) = default;
};

PhiAiii phi_oracle_aiii(const OmegaPair& w, std::uint64_t seed,
                        int trials = kDefaultTrials, int bound = kDefaultBound);

PhiCi phi_oracle_ci(const OmegaPair& w, std::uint64_t seed,
                    int trials = kDefaultTrials, int bound = kDefaultBound);

/// Dimension of the orbit through the base point: dim of the acting group
/// minus the dimension of the infinitesimal stabilizer.
int orbit_dimension(const OmegaPair& w, Flavor flavor);

/// Dimension of the ambient double flag variety.
int ambient_dimension(int n, Flavor flavor);

}  // namespace dfv
