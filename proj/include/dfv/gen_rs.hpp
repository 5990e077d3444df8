#pragma once

#include <array>

#include "dfv/partial_perm.hpp"
#include "dfv/tableau.hpp"

namespace dfv {

/// Output of the generalized Robinson-Schensted correspondence for one class.
struct GenRSTuple {
    Tableau hatT1, hatT2;
    Partition lambda_prime, mu_prime, nu;
    std::array<int, 3> rpq{};

    friend bool operator==(const GenRSTuple&, const GenRSTuple&) = default;
};

/// Generalized Steinberg map: lambda = shape Rect([L'] * t(T1) * [L]),
/// mu = shape Rect([M'] * t(T2) * [M]) with (T1, T2) the RS pair of sigma.
/// Canonicalizes its input; constant on S_n-classes.
std::pair<Partition, Partition> phi_theta_comb(const OmegaPair& w);
std::pair<Partition, Partition> phi_theta_comb(const CanonicalData& d);

GenRSTuple gen_rs(const OmegaPair& w);
GenRSTuple gen_rs(const CanonicalData& d);

}  // namespace dfv
