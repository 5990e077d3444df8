#include "dfv/ci.hpp"

#include <algorithm>

#include "dfv/parallel.hpp"

namespace dfv {

CIOrbitLabel::CIOrbitLabel(CanonicalData d) : data(std::move(d)) {
    if (!is_sigma_stable(data.reconstruct()))
        throw std::invalid_argument("CIOrbitLabel: class is not sigma-stable");
}

bool is_sigma_stable(const OmegaPair& w) {
    if (!is_valid_pair(w)) throw std::invalid_argument("is_sigma_stable: pair has a zero column");
    int n = w.n();
    // (tau1^T tau2)_{ab} = [tau1(a) = tau2(b) != 0]
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b) {
            bool ab = w.tau1(a) != 0 && w.tau1(a) == w.tau2(b);
            bool ba = w.tau1(b) != 0 && w.tau1(b) == w.tau2(a);
            if (ab != ba) return false;
        }
    return true;
}

std::pair<PartialPermutation, PartialPermutation> build_xi(const OmegaPair& w, XiTieBreak tie) {
    if (!is_valid_pair(w)) throw std::invalid_argument("build_xi: pair has a zero column");
    int n = w.n();
    std::vector<int> J, M, Mp;
    for (int j = 1; j <= n; ++j) {
        if (w.tau1(j) == 0)
            M.push_back(j);
        else if (w.tau2(j) == 0)
            Mp.push_back(j);
        else
            J.push_back(j);
    }
    if (tie == XiTieBreak::Descending) {
        std::reverse(J.begin(), J.end());
        std::reverse(M.begin(), M.end());
        std::reverse(Mp.begin(), Mp.end());
    }
    int r = static_cast<int>(J.size());
    int p = static_cast<int>(M.size());

    // row permutations reducing tau1, tau2 to the block forms; s1 sends the
    // tau1-values of J to 1..r and of Mp to r+p+1..n, remaining rows fill the
    // middle band; s2 likewise for tau2
    auto makeRowPerm = [&](const std::vector<int>& firstVals, int firstStart,
                           const std::vector<int>& lastVals, int lastStart) {
        std::vector<int> perm(static_cast<std::size_t>(n), 0);  // value -> row
        std::vector<char> used(static_cast<std::size_t>(n) + 1, 0);
        for (std::size_t k = 0; k < firstVals.size(); ++k) {
            perm[static_cast<std::size_t>(firstVals[k] - 1)] = firstStart + static_cast<int>(k);
            used[static_cast<std::size_t>(firstVals[k])] = 1;
        }
        for (std::size_t k = 0; k < lastVals.size(); ++k) {
            perm[static_cast<std::size_t>(lastVals[k] - 1)] = lastStart + static_cast<int>(k);
            used[static_cast<std::size_t>(lastVals[k])] = 1;
        }
        std::vector<int> rest;
        for (int v = 1; v <= n; ++v)
            if (!used[static_cast<std::size_t>(v)]) rest.push_back(v);
        if (tie == XiTieBreak::Descending) std::reverse(rest.begin(), rest.end());
        std::vector<int> restSlots;
        std::vector<char> slotUsed(static_cast<std::size_t>(n) + 1, 0);
        for (int v = 1; v <= n; ++v) slotUsed[static_cast<std::size_t>(v)] = 0;
        for (int x : perm)
            if (x != 0) slotUsed[static_cast<std::size_t>(x)] = 1;
        for (int v = 1; v <= n; ++v)
            if (!slotUsed[static_cast<std::size_t>(v)]) restSlots.push_back(v);
        for (std::size_t k = 0; k < rest.size(); ++k)
            perm[static_cast<std::size_t>(rest[k] - 1)] = restSlots[k];
        return perm;
    };

    std::vector<int> tau1J, tau1Mp, tau2J, tau2M;
    for (int j : J) tau1J.push_back(w.tau1(j));
    for (int j : Mp) tau1Mp.push_back(w.tau1(j));
    for (int j : J) tau2J.push_back(w.tau2(j));
    for (int j : M) tau2M.push_back(w.tau2(j));

    std::vector<int> s1 = makeRowPerm(tau1J, 1, tau1Mp, r + p + 1);
    std::vector<int> s2 = makeRowPerm(tau2J, 1, tau2M, r + 1);

    std::vector<int> s1inv(static_cast<std::size_t>(n) + 1, 0), s2inv(static_cast<std::size_t>(n) + 1, 0);
    for (int v = 1; v <= n; ++v) {
        s1inv[static_cast<std::size_t>(s1[static_cast<std::size_t>(v - 1)])] = v;
        s2inv[static_cast<std::size_t>(s2[static_cast<std::size_t>(v - 1)])] = v;
    }

    // xi1 = s1^{-1} (1_{r+p} + 0_q), xi2 = s2^{-1} (1_r + 0_p + 1_q)
    std::vector<int> xi1(static_cast<std::size_t>(n), 0), xi2(static_cast<std::size_t>(n), 0);
    for (int k = 1; k <= r + p; ++k) xi1[static_cast<std::size_t>(k - 1)] = s1inv[static_cast<std::size_t>(k)];
    for (int k = 1; k <= r; ++k) xi2[static_cast<std::size_t>(k - 1)] = s2inv[static_cast<std::size_t>(k)];
    for (int k = r + p + 1; k <= n; ++k) xi2[static_cast<std::size_t>(k - 1)] = s2inv[static_cast<std::size_t>(k)];

    return {PartialPermutation(n, std::move(xi1)), PartialPermutation(n, std::move(xi2))};
}

OmegaPair sigma_on_orbit(const OmegaPair& w, XiTieBreak tie) {
    auto [xi1, xi2] = build_xi(w, tie);
    OmegaPair swapped{xi2, xi1};
    return canonicalize(swapped).first.reconstruct();
}

std::vector<CIOrbitLabel> enumerate_ci_orbits(int n) {
    std::vector<CIOrbitLabel> out;
    for (auto& d : enumerate_orbit_reps(n)) {
        if (is_sigma_stable(d.reconstruct())) out.emplace_back(std::move(d));
    }
    return out;
}

ConjectureReport check_commutativity(int n, std::uint64_t seed, int trials, int bound) {
    ConjectureReport report;
    report.n = n;
    report.seed = seed;
    auto reps = enumerate_orbit_reps(n);
    report.total = static_cast<int>(reps.size());

    std::vector<const CanonicalData*> stable;
    for (const auto& d : reps) {
        if (is_sigma_stable(d.reconstruct())) stable.push_back(&d);
    }
    report.sigma_stable = static_cast<int>(stable.size());

    report.results.resize(stable.size());
    parallel_for(stable.size(), [&](std::size_t i) {
        const CanonicalData& d = *stable[i];
        OmegaPair w = d.reconstruct();
        ConjectureOrbitResult res;
        res.tau1 = w.tau1.str();
        res.tau2 = w.tau2.str();
        try {
            res.aiii = phi_oracle_aiii(w, seed, trials, bound);
            res.ci = phi_oracle_ci(w, seed, trials, bound);
            NilpotentLabelTheta embedded = embed_nilpotent_label(res.ci.lambda);
            SignedYoungDiagram embeddedExotic = embed_nilpotent_label(res.ci.exotic);
            bool thetaOk = res.aiii.lambda == embedded.lambda && res.aiii.mu == embedded.mu;
            bool exoticOk = res.aiii.exotic == embeddedExotic;
            res.passed = thetaOk && exoticOk;
            if (!res.passed) res.message = "Steinberg values disagree with the embedding";
        } catch (const GenericityError& e) {
            res.genericity_failure = true;
            res.message = e.what();
        }
        report.results[i] = std::move(res);
    });

    for (const auto& r : report.results) {
        if (r.passed)
            ++report.passed;
        else
            report.failed.push_back(r);
    }
    return report;
}

}  // namespace dfv
