#include "dfv/conormal.hpp"

#include <algorithm>

#include "dfv/ci.hpp"
#include "dfv/rng.hpp"

namespace dfv {

namespace {

// 2n x n matrix of omega: column j is e_{tau1(j)} stacked over e_{n+tau2(j)}.
RationalMatrix omegaMatrix(const OmegaPair& w) {
    int n = w.n();
    RationalMatrix m(2 * n, n);
    for (int j = 1; j <= n; ++j) {
        if (w.tau1(j) != 0) m.at(w.tau1(j) - 1, j - 1) = 1;
        if (w.tau2(j) != 0) m.at(n + w.tau2(j) - 1, j - 1) = 1;
    }
    return m;
}

// rows spanning the left annihilator of omega
std::vector<std::vector<mpq_class>> leftAnnihilator(const RationalMatrix& omega) {
    return kernel_basis(omega.transpose()).basis();
}

RationalMatrix symplecticForm(int n) {
    RationalMatrix j(2 * n, 2 * n);
    for (int i = 0; i < n; ++i) {
        j.at(i, n + i) = -1;
        j.at(n + i, i) = 1;
    }
    return j;
}

int flat(int i, int j, int dim) { return i * dim + j; }

LinearSubspace fiberSpace(const OmegaPair& w, Flavor flavor) {
    int n = w.n();
    int dim = 2 * n;
    int vars = dim * dim;
    RationalMatrix omega = omegaMatrix(w);
    auto annih = leftAnnihilator(omega);

    std::vector<std::vector<mpq_class>> rows;
    auto newRow = [&]() -> std::vector<mpq_class>& {
        rows.emplace_back(static_cast<std::size_t>(vars), 0);
        return rows.back();
    };

    // x * omega = 0
    for (int i = 0; i < dim; ++i)
        for (int c = 0; c < n; ++c) {
            auto& row = newRow();
            for (int k = 0; k < dim; ++k)
                if (omega.at(k, c) != 0)
                    row[static_cast<std::size_t>(flat(i, k, dim))] += omega.at(k, c);
        }
    // Im x inside [omega]: A x = 0
    for (const auto& a : annih)
        for (int j = 0; j < dim; ++j) {
            auto& row = newRow();
            for (int k = 0; k < dim; ++k)
                if (a[static_cast<std::size_t>(k)] != 0)
                    row[static_cast<std::size_t>(flat(k, j, dim))] += a[static_cast<std::size_t>(k)];
        }
    // x11 strictly upper, x22 strictly lower
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= i; ++j)
            newRow()[static_cast<std::size_t>(flat(i, j, dim))] = 1;
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j)
            newRow()[static_cast<std::size_t>(flat(n + i, n + j, dim))] = 1;
    // CI: x^T J + J x = 0
    if (flavor == Flavor::CI) {
        RationalMatrix j = symplecticForm(n);
        for (int a = 0; a < dim; ++a)
            for (int b = 0; b < dim; ++b) {
                auto& row = newRow();
                for (int k = 0; k < dim; ++k) {
                    if (j.at(k, b) != 0) row[static_cast<std::size_t>(flat(k, a, dim))] += j.at(k, b);
                    if (j.at(a, k) != 0) row[static_cast<std::size_t>(flat(k, b, dim))] += j.at(a, k);
                }
            }
    }

    RationalMatrix sys(static_cast<int>(rows.size()), vars);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (int j = 0; j < vars; ++j) sys.at(static_cast<int>(i), j) = rows[i][static_cast<std::size_t>(j)];
    return kernel_basis(sys);
}

std::string fiberTag(const ConormalFiber& f) {
    return (f.flavor == Flavor::AIII ? std::string("aiii|") : std::string("ci|")) +
           f.omega.tau1.str() + "|" + f.omega.tau2.str();
}

struct InvariantTuple {
    Partition top, bottom, exotic;
};

bool tupleLeq(const InvariantTuple& a, const InvariantTuple& b) {
    return dominance_leq(a.top, b.top) && dominance_leq(a.bottom, b.bottom) &&
           dominance_leq(a.exotic, b.exotic);
}

InvariantTuple invariantsOf(const RationalMatrix& x, int n) {
    InvariantTuple t;
    t.top = jordan_type_nilpotent(x.block(0, 0, n, n));
    t.bottom = jordan_type_nilpotent(x.block(n, n, n, n));
    GradedNilpotent e{n, x.block(0, n, n, n), x.block(n, 0, n, n)};
    t.exotic = jordan_type_nilpotent(e.assemble());
    return t;
}

}  // namespace

RationalMatrix ConormalFiber::element(int i) const {
    int d = 2 * n;
    RationalMatrix m(d, d);
    const auto& v = space.basis()[static_cast<std::size_t>(i)];
    for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) m.at(r, c) = v[static_cast<std::size_t>(flat(r, c, d))];
    return m;
}

RationalMatrix ConormalFiber::combination(const std::vector<int>& coeffs) const {
    if (static_cast<int>(coeffs.size()) != dim())
        throw std::invalid_argument("ConormalFiber: coefficient count must match dimension");
    int d = 2 * n;
    RationalMatrix m(d, d);
    for (int b = 0; b < dim(); ++b) {
        if (coeffs[static_cast<std::size_t>(b)] == 0) continue;
        const auto& v = space.basis()[static_cast<std::size_t>(b)];
        for (int r = 0; r < d; ++r)
            for (int c = 0; c < d; ++c)
                m.at(r, c) += coeffs[static_cast<std::size_t>(b)] * v[static_cast<std::size_t>(flat(r, c, d))];
    }
    return m;
}

ConormalFiber conormal_fiber_basis(const OmegaPair& w) {
    if (!is_valid_pair(w)) throw std::invalid_argument("conormal_fiber_basis: pair has a zero column");
    OmegaPair canon = canonicalize(w).first.reconstruct();
    ConormalFiber f;
    f.n = w.n();
    f.omega = canon;
    f.flavor = Flavor::AIII;
    f.space = fiberSpace(canon, Flavor::AIII);
    return f;
}

ConormalFiber ci_conormal_fiber_basis(const OmegaPair& w) {
    if (!is_valid_pair(w)) throw std::invalid_argument("ci_conormal_fiber_basis: pair has a zero column");
    if (!is_sigma_stable(w))
        throw std::domain_error("ci_conormal_fiber_basis: class is not sigma-stable");
    OmegaPair canon = canonicalize(w).first.reconstruct();
    ConormalFiber f;
    f.n = w.n();
    f.omega = canon;
    f.flavor = Flavor::CI;
    f.space = fiberSpace(canon, Flavor::CI);
    return f;
}

RationalMatrix sample_generic(const ConormalFiber& f, std::uint64_t seed, int trials, int bound) {
    if (trials < 1 || bound < 1)
        throw std::invalid_argument("sample_generic: trials and bound must be positive");
    if (f.dim() == 0) return RationalMatrix(2 * f.n, 2 * f.n);

    SplitMix64 rng(derive_stream(seed, fiberTag(f)));
    std::vector<RationalMatrix> samples;
    std::vector<InvariantTuple> tuples;
    for (int t = 0; t < trials; ++t) {
        std::vector<int> coeffs(static_cast<std::size_t>(f.dim()));
        for (auto& c : coeffs) c = rng.uniform(-bound, bound);
        RationalMatrix x = f.combination(coeffs);
        if (!(x * x).isZero())
            throw std::logic_error("sample_generic: fiber element does not square to zero");
        samples.push_back(std::move(x));
        tuples.push_back(invariantsOf(samples.back(), f.n));
    }
    for (std::size_t best = 0; best < samples.size(); ++best) {
        bool maximal = true;
        for (std::size_t other = 0; other < samples.size() && maximal; ++other)
            if (!tupleLeq(tuples[other], tuples[best])) maximal = false;
        if (maximal) return samples[best];
    }
    throw GenericityError("sample_generic: invariant tuples are pairwise incomparable; raise trials or bound");
}

PhiAiii phi_oracle_aiii(const OmegaPair& w, std::uint64_t seed, int trials, int bound) {
    ConormalFiber f = conormal_fiber_basis(w);
    RationalMatrix x = sample_generic(f, seed, trials, bound);
    int n = f.n;
    PhiAiii out;
    out.lambda = jordan_type_nilpotent(x.block(0, 0, n, n));
    out.mu = jordan_type_nilpotent(x.block(n, n, n, n));
    GradedNilpotent e{n, x.block(0, n, n, n), x.block(n, 0, n, n)};
    jordan_type_nilpotent(e.assemble());  // nilpotency of x^{-theta}
    out.exotic = signed_diagram_graded(e);
    return out;
}

PhiCi phi_oracle_ci(const OmegaPair& w, std::uint64_t seed, int trials, int bound) {
    ConormalFiber f = ci_conormal_fiber_basis(w);
    RationalMatrix x = sample_generic(f, seed, trials, bound);
    int n = f.n;
    PhiCi out;
    out.lambda = jordan_type_nilpotent(x.block(0, 0, n, n));
    GradedNilpotent e{n, x.block(0, n, n, n), x.block(n, 0, n, n)};
    out.exotic = signed_diagram_graded(e);
    if (!is_ci_diagram(out.exotic))
        throw std::logic_error("phi_oracle_ci: exotic value escaped SYD_CI");
    return out;
}

int orbit_dimension(const OmegaPair& w, Flavor flavor) {
    if (!is_valid_pair(w)) throw std::invalid_argument("orbit_dimension: pair has a zero column");
    if (flavor == Flavor::CI && !is_sigma_stable(w))
        throw std::domain_error("orbit_dimension: class is not sigma-stable");
    OmegaPair canon = canonicalize(w).first.reconstruct();
    int n = w.n();
    RationalMatrix omega = omegaMatrix(canon);
    auto annih = leftAnnihilator(omega);
    RationalMatrix annihM(static_cast<int>(annih.size()), 2 * n);
    for (std::size_t i = 0; i < annih.size(); ++i)
        for (int j = 0; j < 2 * n; ++j)
            annihM.at(static_cast<int>(i), j) = annih[i][static_cast<std::size_t>(j)];

    // basis of the acting Borel directions
    std::vector<RationalMatrix> directions;
    if (flavor == Flavor::AIII) {
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) {
                RationalMatrix k(2 * n, 2 * n);
                k.at(i, j) = 1;  // upper-triangular first factor
                directions.push_back(k);
            }
        for (int i = 0; i < n; ++i)
            for (int j = 0; j <= i; ++j) {
                RationalMatrix k(2 * n, 2 * n);
                k.at(n + i, n + j) = 1;  // lower-triangular second factor
                directions.push_back(k);
            }
    } else {
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) {
                RationalMatrix k(2 * n, 2 * n);
                k.at(i, j) = 1;
                k.at(n + j, n + i) = -1;  // diag(a, -a^T)
                directions.push_back(k);
            }
    }

    // stabilizer condition: A * k * omega = 0, linear in the direction coords
    int rows = annihM.rows() * n;
    RationalMatrix sys(rows, static_cast<int>(directions.size()));
    for (std::size_t u = 0; u < directions.size(); ++u) {
        RationalMatrix prod = annihM * directions[u] * omega;
        int idx = 0;
        for (int i = 0; i < prod.rows(); ++i)
            for (int j = 0; j < prod.cols(); ++j) sys.at(idx++, static_cast<int>(u)) = prod.at(i, j);
    }
    int nullity = static_cast<int>(directions.size()) - rank_rational(sys);
    int groupDim = flavor == Flavor::AIII ? 2 * n * n : n * n;
    return groupDim - nullity;
}

int ambient_dimension(int n, Flavor flavor) {
    return flavor == Flavor::AIII ? n * n + n * (n - 1) : n * n;
}

}  // namespace dfv
