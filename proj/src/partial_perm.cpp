#include "dfv/partial_perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace dfv {

PartialPermutation::PartialPermutation(int n, std::vector<int> image)
    : n_(n), image_(std::move(image)) {
    if (n_ <= 0) throw std::invalid_argument("PartialPermutation: n must be positive");
    if (static_cast<int>(image_.size()) != n_)
        throw std::invalid_argument("PartialPermutation: image length must equal n");
    std::vector<char> seen(static_cast<std::size_t>(n_) + 1, 0);
    for (int v : image_) {
        if (v < 0 || v > n_)
            throw std::invalid_argument("PartialPermutation: values must lie in {0,...,n}");
        if (v != 0) {
            if (seen[static_cast<std::size_t>(v)])
                throw std::invalid_argument("PartialPermutation: nonzero values must be distinct");
            seen[static_cast<std::size_t>(v)] = 1;
        }
    }
}

PartialPermutation PartialPermutation::identity(int n) {
    std::vector<int> img(static_cast<std::size_t>(n));
    std::iota(img.begin(), img.end(), 1);
    return PartialPermutation(n, std::move(img));
}

PartialPermutation PartialPermutation::zero(int n) {
    return PartialPermutation(n, std::vector<int>(static_cast<std::size_t>(n), 0));
}

PartialPermutation PartialPermutation::parse(const std::string& text) {
    std::vector<int> img;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        std::size_t pos = 0;
        int v = std::stoi(tok, &pos);
        while (pos < tok.size() && std::isspace(static_cast<unsigned char>(tok[pos]))) ++pos;
        if (pos != tok.size()) throw std::invalid_argument("PartialPermutation: bad token '" + tok + "'");
        img.push_back(v);
    }
    if (img.empty()) throw std::invalid_argument("PartialPermutation: empty value list");
    return PartialPermutation(static_cast<int>(img.size()), std::move(img));
}

std::string PartialPermutation::str() const {
    std::string out;
    for (std::size_t i = 0; i < image_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(image_[i]);
    }
    return out;
}

int PartialPermutation::rank() const {
    int r = 0;
    for (int v : image_)
        if (v != 0) ++r;
    return r;
}

bool is_valid_pair(const OmegaPair& w) {
    if (w.tau1.n() != w.tau2.n())
        throw std::invalid_argument("OmegaPair: partial permutations must share n");
    for (int j = 1; j <= w.n(); ++j)
        if (w.tau1(j) == 0 && w.tau2(j) == 0) return false;
    return true;
}

OmegaPair CanonicalData::reconstruct() const {
    std::vector<int> img1(static_cast<std::size_t>(n), 0), img2(static_cast<std::size_t>(n), 0);
    for (std::size_t k = 0; k < J.size(); ++k) {
        img1[static_cast<std::size_t>(J[k] - 1)] = sigma.values[k];
        img2[static_cast<std::size_t>(J[k] - 1)] = J[k];
    }
    for (int m : M) img2[static_cast<std::size_t>(m - 1)] = m;
    for (std::size_t k = 0; k < Mp.size(); ++k)
        img1[static_cast<std::size_t>(Mp[k] - 1)] = Lp[k];
    return {PartialPermutation(n, std::move(img1)), PartialPermutation(n, std::move(img2))};
}

std::pair<std::vector<int>, std::vector<int>> canonical_sort_key(const CanonicalData& d) {
    OmegaPair w = d.reconstruct();
    return {w.tau1.image(), w.tau2.image()};
}

std::pair<CanonicalData, std::vector<int>> canonicalize(const OmegaPair& w) {
    if (!is_valid_pair(w)) throw std::invalid_argument("canonicalize: pair has a zero column");
    int n = w.n();
    std::vector<int> oldJ, oldM, oldMp;
    for (int j = 1; j <= n; ++j) {
        if (w.tau1(j) == 0)
            oldM.push_back(j);
        else if (w.tau2(j) == 0)
            oldMp.push_back(j);
        else
            oldJ.push_back(j);
    }

    // new column label of every old column: tau2-value where defined, so that
    // the relabeled tau2 is the identity on its image
    std::vector<int> s(static_cast<std::size_t>(n), 0);  // s[newpos-1] = old column
    std::vector<char> used(static_cast<std::size_t>(n) + 1, 0);
    for (int j : oldJ) {
        s[static_cast<std::size_t>(w.tau2(j) - 1)] = j;
        used[static_cast<std::size_t>(w.tau2(j))] = 1;
    }
    for (int j : oldM) {
        s[static_cast<std::size_t>(w.tau2(j) - 1)] = j;
        used[static_cast<std::size_t>(w.tau2(j))] = 1;
    }
    // remaining slots host the Mp columns, sorted so tau1 is increasing on them
    std::vector<int> slots;
    for (int v = 1; v <= n; ++v)
        if (!used[static_cast<std::size_t>(v)]) slots.push_back(v);
    std::vector<int> mpByValue = oldMp;
    std::sort(mpByValue.begin(), mpByValue.end(),
              [&](int a, int b) { return w.tau1(a) < w.tau1(b); });
    for (std::size_t k = 0; k < slots.size(); ++k)
        s[static_cast<std::size_t>(slots[k] - 1)] = mpByValue[k];

    CanonicalData d;
    d.n = n;
    d.r = static_cast<int>(oldJ.size());
    d.p = static_cast<int>(oldM.size());
    d.q = static_cast<int>(oldMp.size());
    for (int j : oldJ) d.J.push_back(w.tau2(j));
    for (int j : oldM) d.M.push_back(w.tau2(j));
    d.Mp = slots;
    std::sort(d.J.begin(), d.J.end());
    std::sort(d.M.begin(), d.M.end());

    std::vector<int> sigmaVals;
    for (int jc : d.J) {
        int oldCol = s[static_cast<std::size_t>(jc - 1)];
        sigmaVals.push_back(w.tau1(oldCol));
        d.I.push_back(w.tau1(oldCol));
    }
    d.sigma = TwoLineArray(d.J, sigmaVals);
    std::sort(d.I.begin(), d.I.end());
    for (int j : mpByValue) d.Lp.push_back(w.tau1(j));
    std::vector<char> inILp(static_cast<std::size_t>(n) + 1, 0);
    for (int v : d.I) inILp[static_cast<std::size_t>(v)] = 1;
    for (int v : d.Lp) inILp[static_cast<std::size_t>(v)] = 1;
    for (int v = 1; v <= n; ++v)
        if (!inILp[static_cast<std::size_t>(v)]) d.L.push_back(v);

    return {std::move(d), std::move(s)};
}

namespace {

void subsetsOf(const std::vector<int>& pool, int k, std::vector<std::vector<int>>& out) {
    std::vector<int> cur;
    auto rec = [&](auto&& self, std::size_t start) -> void {
        if (static_cast<int>(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        for (std::size_t i = start; i < pool.size(); ++i) {
            if (pool.size() - i < static_cast<std::size_t>(k) - cur.size()) break;
            cur.push_back(pool[i]);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
}

std::vector<int> complement(int n, const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<char> in(static_cast<std::size_t>(n) + 1, 0);
    for (int v : a) in[static_cast<std::size_t>(v)] = 1;
    for (int v : b) in[static_cast<std::size_t>(v)] = 1;
    std::vector<int> out;
    for (int v = 1; v <= n; ++v)
        if (!in[static_cast<std::size_t>(v)]) out.push_back(v);
    return out;
}

}  // namespace

std::vector<CanonicalData> enumerate_orbit_reps(int n) {
    if (n < 1) throw std::invalid_argument("enumerate_orbit_reps: n must be positive");
    std::vector<int> all(static_cast<std::size_t>(n));
    std::iota(all.begin(), all.end(), 1);

    std::vector<CanonicalData> out;
    for (int r = 0; r <= n; ++r) {
        for (int p = 0; p + r <= n; ++p) {
            int q = n - r - p;
            std::vector<std::vector<int>> Js, Is;
            subsetsOf(all, r, Js);
            subsetsOf(all, r, Is);
            for (const auto& J : Js) {
                std::vector<std::vector<int>> Ms;
                subsetsOf(complement(n, J, {}), p, Ms);
                for (const auto& M : Ms) {
                    auto Mp = complement(n, J, M);
                    for (const auto& I : Is) {
                        std::vector<std::vector<int>> Ls;
                        subsetsOf(complement(n, I, {}), p, Ls);
                        for (const auto& L : Ls) {
                            auto Lp = complement(n, I, L);
                            std::vector<int> vals = I;
                            do {
                                CanonicalData d;
                                d.n = n;
                                d.r = r;
                                d.p = p;
                                d.q = q;
                                d.J = J;
                                d.M = M;
                                d.Mp = Mp;
                                d.I = I;
                                d.L = L;
                                d.Lp = Lp;
                                d.sigma = TwoLineArray(J, vals);
                                out.push_back(std::move(d));
                            } while (std::next_permutation(vals.begin(), vals.end()));
                        }
                    }
                }
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const CanonicalData& a, const CanonicalData& b) {
        return canonical_sort_key(a) < canonical_sort_key(b);
    });
    return out;
}

std::uint64_t count_orbits(int n) {
    if (n < 1) throw std::invalid_argument("count_orbits: n must be positive");
    if (n > 16) throw std::invalid_argument("count_orbits: n too large for exact 64-bit count");
    auto fact = [](int k) {
        std::uint64_t f = 1;
        for (int i = 2; i <= k; ++i) f *= static_cast<std::uint64_t>(i);
        return f;
    };
    std::uint64_t total = 0;
    for (int r = 0; r <= n; ++r)
        for (int p = 0; p + r <= n; ++p) {
            int q = n - r - p;
            std::uint64_t multinom = fact(n) / (fact(r) * fact(p) * fact(q));
            total += fact(r) * multinom * multinom;
        }
    return total;
}

}  // namespace dfv
