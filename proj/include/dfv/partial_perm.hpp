#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "dfv/tableau.hpp"

namespace dfv {

/// Partial permutation of [n]: injective on its support, 0 marks "undefined".
/// Values are 1-based; column j of the associated matrix is e_{image[j]} (or 0).
class PartialPermutation {
public:
    PartialPermutation() = default;
    PartialPermutation(int n, std::vector<int> image);

    static PartialPermutation identity(int n);
    static PartialPermutation zero(int n);

    /// Parses a comma-separated value list, e.g. "2,0,1".
    static PartialPermutation parse(const std::string& text);
    std::string str() const;

    int n() const { return n_; }
    /// Image of j (1-based); 0 when undefined.
    int operator()(int j) const { return image_[static_cast<std::size_t>(j - 1)]; }
    const std::vector<int>& image() const { return image_; }
    int rank() const;

    friend bool operator==(const PartialPermutation&, const PartialPermutation&) = default;

private:
    int n_ = 0;
    std::vector<int> image_;
};

struct OmegaPair {
    PartialPermutation tau1, tau2;

    int n() const { return tau1.n(); }
    friend bool operator==(const OmegaPair&, const OmegaPair&) = default;
};

/// True iff every column carries a nonzero entry in tau1 or tau2; equivalent to
/// the stacked 2n x n matrix having rank n (each basis vector occurs in at most
/// one column, so nonzero columns are independent).
bool is_valid_pair(const OmegaPair& w);

/// Canonical-form data of an S_n-class, as produced by canonicalize().
/// J, M, Mp partition [n] (column labels of the canonical representative);
/// I, L, Lp partition [n] with |I| = r, |L| = p, |Lp| = q. All sets ascending.
struct CanonicalData {
    int n = 0;
    int r = 0, p = 0, q = 0;
    std::vector<int> J, M, Mp;
    std::vector<int> I, L, Lp;
    TwoLineArray sigma;  // bijection J -> I

    /// The canonical representative: tau2 fixes J u M pointwise and kills Mp;
    /// tau1 is sigma on J, kills M, and maps Mp to Lp order-preservingly.
    OmegaPair reconstruct() const;

    friend bool operator==(const CanonicalData&, const CanonicalData&) = default;
};

/// Lexicographic key used for the stable ordering of orbit classes.
std::pair<std::vector<int>, std::vector<int>> canonical_sort_key(const CanonicalData& d);

/// Returns the canonical data of the S_n-class of w together with a column
/// permutation s (one-line, 1-based) such that w o s is the canonical pair.
std::pair<CanonicalData, std::vector<int>> canonicalize(const OmegaPair& w);

/// One canonical representative per S_n-class, sorted by canonical_sort_key.
std::vector<CanonicalData> enumerate_orbit_reps(int n);

/// Closed-form class count: sum over r+p+q=n of r! * multinomial(n; r,p,q)^2.
std::uint64_t count_orbits(int n);

}  // namespace dfv
