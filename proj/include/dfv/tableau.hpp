#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "dfv/partition.hpp"

namespace dfv {

/// Two-line array of a bijection sigma: J -> I, domain listed strictly increasing.
struct TwoLineArray {
    std::vector<int> domain;
    std::vector<int> values;

    TwoLineArray() = default;
    TwoLineArray(std::vector<int> dom, std::vector<int> vals);

    int size() const { return static_cast<int>(domain.size()); }

    friend bool operator==(const TwoLineArray&, const TwoLineArray&) = default;
};

/// Standard tableau with pairwise distinct positive entries from an arbitrary
/// finite set, strictly increasing along rows and down columns.
class Tableau {
public:
    Tableau() = default;
    explicit Tableau(std::vector<std::vector<int>> rows);

    /// Column tableau [A] of shape (1^|A|), entries sorted increasing downward.
    static Tableau column(std::vector<int> entries);

    const std::vector<std::vector<int>>& rows() const { return rows_; }
    Partition shape() const;
    bool empty() const { return rows_.empty(); }
    int cellCount() const;
    std::vector<int> entries() const;  // sorted ascending
    int width() const { return rows_.empty() ? 0 : static_cast<int>(rows_[0].size()); }

    friend bool operator==(const Tableau&, const Tableau&) = default;
    friend std::strong_ordering operator<=>(const Tableau& a, const Tableau& b) {
        return a.rows_ <=> b.rows_;
    }

private:
    std::vector<std::vector<int>> rows_;
};

/// Standard skew tableau: cells of outer/inner with distinct entries increasing
/// along rows and down columns. inner_ is padded with zeros to the row count.
class SkewTableau {
public:
    SkewTableau() = default;
    SkewTableau(std::vector<int> inner, std::vector<std::vector<int>> rows);

    const std::vector<int>& inner() const { return inner_; }
    const std::vector<std::vector<int>>& rows() const { return rows_; }
    Partition outerShape() const;
    Partition innerShape() const;
    int cellCount() const;
    std::vector<int> entries() const;  // sorted ascending
    bool straight() const;

    friend bool operator==(const SkewTableau&, const SkewTableau&) = default;

private:
    std::vector<int> inner_;
    std::vector<std::vector<int>> rows_;
};

Tableau transpose_tableau(const Tableau& t);

/// Row-insertion Robinson-Schensted: returns (insertion tableau, recording tableau).
/// Entries of the first are the values, of the second the domain.
std::pair<Tableau, Tableau> rs_correspondence(const TwoLineArray& arr);

/// Reverse insertion; inverse of rs_correspondence on pairs of equal shape.
TwoLineArray rs_inverse(const Tableau& t1, const Tableau& t2);

/// Star concatenation: first piece at the lower left, each later piece strictly
/// above and to the right of the previous one.
SkewTableau star_concat(const std::vector<Tableau>& pieces);

/// Jeu-de-taquin rectification by inward slides. The overload taking a chooser
/// selects which removable inner corner to slide next (index into the current
/// list of removable corners, ordered top to bottom); the result does not
/// depend on the choice, which the tests assert.
Tableau jdt_rectify(const SkewTableau& s);
Tableau jdt_rectify(const SkewTableau& s, const std::function<int(int)>& chooseCorner);

}  // namespace dfv
