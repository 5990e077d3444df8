#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "dfv/rng.hpp"
#include "dfv/tableau.hpp"

using namespace dfv;

namespace {

Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }

Tableau T(std::vector<std::vector<int>> rows) { return Tableau(std::move(rows)); }

// all permutations of {1..n} as two-line arrays
std::vector<TwoLineArray> allPermutations(int n) {
    std::vector<int> dom(static_cast<std::size_t>(n));
    std::iota(dom.begin(), dom.end(), 1);
    std::vector<int> vals = dom;
    std::vector<TwoLineArray> out;
    do {
        out.emplace_back(dom, vals);
    } while (std::next_permutation(vals.begin(), vals.end()));
    return out;
}

// random standard skew tableau with at most maxCells cells
SkewTableau randomSkew(SplitMix64& rng, int maxCells) {
    // random outer shape with at most maxCells boxes
    std::vector<int> outer;
    int left = 1 + rng.uniform(0, maxCells - 1);
    int cap = 1 + rng.uniform(0, 3);
    while (left > 0) {
        int row = std::min(left, 1 + rng.uniform(0, cap - 1));
        if (!outer.empty()) row = std::min(row, outer.back());
        outer.push_back(row);
        left -= row;
    }
    // random inner shape inside outer, built bottom-up; keep at least one cell
    std::vector<int> inner(outer.size(), 0);
    for (std::size_t i = outer.size(); i-- > 0;) {
        int lo = (i + 1 < outer.size()) ? inner[i + 1] : 0;
        inner[i] = std::min(outer[i], lo + rng.uniform(0, std::max(0, outer[i] - lo)));
    }
    if (inner[0] == outer[0]) inner[0] = outer[0] - 1;
    for (std::size_t i = 1; i < inner.size(); ++i) inner[i] = std::min(inner[i], inner[i - 1]);
    // standard filling: repeatedly place the next entry at a random addable cell
    struct Cell {
        int r, c;
    };
    std::vector<Cell> cellsList;
    for (std::size_t i = 0; i < outer.size(); ++i)
        for (int c = inner[i]; c < outer[i]; ++c) cellsList.push_back({static_cast<int>(i), c});
    std::vector<std::vector<int>> grid(outer.size());
    for (std::size_t i = 0; i < outer.size(); ++i) grid[i].assign(static_cast<std::size_t>(outer[i]), 0);
    int next = 1;
    std::vector<Cell> remaining = cellsList;
    while (!remaining.empty()) {
        // candidates: cells whose left and upper neighbors are filled (or absent)
        std::vector<std::size_t> ready;
        for (std::size_t k = 0; k < remaining.size(); ++k) {
            auto [r, c] = remaining[k];
            bool leftOk = c == inner[static_cast<std::size_t>(r)] || grid[static_cast<std::size_t>(r)][static_cast<std::size_t>(c - 1)] != 0;
            bool upOk = r == 0 || c >= outer[static_cast<std::size_t>(r - 1)] || c < inner[static_cast<std::size_t>(r - 1)] ||
                        grid[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c)] != 0;
            if (leftOk && upOk) ready.push_back(k);
        }
        std::size_t pick = ready[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(ready.size()) - 1))];
        auto [r, c] = remaining[pick];
        grid[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = next++;
        remaining.erase(remaining.begin() + static_cast<long>(pick));
    }
    std::vector<std::vector<int>> rows(outer.size());
    for (std::size_t i = 0; i < outer.size(); ++i)
        rows[i].assign(grid[i].begin() + inner[i], grid[i].end());
    return SkewTableau(inner, rows);
}

}  // namespace

TEST_CASE("dominance order") {
    CHECK(dominance_leq(P({1, 1}), P({2})));
    CHECK_FALSE(dominance_leq(P({2}), P({1, 1})));
    CHECK(dominance_leq(P({2, 1}), P({2, 1})));
    CHECK_THROWS_AS(dominance_leq(P({2}), P({1})), std::invalid_argument);
}

TEST_CASE("vertical strips") {
    CHECK(vertical_strip_leq(P({1}), P({2})));
    CHECK_FALSE(vertical_strip_leq(P({1}), P({3})));
    CHECK(vertical_strip_leq(P({1, 1}), P({2, 2, 1})));
    // implies containment and size growth
    SplitMix64 rng(11);
    for (int it = 0; it < 200; ++it) {
        std::vector<int> a, b;
        for (int i = 0; i < 4; ++i) a.push_back(rng.uniform(0, 3));
        std::sort(a.rbegin(), a.rend());
        b = a;
        Partition nu(a), lam(b);
        if (vertical_strip_leq(nu, lam)) {
            CHECK(lam.size() >= nu.size());
            for (int i = 0; i < 4; ++i) CHECK(nu.part(i) <= lam.part(i));
        }
    }
}

TEST_CASE("transpose") {
    CHECK(transpose_tableau(T({{5}})) == T({{5}}));
    CHECK(transpose_tableau(T({{1, 2}})) == T({{1}, {2}}));
    SplitMix64 rng(5);
    for (int it = 0; it < 200; ++it) {
        SkewTableau s = randomSkew(rng, 8);
        Tableau t = jdt_rectify(s);
        CHECK(transpose_tableau(transpose_tableau(t)) == t);
        CHECK(transpose_tableau(t).shape() == t.shape().conjugate());
    }
}

TEST_CASE("row insertion pairs") {
    auto [t1, t2] = rs_correspondence(TwoLineArray({1, 2, 3}, {1, 2, 3}));
    CHECK(t1 == T({{1, 2, 3}}));
    CHECK(t2 == T({{1, 2, 3}}));

    auto [u1, u2] = rs_correspondence(TwoLineArray({1, 2}, {2, 1}));
    CHECK(u1 == T({{1}, {2}}));
    CHECK(u2 == T({{1}, {2}}));

    auto [v1, v2] = rs_correspondence(TwoLineArray({1, 3}, {5, 2}));
    CHECK(v1 == T({{2}, {5}}));
    CHECK(v2 == T({{1}, {3}}));
}

TEST_CASE("insertion is a bijection on small permutations") {
    for (int n = 1; n <= 5; ++n) {
        std::map<std::pair<Tableau, Tableau>, TwoLineArray> seen;
        for (const auto& arr : allPermutations(n)) {
            auto pair = rs_correspondence(arr);
            CHECK(pair.first.shape() == pair.second.shape());
            CHECK(pair.first.entries() == arr.domain);  // values are 1..n here
            CHECK(seen.emplace(pair, arr).second);
            TwoLineArray back = rs_inverse(pair.first, pair.second);
            CHECK(back == arr);
        }
    }
    // arbitrary entry sets round-trip too
    SplitMix64 rng(77);
    for (int it = 0; it < 200; ++it) {
        int k = 1 + rng.uniform(0, 4);
        std::set<int> dom, vals;
        while (static_cast<int>(dom.size()) < k) dom.insert(rng.uniform(1, 30));
        while (static_cast<int>(vals.size()) < k) vals.insert(rng.uniform(1, 30));
        std::vector<int> d(dom.begin(), dom.end()), v(vals.begin(), vals.end());
        for (int i = k - 1; i > 0; --i) std::swap(v[static_cast<std::size_t>(i)], v[static_cast<std::size_t>(rng.uniform(0, i))]);
        TwoLineArray arr(d, v);
        auto [p, q] = rs_correspondence(arr);
        CHECK(rs_inverse(p, q) == arr);
    }
}

TEST_CASE("star placement") {
    Tableau a = T({{1}});
    SkewTableau one = star_concat({a});
    CHECK(one.straight());
    CHECK(one.cellCount() == 1);

    SkewTableau two = star_concat({T({{1}}), T({{2}})});
    CHECK(two.cellCount() == 2);
    CHECK(two.outerShape() == P({2, 1}));
    CHECK(two.innerShape() == P({1}));
    CHECK(two.rows()[0] == std::vector<int>{2});  // later piece on top right
    CHECK(two.rows()[1] == std::vector<int>{1});

    SkewTableau four = star_concat({T({{1}, {2}}), T({{3, 4}})});
    CHECK(four.cellCount() == 4);
    CHECK(four.outerShape() == P({3, 1, 1}));
    CHECK(four.rows()[0] == std::vector<int>{3, 4});

    CHECK_THROWS_AS(star_concat({T({{1}}), T({{1}})}), std::invalid_argument);
}

TEST_CASE("rectification of the two-box skews") {
    CHECK(jdt_rectify(star_concat({T({{1}}), T({{2}})})) == T({{1, 2}}));
    CHECK(jdt_rectify(star_concat({T({{2}}), T({{1}})})) == T({{1}, {2}}));
    // straight input unchanged
    Tableau t = T({{1, 3}, {2}});
    CHECK(jdt_rectify(star_concat({t})) == t);
}

TEST_CASE("rectification is confluent and preserves entries") {
    SplitMix64 rng(2024);
    for (int it = 0; it < 300; ++it) {
        SkewTableau s = randomSkew(rng, 8);
        SplitMix64 orderA(derive_stream(1000 + static_cast<std::uint64_t>(it), "a"));
        SplitMix64 orderB(derive_stream(2000 + static_cast<std::uint64_t>(it), "b"));
        Tableau ta = jdt_rectify(s, [&](int k) { return orderA.uniform(0, k - 1); });
        Tableau tb = jdt_rectify(s, [&](int k) { return orderB.uniform(0, k - 1); });
        CHECK(ta == tb);
        CHECK(ta.entries() == s.entries());
        CHECK(ta.cellCount() == s.cellCount());
    }
}
