#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>

#include "dfv/gen_rs.hpp"

using namespace dfv;

namespace {

PartialPermutation PP(const std::string& s) { return PartialPermutation::parse(s); }

Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }

}  // namespace

TEST_CASE("generalized Steinberg map on hand examples") {
    auto both = phi_theta_comb({PartialPermutation::identity(2), PartialPermutation::identity(2)});
    CHECK(both.first == P({1, 1}));
    CHECK(both.second == P({1, 1}));

    auto swapped = phi_theta_comb({PP("2,1"), PP("1,2")});
    CHECK(swapped.first == P({2}));
    CHECK(swapped.second == P({2}));

    auto partial = phi_theta_comb({PP("1,0"), PP("1,2")});
    CHECK(partial.first == P({2}));
    CHECK(partial.second == P({2}));
}

TEST_CASE("genRS tuple on hand examples") {
    GenRSTuple t = gen_rs({PP("1,0"), PP("1,2")});
    CHECK(t.nu == P({1}));
    CHECK(t.lambda_prime == P({2}));
    CHECK(t.mu_prime == P({2}));
    CHECK(t.hatT1.shape() == P({2}));
    CHECK(t.hatT2.shape() == P({2}));
    CHECK(t.rpq == std::array<int, 3>{1, 1, 0});

    for (int n = 1; n <= 4; ++n) {
        GenRSTuple id = gen_rs({PartialPermutation::identity(n), PartialPermutation::identity(n)});
        std::vector<int> ones(static_cast<std::size_t>(n), 1);
        CHECK(id.nu == P(ones));
        CHECK(id.lambda_prime == P(ones));
        CHECK(id.mu_prime == P(ones));
        std::vector<int> col(static_cast<std::size_t>(n));
        std::iota(col.begin(), col.end(), 1);
        CHECK(id.hatT1 == Tableau::column(col));
        CHECK(id.hatT2 == Tableau::column(col));
    }

    // r = 0: the tuple is built from the four column tableaux alone
    GenRSTuple z = gen_rs({PartialPermutation::identity(2), PartialPermutation::zero(2)});
    CHECK(z.nu == Partition());
    CHECK(z.rpq == std::array<int, 3>{0, 0, 2});
    CHECK(z.hatT1 == Tableau::column({1, 2}));
    CHECK(z.hatT2 == Tableau::column({1, 2}));
}

TEST_CASE("chain conditions and sizes hold for every class") {
    for (int n = 1; n <= 3; ++n) {
        for (const auto& d : enumerate_orbit_reps(n)) {
            GenRSTuple t = gen_rs(d);
            CHECK(t.nu.size() == d.r);
            CHECK(t.lambda_prime.size() == d.r + d.p);
            CHECK(t.mu_prime.size() == d.r + d.p);
            CHECK(t.hatT1.cellCount() == n);
            CHECK(t.hatT2.cellCount() == n);
            CHECK(vertical_strip_leq(t.nu, t.lambda_prime));
            CHECK(vertical_strip_leq(t.lambda_prime, t.hatT1.shape()));
            CHECK(vertical_strip_leq(t.nu, t.mu_prime));
            CHECK(vertical_strip_leq(t.mu_prime, t.hatT2.shape()));
        }
    }
}

TEST_CASE("genRS is injective on classes") {
    for (int n = 1; n <= 3; ++n) {
        std::map<std::string, int> seen;
        for (const auto& d : enumerate_orbit_reps(n)) {
            GenRSTuple t = gen_rs(d);
            std::string key;
            auto addTab = [&key](const Tableau& tab) {
                for (const auto& row : tab.rows()) {
                    for (int e : row) key += std::to_string(e) + ".";
                    key += "/";
                }
                key += ";";
            };
            addTab(t.hatT1);
            addTab(t.hatT2);
            for (int part : t.lambda_prime.parts()) key += std::to_string(part) + ",";
            key += ";";
            for (int part : t.mu_prime.parts()) key += std::to_string(part) + ",";
            key += ";";
            for (int part : t.nu.parts()) key += std::to_string(part) + ",";
            CHECK(++seen[key] == 1);
        }
    }
}

TEST_CASE("full permutations reduce to the twisted classical shape") {
    // with tau2 = 1_n the value lands on the conjugate of the classical RS shape
    std::vector<int> vals{1, 2, 3};
    std::vector<int> dom{1, 2, 3};
    do {
        TwoLineArray arr(dom, vals);
        auto [t1, t2] = rs_correspondence(arr);
        Partition classical = t1.shape();
        auto img = phi_theta_comb({PartialPermutation(3, vals), PartialPermutation::identity(3)});
        CHECK(img.first == classical.conjugate());
        CHECK(img.second == classical.conjugate());
    } while (std::next_permutation(vals.begin(), vals.end()));
}

TEST_CASE("phi is a class function") {
    auto moved = phi_theta_comb({PP("0,1"), PP("2,1")});  // column-permuted (1,0);(1,2)
    auto base = phi_theta_comb({PP("1,0"), PP("1,2")});
    CHECK(moved == base);
}
