#include <doctest.h>

#include <algorithm>
#include <set>

#include "dfv/syd.hpp"

using namespace dfv;

namespace {

SignedYoungDiagram D(std::vector<std::string> rows) { return SignedYoungDiagram::parse(rows); }

std::set<std::vector<std::string>> asSet(const std::vector<SignedYoungDiagram>& v) {
    std::set<std::vector<std::string>> out;
    for (const auto& d : v) out.insert(d.strings());
    return out;
}

}  // namespace

TEST_CASE("parsing and canonical row order") {
    SignedYoungDiagram d = D({"-", "+-+"});
    CHECK(d.strings() == std::vector<std::string>{"+-+", "-"});
    CHECK(d.totalBoxes() == 4);
    CHECK(d.plusCount() == 2);
    CHECK(d.shape() == Partition({3, 1}));
    CHECK_THROWS_AS(D({"++"}), std::invalid_argument);     // not alternating
    CHECK_THROWS_AS(D({"+-", "+"}), std::invalid_argument);  // signature (2,1)
}

TEST_CASE("signature (1,1) diagrams") {
    auto all = enumerate_syd(1);
    CHECK(asSet(all) == std::set<std::vector<std::string>>{
                            {"+-"}, {"-+"}, {"+", "-"}});
}

TEST_CASE("signature (2,2) diagrams match the known lists") {
    auto all = enumerate_syd(2);
    std::set<std::vector<std::string>> expected{
        {"+-+-"},
        {"-+-+"},
        {"+-+", "-"},
        {"-+-", "+"},
        {"+-", "+-"},
        {"+-", "-+"},
        {"-+", "-+"},
        {"+-", "+", "-"},
        {"-+", "+", "-"},
        {"+", "+", "-", "-"},
    };
    CHECK(all.size() == 10);
    CHECK(asSet(all) == expected);

    std::vector<SignedYoungDiagram> ci;
    for (const auto& d : all)
        if (is_ci_diagram(d)) ci.push_back(d);
    std::set<std::vector<std::string>> expectedCi = expected;
    expectedCi.erase({"+-+", "-"});
    expectedCi.erase({"-+-", "+"});
    CHECK(ci.size() == 8);
    CHECK(asSet(ci) == expectedCi);
}

TEST_CASE("every enumerated diagram is well formed") {
    for (int n = 1; n <= 4; ++n) {
        auto all = enumerate_syd(n);
        std::set<std::vector<std::string>> seen;
        for (const auto& d : all) {
            CHECK(d.totalBoxes() == 2 * n);
            CHECK(d.plusCount() == n);
            CHECK(seen.insert(d.strings()).second);
        }
    }
}

TEST_CASE("odd-row sign exchange") {
    CHECK(sigma_on_syd(D({"+-+", "-"})) == D({"-+-", "+"}));
    CHECK(sigma_on_syd(D({"+-", "-+"})) == D({"+-", "-+"}));
    for (int n = 1; n <= 4; ++n)
        for (const auto& d : enumerate_syd(n)) {
            CHECK(sigma_on_syd(sigma_on_syd(d)) == d);
            CHECK((sigma_on_syd(d) == d) == is_ci_diagram(d));
        }
}

TEST_CASE("orbit label embeddings") {
    NilpotentLabelTheta t = embed_nilpotent_label(Partition({2, 1}));
    CHECK(t.lambda == Partition({2, 1}));
    CHECK(t.mu == Partition({2, 1}));

    SignedYoungDiagram ok = D({"+-", "+-"});
    CHECK(embed_nilpotent_label(ok) == ok);
    CHECK_THROWS_AS(embed_nilpotent_label(D({"+-+", "-"})), std::domain_error);
}
