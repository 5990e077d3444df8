#include "dfv/syd.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace dfv {

namespace {

int plusesInRow(int length, Sign leading) {
    // signs alternate starting from the leading one
    return leading == Sign::Plus ? (length + 1) / 2 : length / 2;
}

}  // namespace

SignedYoungDiagram::SignedYoungDiagram(std::vector<Row> rows) : rows_(std::move(rows)) {
    for (const Row& r : rows_)
        if (r.length <= 0) throw std::invalid_argument("SignedYoungDiagram: row length must be positive");
    std::sort(rows_.begin(), rows_.end(), [](const Row& a, const Row& b) {
        if (a.length != b.length) return a.length > b.length;
        return a.leading == Sign::Plus && b.leading == Sign::Minus;
    });
    int total = totalBoxes();
    if (total % 2 != 0 || plusCount() * 2 != total)
        throw std::invalid_argument("SignedYoungDiagram: signature must be (n, n)");
}

SignedYoungDiagram SignedYoungDiagram::parse(const std::vector<std::string>& rows) {
    std::vector<Row> parsed;
    for (const auto& s : rows) {
        if (s.empty()) throw std::invalid_argument("SignedYoungDiagram: empty row string");
        Row r{static_cast<int>(s.size()),
              s[0] == '+' ? Sign::Plus : (s[0] == '-' ? Sign::Minus : throw std::invalid_argument(
                                                                          "SignedYoungDiagram: bad sign"))};
        for (std::size_t i = 0; i < s.size(); ++i) {
            char expect = (i % 2 == 0) == (r.leading == Sign::Plus) ? '+' : '-';
            if (s[i] != expect)
                throw std::invalid_argument("SignedYoungDiagram: signs must alternate in a row");
        }
        parsed.push_back(r);
    }
    return SignedYoungDiagram(std::move(parsed));
}

std::vector<std::string> SignedYoungDiagram::strings() const {
    std::vector<std::string> out;
    for (const Row& r : rows_) {
        std::string s;
        Sign cur = r.leading;
        for (int i = 0; i < r.length; ++i) {
            s += static_cast<char>(cur);
            cur = opposite(cur);
        }
        out.push_back(std::move(s));
    }
    return out;
}

int SignedYoungDiagram::totalBoxes() const {
    int t = 0;
    for (const Row& r : rows_) t += r.length;
    return t;
}

int SignedYoungDiagram::plusCount() const {
    int t = 0;
    for (const Row& r : rows_) t += plusesInRow(r.length, r.leading);
    return t;
}

Partition SignedYoungDiagram::shape() const {
    std::vector<int> parts;
    for (const Row& r : rows_) parts.push_back(r.length);
    std::sort(parts.rbegin(), parts.rend());
    return Partition(std::move(parts));
}

std::strong_ordering operator<=>(const SignedYoungDiagram& a, const SignedYoungDiagram& b) {
    auto key = [](const SignedYoungDiagram& d) {
        std::vector<std::pair<int, char>> k;
        for (const auto& r : d.rows_) k.emplace_back(-r.length, static_cast<char>(r.leading));
        return k;
    };
    return key(a) <=> key(b);
}

std::vector<SignedYoungDiagram> enumerate_syd(int n) {
    if (n < 1) throw std::invalid_argument("enumerate_syd: n must be positive");
    std::vector<SignedYoungDiagram> out;
    for (const Partition& shape : partitions_of(2 * n)) {
        // group equal lengths and choose how many of each start with '+'
        std::map<int, int, std::greater<int>> mult;
        for (int p : shape.parts()) mult[p] += 1;
        std::vector<std::pair<int, int>> groups(mult.begin(), mult.end());
        std::vector<int> plusPerGroup(groups.size(), 0);
        auto rec = [&](auto&& self, std::size_t g, int plusSoFar) -> void {
            if (g == groups.size()) {
                if (plusSoFar != n) return;
                std::vector<SignedYoungDiagram::Row> rows;
                for (std::size_t i = 0; i < groups.size(); ++i) {
                    for (int k = 0; k < groups[i].second; ++k)
                        rows.push_back({groups[i].first,
                                        k < plusPerGroup[i] ? Sign::Plus : Sign::Minus});
                }
                out.emplace_back(std::move(rows));
                return;
            }
            auto [len, count] = groups[g];
            for (int k = 0; k <= count; ++k) {
                int pluses = k * plusesInRow(len, Sign::Plus) +
                             (count - k) * plusesInRow(len, Sign::Minus);
                if (plusSoFar + pluses > n) continue;
                plusPerGroup[g] = k;
                self(self, g + 1, plusSoFar + pluses);
            }
        };
        rec(rec, 0, 0);
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool is_ci_diagram(const SignedYoungDiagram& d) {
    std::map<int, int> oddBalance;  // (+) rows minus (-) rows per odd length
    for (const auto& r : d.rows()) {
        if (r.length % 2 == 0) continue;
        oddBalance[r.length] += r.leading == Sign::Plus ? 1 : -1;
    }
    for (const auto& [len, bal] : oddBalance)
        if (bal != 0) return false;
    return true;
}

SignedYoungDiagram sigma_on_syd(const SignedYoungDiagram& d) {
    std::vector<SignedYoungDiagram::Row> rows = d.rows();
    for (auto& r : rows)
        if (r.length % 2 == 1) r.leading = opposite(r.leading);
    return SignedYoungDiagram(std::move(rows));
}

NilpotentLabelTheta embed_nilpotent_label(const Partition& lam) { return {lam, lam}; }

SignedYoungDiagram embed_nilpotent_label(const SignedYoungDiagram& d) {
    if (!is_ci_diagram(d))
        throw std::domain_error("embed_nilpotent_label: diagram is not of type CI");
    return d;
}

}  // namespace dfv
