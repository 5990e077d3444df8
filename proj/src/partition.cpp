#include "dfv/partition.hpp"

#include <algorithm>

namespace dfv {

bool dominance_leq(const Partition& a, const Partition& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("dominance_leq: partitions must have equal size");
    int len = std::max(a.length(), b.length());
    long pa = 0, pb = 0;
    for (int i = 0; i < len; ++i) {
        pa += a.part(i);
        pb += b.part(i);
        if (pa > pb) return false;
    }
    return true;
}

bool vertical_strip_leq(const Partition& nu, const Partition& lam) {
    int len = std::max(nu.length(), lam.length());
    for (int i = 0; i < len; ++i) {
        int n = nu.part(i), l = lam.part(i);
        if (l < n || l > n + 1) return false;
    }
    return true;
}

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rest, int maxPart) -> void {
        if (rest == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(rest, maxPart); p >= 1; --p) {
            cur.push_back(p);
            self(self, rest - p, p);
            cur.pop_back();
        }
    };
    if (n >= 0) rec(rec, n, n == 0 ? 1 : n);
    return out;
}

}  // namespace dfv
