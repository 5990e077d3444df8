#pragma once

#include <compare>
#include <stdexcept>
#include <vector>

namespace dfv {

/// Integer partition: weakly decreasing positive parts, trailing zeros never stored.
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] <= 0)
                throw std::invalid_argument("Partition: parts must be positive");
            if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
                throw std::invalid_argument("Partition: parts must be weakly decreasing");
        }
    }

    const std::vector<int>& parts() const { return parts_; }

    /// Number of boxes.
    int size() const {
        int s = 0;
        for (int p : parts_) s += p;
        return s;
    }

    int length() const { return static_cast<int>(parts_.size()); }

    /// i-th part, 0-indexed; parts beyond the length read as 0.
    int part(int i) const {
        return (i >= 0 && i < length()) ? parts_[static_cast<std::size_t>(i)] : 0;
    }

    Partition conjugate() const {
        std::vector<int> c;
        if (!parts_.empty()) {
            c.assign(static_cast<std::size_t>(parts_[0]), 0);
            for (int p : parts_)
                for (int j = 0; j < p; ++j) c[static_cast<std::size_t>(j)] += 1;
        }
        return Partition(std::move(c));
    }

    bool empty() const { return parts_.empty(); }

    friend bool operator==(const Partition&, const Partition&) = default;
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
        return a.parts_ <=> b.parts_;
    }

private:
    std::vector<int> parts_;
};

/// Dominance order on partitions of equal size: prefix sums of a never exceed those of b.
bool dominance_leq(const Partition& a, const Partition& b);

/// True iff nu_i <= lam_i <= nu_i + 1 for every i, i.e. lam/nu is a vertical strip.
bool vertical_strip_leq(const Partition& nu, const Partition& lam);

/// All partitions of n, in a fixed deterministic order.
std::vector<Partition> partitions_of(int n);

}  // namespace dfv
