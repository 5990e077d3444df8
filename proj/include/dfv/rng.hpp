#pragma once

#include <cstdint>
#include <string_view>

namespace dfv {

/// Counter-based deterministic generator (splitmix64 steps). Streams derived
/// from a seed plus a tag are independent and reproducible across platforms
/// and thread schedules.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform-ish integer in [lo, hi]; deterministic, which is all that the
    /// genericity sampling needs.
    int uniform(int lo, int hi) {
        std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<int>(next() % range);
    }

private:
    std::uint64_t state_;
};

inline std::uint64_t fnv1a(std::string_view text) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

/// Derives an independent stream seed from a base seed and a textual tag.
inline std::uint64_t derive_stream(std::uint64_t seed, std::string_view tag) {
    SplitMix64 mix(seed ^ fnv1a(tag));
    return mix.next();
}

}  // namespace dfv
