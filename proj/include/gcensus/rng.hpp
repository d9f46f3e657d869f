#pragma once

#include <cstdint>

namespace gcensus {

// splitmix64. Chosen over <random> engines+distributions because the output
// here must be bit-identical across platforms and standard library versions.
struct SplitMix64 {
    std::uint64_t state = 0;

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
};

// Value type for reproducible randomness. child() derives an independent
// stream from two tags; derivation is pure, so a construction tree re-seeds
// identically on every run.
struct Seed {
    std::uint64_t value = 0;

    Seed child(std::uint64_t a, std::uint64_t b = 0) const {
        SplitMix64 s{value};
        SplitMix64 t{s.next() ^ a};
        SplitMix64 u{t.next() ^ b};
        return Seed{u.next()};
    }

    friend bool operator==(const Seed&, const Seed&) = default;
};

// Fair coin flips, 64 per splitmix64 word, consumed from bit 0 upward.
class BitStream {
public:
    explicit BitStream(Seed seed) : gen_{seed.value} {}

    bool next_bit() {
        if (left_ == 0) {
            word_ = gen_.next();
            left_ = 64;
        }
        bool b = word_ & 1u;
        word_ >>= 1;
        --left_;
        return b;
    }

private:
    SplitMix64 gen_;
    std::uint64_t word_ = 0;
    int left_ = 0;
};

// Default seed for anything seeded that the caller left unseeded.
inline constexpr std::uint64_t kDefaultSeed = 1729;

}  // namespace gcensus
