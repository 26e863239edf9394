#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace peerlens {

// splitmix64; pinned so shuffles do not depend on the standard library's
// distribution implementations.
struct Rng64 {
    std::uint64_t state;
    explicit Rng64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        state += 0x9E3779B97F4A7C15ull;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    std::size_t below(std::size_t n) {
        return static_cast<std::size_t>(next() % n);
    }

    double uniform() {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }
};

template <typename T>
void fisher_yates(std::vector<T>& values, Rng64& rng) {
    for (std::size_t i = values.size(); i > 1; --i) {
        const std::size_t j = rng.below(i);
        std::swap(values[i - 1], values[j]);
    }
}

}  // namespace peerlens
