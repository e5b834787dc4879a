#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace fr {

// Deterministic RNG wrapper. mt19937_64 has a standardized output sequence,
// and all mappings below are hand-rolled, so streams are bit-identical across
// platforms and stdlib versions (the determinism contract depends on this;
// std::uniform_real_distribution et al. are implementation-defined).
class Rng {
public:
    explicit Rng(uint64_t seed) : engine_(seed) {}

    uint64_t next_u64() { return engine_(); }

    // Uniform in [0, 1) with 53-bit resolution.
    double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    // Uniform in (0, 1): endpoints excluded for inverse-CDF sampling.
    double uniform_open01() {
        double u = uniform01();
        return u <= 0.0 ? 0x1.0p-53 : u;
    }

    // Uniform integer in [0, n). Unbiased via rejection.
    uint64_t uniform_int(uint64_t n) {
        if (n == 0) return 0;
        uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        uint64_t x;
        do {
            x = engine_();
        } while (x >= limit);
        return x % n;
    }

    // Standard normal via Box-Muller (no cached spare, keeps state simple).
    double normal() {
        double u1 = uniform_open01();
        double u2 = uniform01();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
    }

    // Fisher-Yates in-place shuffle.
    template <class T>
    void shuffle(std::vector<T>& v) {
        for (size_t i = v.size(); i > 1; --i) {
            size_t j = static_cast<size_t>(uniform_int(i));
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace fr
