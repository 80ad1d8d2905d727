#pragma once

#include <cstdint>
#include <initializer_list>

namespace armlab::rng {

// splitmix64 finalizer; the workhorse behind stream derivation and generation.
inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

// Counter-derived random stream. A stream is identified by a master seed plus
// a key path; two streams with different paths are statistically independent,
// so work can be scheduled in any order without changing the output.
class Stream {
public:
    Stream() : state_(0) {}

    static Stream from_state(std::uint64_t s) {
        Stream st;
        st.state_ = s;
        return st;
    }

    static Stream derive(std::uint64_t master, std::initializer_list<std::uint64_t> path) {
        std::uint64_t s = mix64(master ^ 0x243F6A8885A308D3ull);
        std::uint64_t i = 0;
        for (std::uint64_t k : path)
            s = mix64(s ^ mix64(k + 0x9E3779B97F4A7C15ull * ++i));
        return from_state(s);
    }

    // One more derivation level without re-hashing the whole path.
    Stream child(std::uint64_t key) const {
        return from_state(mix64(state_ ^ mix64(key ^ 0xD1B54A32D192ED03ull)));
    }

    std::uint64_t next_u64() {
        state_ += 0x9E3779B97F4A7C15ull;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // Uniform in [0,1), 53-bit resolution.
    double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Unbiased uniform integer in [0,n)
    std::uint64_t next_below(std::uint64_t n) {
        const std::uint64_t rem = (UINT64_MAX % n + 1) % n;  // 2^64 mod n
        const std::uint64_t lim = UINT64_MAX - rem;
        std::uint64_t x;
        do {
            x = next_u64();
        } while (x > lim);
        return x % n;
    }

    // Standard normal, Marsaglia polar method.
    double next_normal();

    std::uint64_t state() const { return state_; }

private:
    std::uint64_t state_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

// exp(-x) for x >= 0 using only +,*,/ so results are identical on every
// IEEE-754 platform (libm exp is allowed to differ in the last ulp).
double exp_negative(double x);

// Poisson count by inversion for small means; means >= 10 are split in half
// recursively, which stays exact.
int poisson(Stream& rng, double mean);
int poisson_with_p0(Stream& rng, double mean, double p0);  // p0 = exp(-mean) precomputed

}  // namespace armlab::rng
