#ifndef RCN_NUMERIC_HPP
#define RCN_NUMERIC_HPP

#include <cstdint>
#include <stdexcept>

namespace rcn {

// Exact binomial for the small arguments used here (n <= ~60); 0 outside range.
inline long long binom(long long n, long long k) {
    if (k < 0 || k > n || n < 0) return 0;
    if (k > n - k) k = n - k;
    long long r = 1;
    for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

inline long long binom2(long long a) { return a < 2 ? 0 : a * (a - 1) / 2; }

// Floor division for possibly negative numerators.
inline long long floordiv(long long a, long long b) {
    if (b <= 0) throw std::invalid_argument("floordiv: positive divisor required");
    long long q = a / b, r = a % b;
    return r != 0 && r < 0 ? q - 1 : q;
}

// splitmix64: fixed, portable stream; all seeded behavior derives from it.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

struct SplitMix {
    std::uint64_t state;
    explicit SplitMix(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() { return splitmix64(state); }
    // uniform in [0, bound) by rejection; bound > 0
    std::uint64_t below(std::uint64_t bound) {
        std::uint64_t limit = ~0ULL - ~0ULL % bound;
        std::uint64_t v;
        do { v = next(); } while (v >= limit);
        return v % bound;
    }
    long long range(long long lo, long long hi) {  // inclusive
        return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }
};

}  // namespace rcn

#endif
