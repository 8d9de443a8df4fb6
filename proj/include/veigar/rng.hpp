#pragma once

#include <cmath>
#include <cstdint>

namespace veigar {

namespace detail {

inline constexpr std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

} // namespace detail

/// Counter-based generator: every draw is a pure function of
/// (seed, stream, counter), so output is reproducible across platforms
/// and independent of evaluation order.
class CounterRng {
public:
    explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0)
        : key_(detail::mix64(detail::mix64(seed) ^ (stream * 0xd1342543de82ef95ULL + 1))),
          normal_key_(detail::mix64(key_ ^ 0x5851f42d4c957f2dULL)) {}

    std::uint64_t bits(std::uint64_t counter) const {
        return detail::mix64(key_ ^ detail::mix64(counter));
    }

    /// Uniform in [0, 1).
    double uniform(std::uint64_t counter) const {
        return static_cast<double>(bits(counter) >> 11) * 0x1.0p-53;
    }

    /// Uniform in [lo, hi).
    double uniform(std::uint64_t counter, double lo, double hi) const {
        return lo + (hi - lo) * uniform(counter);
    }

    /// Standard normal via Box-Muller; draws from a salted word stream so
    /// normal(c) never aliases uniform(c).
    double normal(std::uint64_t counter) const {
        const std::uint64_t w1 = detail::mix64(normal_key_ ^ detail::mix64(2 * counter));
        const std::uint64_t w2 = detail::mix64(normal_key_ ^ detail::mix64(2 * counter + 1));
        const double u1 = (static_cast<double>(w1 >> 11) + 1.0) * 0x1.0p-53; // (0, 1]
        const double u2 = static_cast<double>(w2 >> 11) * 0x1.0p-53;
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
    }

    /// Uniform integer in [0, n). n must be > 0.
    std::uint64_t index(std::uint64_t counter, std::uint64_t n) const {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(bits(counter)) * n) >> 64);
    }

    // Sequential convenience wrappers around an internal cursor.
    double next_uniform() { return uniform(cursor_++); }
    double next_uniform(double lo, double hi) { return uniform(cursor_++, lo, hi); }
    double next_normal() { return normal(cursor_++); }
    std::uint64_t next_index(std::uint64_t n) { return index(cursor_++, n); }

private:
    std::uint64_t key_;
    std::uint64_t normal_key_;
    std::uint64_t cursor_ = 0;
};

} // namespace veigar
