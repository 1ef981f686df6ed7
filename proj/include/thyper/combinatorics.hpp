#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <string>

#include "thyper/error.hpp"

namespace thyper {

// Exact nonnegative count. Every arithmetic operation is checked; overflow
// throws instead of wrapping.
class ExactCount {
public:
    constexpr ExactCount() = default;
    constexpr explicit ExactCount(std::uint64_t v) : value_(v) {}

    [[nodiscard]] constexpr std::uint64_t value() const { return value_; }

    friend ExactCount operator+(ExactCount a, ExactCount b) {
        std::uint64_t r = 0;
        if (__builtin_add_overflow(a.value_, b.value_, &r))
            throw OverflowError("ExactCount: addition overflows 64 bits");
        return ExactCount(r);
    }
    ExactCount& operator+=(ExactCount other) { return *this = *this + other; }

    friend ExactCount operator*(ExactCount a, ExactCount b) {
        std::uint64_t r = 0;
        if (__builtin_mul_overflow(a.value_, b.value_, &r))
            throw OverflowError("ExactCount: multiplication overflows 64 bits");
        return ExactCount(r);
    }

    friend constexpr auto operator<=>(ExactCount, ExactCount) = default;
    friend constexpr bool operator==(ExactCount, ExactCount) = default;

private:
    std::uint64_t value_ = 0;
};

// Largest integer magnitude a double represents exactly along with all its
// predecessors.
inline constexpr std::uint64_t kMaxExactDouble = std::uint64_t{1} << 53;

// Conversion at the eigensolver boundary.
inline double to_double(ExactCount c) {
    if (c.value() > kMaxExactDouble)
        throw PrecisionLossError("count " + std::to_string(c.value()) +
                                 " exceeds 2^53 and cannot enter floating point exactly");
    return static_cast<double>(c.value());
}

// Negated count as a signed integer (block eigenvalues are -a_{s,s+1}).
inline std::int64_t negate(ExactCount c) {
    if (c.value() > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max()))
        throw OverflowError("count does not fit a signed 64-bit eigenvalue");
    return -static_cast<std::int64_t>(c.value());
}

// C(n, k) with C(n, k) = 0 whenever k < 0, n < 0 or k > n, so that the
// counting formulas stay valid at their boundaries (e.g. C(n, -1) = 0 for
// graphs).
//
// Multiplicative form; each partial product C(n-k+i, i) is an integer, the
// 128-bit intermediate keeps result * (n-k+i) exact before dividing by i.
inline ExactCount binomial(std::int64_t n, std::int64_t k) {
    if (n < 0 || k < 0 || k > n) return ExactCount{0};
    if (k > n - k) k = n - k;
    unsigned __int128 result = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        result = result * static_cast<unsigned __int128>(n - k + i) /
                 static_cast<unsigned __int128>(i);
        if (result > std::numeric_limits<std::uint64_t>::max())
            throw OverflowError("binomial(" + std::to_string(n) + ", " + std::to_string(k) +
                                ") overflows 64 bits");
    }
    return ExactCount(static_cast<std::uint64_t>(result));
}

}  // namespace thyper
