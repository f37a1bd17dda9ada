#ifndef QLINES_EXACT_RATIO_HPP
#define QLINES_EXACT_RATIO_HPP

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace qlines {

// Reduced integer fraction with positive denominator. All ratio comparisons
// in this library are exact; floating point is never used.
struct ExactRatio {
    std::int64_t num = 0;
    std::int64_t den = 1;

    ExactRatio() = default;
    ExactRatio(std::int64_t n, std::int64_t d) : num(n), den(d) {
        if (den == 0) throw std::invalid_argument("ExactRatio: zero denominator");
        if (den < 0) { num = -num; den = -den; }
        const std::int64_t g = std::gcd(num, den);
        if (g > 1) { num /= g; den /= g; }
    }

    bool operator==(const ExactRatio&) const = default;

    std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }
};

} // namespace qlines

#endif
