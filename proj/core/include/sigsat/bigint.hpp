#ifndef SIGSAT_BIGINT_HPP
#define SIGSAT_BIGINT_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <limits>
#include <string>

namespace sigsat {

/// Exact arbitrary-precision nonnegative count. Assignment-set cardinalities
/// reach 2^n and binomial products overflow any machine word long before the
/// instances stop being interesting.
using BigCount = boost::multiprecision::cpp_int;

/// 2^e as an exact count, e >= 0.
inline BigCount big_pow2(std::int64_t e) {
    return BigCount(1) << static_cast<unsigned>(e);
}

/// Binomial coefficient C(n, k), exact. Out-of-range k yields 0.
inline BigCount binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || k > n || n < 0) return 0;
    if (k > n - k) k = n - k;
    BigCount r = 1;
    // r stays integral at every step: after multiplying by (n-k+i) the
    // running product is C(n-k+i, i) * i!, divisible by i.
    for (std::int64_t i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

/// log2 of a positive count, as a double. log2(0) is -infinity.
inline double log2_big(const BigCount& x) {
    if (x == 0) return -std::numeric_limits<double>::infinity();
    const auto bits = boost::multiprecision::msb(x); // floor(log2 x)
    if (bits <= 52) return std::log2(x.convert_to<double>());
    const unsigned shift = bits - 52;
    const double mant = BigCount(x >> shift).convert_to<double>();
    return static_cast<double>(shift) + std::log2(mant);
}

/// Exact decimal rendering, for reports that must not lose precision.
inline std::string to_decimal_string(const BigCount& x) {
    return x.str();
}

} // namespace sigsat

#endif
