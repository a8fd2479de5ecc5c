#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace ccn {

using BigInt = boost::multiprecision::cpp_int;

inline std::string to_decimal(const BigInt& v) { return v.str(); }

inline BigInt factorial(std::uint32_t n) {
    BigInt f = 1;
    for (std::uint32_t i = 2; i <= n; ++i) f *= i;
    return f;
}

// binomial(n, k) via the multiplicative formula; every partial product
// prod_{i<=j} (n-k+i)/i is itself a binomial coefficient, so each division is exact.
inline BigInt binomial(const BigInt& n, std::uint64_t k) {
    if (n < 0) return 0;
    if (BigInt(k) > n) return 0;
    BigInt result = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;
    }
    return result;
}

}  // namespace ccn
