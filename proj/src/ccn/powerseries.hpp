#pragma once

#include "ccn/bigint.hpp"
#include "ccn/partitions.hpp"

#include <cstdint>
#include <vector>

namespace ccn {

// Exact integer power series truncated at z^order.
class TruncatedSeries {
public:
    // The constant series 1.
    explicit TruncatedSeries(std::uint32_t order);
    // coeffs.size() must be order + 1; throws DomainError otherwise.
    TruncatedSeries(std::uint32_t order, std::vector<BigInt> coeffs);

    std::uint32_t order() const noexcept { return order_; }
    const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }
    const BigInt& operator[](std::uint32_t i) const { return coeffs_.at(i); }

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

private:
    std::uint32_t order_;
    std::vector<BigInt> coeffs_;
};

// Cauchy product at the shared order. Orders must match.
TruncatedSeries multiply(const TruncatedSeries& a, const TruncatedSeries& b);

// (1 - z^m)^(-e) truncated at `order`: coefficient of z^(m t) is
// binomial(e + t - 1, t), all others zero.
TruncatedSeries geometric_power_factor(std::uint32_t m, std::uint32_t e, std::uint32_t order);

// The fixed-point generating function for a permutation of cycle type rho
// acting on in-degree-r rows, with s selecting the cycle length:
//   prod_k (1 - z^(k/h))^(-alpha_k h),  h = gcd(s, k).
// Requires 1 <= s <= rho.n().
TruncatedSeries phi_series(std::uint32_t s, const Partition& rho, std::uint32_t order);

// Coefficient of z^r in phi_series(s, rho, r). phi_coeff(0, ...) is 1.
BigInt phi_coeff(std::uint32_t r, std::uint32_t s, const Partition& rho);

}  // namespace ccn
