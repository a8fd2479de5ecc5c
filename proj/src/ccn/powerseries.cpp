#include "ccn/powerseries.hpp"

#include "ccn/errors.hpp"

#include <numeric>

namespace ccn {

TruncatedSeries::TruncatedSeries(std::uint32_t order) : order_(order), coeffs_(std::size_t{order} + 1, 0) {
    coeffs_[0] = 1;
}

TruncatedSeries::TruncatedSeries(std::uint32_t order, std::vector<BigInt> coeffs)
    : order_(order), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != std::size_t{order_} + 1) {
        throw DomainError("series of order " + std::to_string(order_) + " needs " + std::to_string(order_ + 1) +
                          " coefficients, got " + std::to_string(coeffs_.size()));
    }
}

TruncatedSeries multiply(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.order() != b.order()) {
        throw DomainError("series order mismatch: " + std::to_string(a.order()) + " vs " + std::to_string(b.order()));
    }
    const auto order = a.order();
    std::vector<BigInt> out(std::size_t{order} + 1, 0);
    for (std::uint32_t i = 0; i <= order; ++i) {
        if (a[i] == 0) continue;
        for (std::uint32_t j = 0; i + j <= order; ++j) {
            if (b[j] != 0) out[i + j] += a[i] * b[j];
        }
    }
    return TruncatedSeries(order, std::move(out));
}

TruncatedSeries geometric_power_factor(std::uint32_t m, std::uint32_t e, std::uint32_t order) {
    if (m == 0 || e == 0) throw DomainError("geometric_power_factor: m and e must be positive");
    std::vector<BigInt> coeffs(std::size_t{order} + 1, 0);
    for (std::uint64_t t = 0; m * t <= order; ++t) {
        coeffs[m * t] = binomial(BigInt(e) + t - 1, t);
    }
    return TruncatedSeries(order, std::move(coeffs));
}

TruncatedSeries phi_series(std::uint32_t s, const Partition& rho, std::uint32_t order) {
    if (s == 0 || s > rho.n()) {
        throw DomainError("phi_series: s=" + std::to_string(s) + " outside 1.." + std::to_string(rho.n()));
    }
    TruncatedSeries acc(order);
    for (std::uint32_t k = 1; k <= rho.n(); ++k) {
        const auto a = rho.multiplicity(k);
        if (a == 0) continue;
        const auto h = std::gcd(s, k);
        acc = multiply(acc, geometric_power_factor(k / h, a * h, order));
    }
    return acc;
}

BigInt phi_coeff(std::uint32_t r, std::uint32_t s, const Partition& rho) { return phi_series(s, rho, r)[r]; }

}  // namespace ccn
