#include "ccn/counting.hpp"

#include "ccn/errors.hpp"
#include "ccn/powerseries.hpp"

#include <numeric>

namespace ccn {

namespace {

void check_args(std::uint32_t n, std::uint32_t r) {
    if (n == 0) throw DomainError("cell count n must be positive");
    if (r == 0) throw DomainError("degree r must be positive");
    if (n > kMaxPartitionSize) throw DomainError("cell count exceeds " + std::to_string(kMaxPartitionSize));
}

std::string where(char family, std::uint32_t n, std::uint32_t r) {
    return std::string(1, family) + "(" + std::to_string(n) + "," + std::to_string(r) + ")";
}

}  // namespace

char family_letter(Family f) noexcept {
    switch (f) {
        case Family::H: return 'H';
        case Family::K: return 'K';
        case Family::M: return 'M';
    }
    return '?';
}

Family parse_family(std::string_view text) {
    if (text == "H" || text == "h") return Family::H;
    if (text == "K" || text == "k") return Family::K;
    if (text == "M" || text == "m") return Family::M;
    throw DomainError("unknown family '" + std::string(text) + "' (expected H, K or M)");
}

std::vector<BurnsideTerm> burnside_terms(std::uint32_t n, std::uint32_t r) {
    check_args(n, r);
    std::vector<BurnsideTerm> terms;
    for (auto& rho : partitions(n)) {
        BigInt fixed = 1;
        for (std::uint32_t k = 1; k <= n && fixed != 0; ++k) {
            const auto a = rho.multiplicity(k);
            if (a == 0) continue;
            fixed *= boost::multiprecision::pow(phi_coeff(r, k, rho), a);
        }
        auto size = class_size(rho);
        terms.push_back({std::move(rho), std::move(size), std::move(fixed)});
    }
    return terms;
}

BigInt multiset_coefficient(const BigInt& count, std::uint64_t picks) {
    if (picks == 0) return 1;
    if (count <= 0) return 0;
    return binomial(count + picks - 1, picks);
}

std::uint64_t euler_totient(std::uint64_t r) {
    if (r == 0) throw DomainError("euler_totient: r must be positive");
    std::uint64_t result = r;
    std::uint64_t m = r;
    for (std::uint64_t p = 2; p * p <= m; ++p) {
        if (m % p != 0) continue;
        while (m % p == 0) m /= p;
        result -= result / p;
    }
    if (m > 1) result -= result / m;
    return result;
}

BigInt Counter::count(Family family, std::uint32_t n, std::uint32_t r) {
    check_args(n, r);
    if (!memoize_) return compute(family, n, r);
    const Key key{family, n, r};
    {
        std::lock_guard lock(mutex_);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    }
    // Computed outside the lock: the recursion re-enters count(). Two threads
    // racing on one key produce the same value, so the second insert is a no-op.
    auto value = compute(family, n, r);
    std::lock_guard lock(mutex_);
    memo_.emplace(key, value);
    return value;
}

std::size_t Counter::cached_entries() const {
    std::lock_guard lock(mutex_);
    return memo_.size();
}

BigInt Counter::compute(Family family, std::uint32_t n, std::uint32_t r) {
    switch (family) {
        case Family::H: return compute_all(n, r);
        case Family::K: return compute_connected(n, r);
        case Family::M: return compute_minimal(n, r);
    }
    throw InternalError("unreachable family");
}

BigInt Counter::compute_all(std::uint32_t n, std::uint32_t r) {
    BigInt total = 0;
    for (const auto& term : burnside_terms(n, r)) total += term.class_size * term.fixed_networks;
    // Exact division last, on the whole sum.
    BigInt quotient, remainder;
    boost::multiprecision::divide_qr(total, factorial(n), quotient, remainder);
    if (remainder != 0) throw InternalError(where('H', n, r) + ": orbit sum not divisible by n!");
    return quotient;
}

BigInt Counter::compute_connected(std::uint32_t n, std::uint32_t r) {
    if (n == 1) return 1;
    BigInt disconnected = 0;
    for (const auto& rho : partitions(n)) {
        if (rho.multiplicity(n) != 0) continue;
        BigInt ways = 1;
        for (std::uint32_t m = 1; m < n && ways != 0; ++m) {
            const auto a = rho.multiplicity(m);
            if (a == 0) continue;
            ways *= multiset_coefficient(count(Family::K, m, r), a);
        }
        disconnected += ways;
    }
    BigInt value = count(Family::H, n, r) - disconnected;
    if (value < 0) throw InternalError(where('K', n, r) + " came out negative: " + value.str());
    return value;
}

BigInt Counter::compute_minimal(std::uint32_t n, std::uint32_t r) {
    if (n == 1) return 0;
    BigInt value = count(Family::K, n, r);
    for (std::uint32_t s = 1; s < r; ++s) value -= BigInt(r / s) * count(Family::M, n, s);
    if (value < 0) throw InternalError(where('M', n, r) + " came out negative: " + value.str());
    return value;
}

BigInt count_all(std::uint32_t n, std::uint32_t r) { return Counter().count_all(n, r); }
BigInt count_connected(std::uint32_t n, std::uint32_t r) { return Counter().count_connected(n, r); }
BigInt count_minimal(std::uint32_t n, std::uint32_t r) { return Counter().count_minimal(n, r); }

}  // namespace ccn
