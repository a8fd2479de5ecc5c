#pragma once

#include "ccn/bigint.hpp"
#include "ccn/partitions.hpp"

#include <cstdint>
#include <map>
#include <mutex>
#include <string_view>
#include <tuple>
#include <vector>

namespace ccn {

// H: all n-cell degree-r networks up to isomorphism.
// K: the connected ones.
// M: the connected minimal (reduced) ones.
enum class Family { H, K, M };

char family_letter(Family f) noexcept;
// Accepts "H", "K", "M" (case-insensitive). Throws DomainError otherwise.
Family parse_family(std::string_view text);

// One conjugacy-class term of the orbit-counting sum for H(n, r).
struct BurnsideTerm {
    Partition cycle_type;
    BigInt class_size;
    // prod_k phi_r(k, rho)^alpha_k: networks fixed by one permutation of this type.
    BigInt fixed_networks;
};

std::vector<BurnsideTerm> burnside_terms(std::uint32_t n, std::uint32_t r);

// binomial(count + picks - 1, picks): multisets of size `picks` drawn from
// `count` distinct items.
BigInt multiset_coefficient(const BigInt& count, std::uint64_t picks);

std::uint64_t euler_totient(std::uint64_t r);

// Evaluates H, K and M. With memoization on, results are cached per
// (family, n, r); the cache is guarded so one Counter can be shared across
// threads. With memoization off every call recurses from scratch (exponential
// in r for M, intended only for cross-checking the cache).
class Counter {
public:
    explicit Counter(bool memoize = true) : memoize_(memoize) {}

    Counter(const Counter&) = delete;
    Counter& operator=(const Counter&) = delete;

    BigInt count(Family family, std::uint32_t n, std::uint32_t r);
    BigInt count_all(std::uint32_t n, std::uint32_t r) { return count(Family::H, n, r); }
    BigInt count_connected(std::uint32_t n, std::uint32_t r) { return count(Family::K, n, r); }
    BigInt count_minimal(std::uint32_t n, std::uint32_t r) { return count(Family::M, n, r); }

    std::size_t cached_entries() const;

private:
    using Key = std::tuple<Family, std::uint32_t, std::uint32_t>;

    BigInt compute(Family family, std::uint32_t n, std::uint32_t r);
    BigInt compute_all(std::uint32_t n, std::uint32_t r);
    BigInt compute_connected(std::uint32_t n, std::uint32_t r);
    BigInt compute_minimal(std::uint32_t n, std::uint32_t r);

    bool memoize_;
    mutable std::mutex mutex_;
    std::map<Key, BigInt> memo_;
};

// Convenience wrappers over a fresh memoizing Counter.
BigInt count_all(std::uint32_t n, std::uint32_t r);
BigInt count_connected(std::uint32_t n, std::uint32_t r);
BigInt count_minimal(std::uint32_t n, std::uint32_t r);

}  // namespace ccn
