#pragma once

#include "ccn/bigint.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace ccn {

// Largest n accepted by partitions(); alpha is stored densely.
inline constexpr std::uint32_t kMaxPartitionSize = 64;

// An integer partition of n in multiplicity notation [1^a1 2^a2 ... n^an].
// Doubles as the cycle type of a conjugacy class of S_n.
class Partition {
public:
    // alpha[k-1] is the number of parts equal to k. Throws DomainError unless
    // sum k*alpha[k-1] == n and alpha has exactly n entries.
    Partition(std::uint32_t n, std::vector<std::uint32_t> alpha);

    // Builds the multiplicity vector from a list of parts in any order.
    static Partition from_parts(const std::vector<std::uint32_t>& parts);

    std::uint32_t n() const noexcept { return n_; }

    // Number of parts equal to k, 1 <= k <= n.
    std::uint32_t multiplicity(std::uint32_t k) const;
    const std::vector<std::uint32_t>& alpha() const noexcept { return alpha_; }

    // Parts in nonincreasing order.
    std::vector<std::uint32_t> parts() const;

    // "[1^3 2^1]", omitting k^0 terms.
    std::string to_string() const;

    friend bool operator==(const Partition&, const Partition&) = default;

private:
    std::uint32_t n_;
    std::vector<std::uint32_t> alpha_;
};

// Every partition of n exactly once, in decreasing lexicographic order of the
// nonincreasing part lists: [n^1] first, [1^n] last.
std::vector<Partition> partitions(std::uint32_t n);

// n! / (prod k^alpha_k * prod alpha_k!), the size of the conjugacy class of
// S_n with cycle type rho.
BigInt class_size(const Partition& rho);

}  // namespace ccn
