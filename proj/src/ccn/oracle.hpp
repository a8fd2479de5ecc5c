#pragma once

#include "ccn/bigint.hpp"
#include "ccn/canonical.hpp"
#include "ccn/network.hpp"
#include "ccn/report.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace ccn {

class Counter;

// Largest |Omega_{n,r}| the brute-force oracle will walk by default.
inline constexpr std::uint64_t kDefaultBudget = 100'000'000;

// |Omega_{n,r}| = binomial(n + r - 1, r)^n.
BigInt omega_size(std::uint32_t n, std::uint32_t r);

// Throws BudgetExceeded (carrying |Omega|) when omega_size(n, r) > budget.
void check_budget(std::uint32_t n, std::uint32_t r, std::uint64_t budget);

// All ways to write r as an ordered sum of n nonnegative parts, in ascending
// lexicographic order.
std::vector<std::vector<std::uint32_t>> row_compositions(std::uint32_t n, std::uint32_t r);

// Streams Omega_{n,r}, every n x n nonnegative matrix with all row sums r,
// in ascending lexicographic (row-major) order. An optional half-open range
// of first-row indices restricts the walk to a contiguous chunk.
class OmegaEnumerator {
public:
    OmegaEnumerator(std::uint32_t n, std::uint32_t r, std::uint64_t budget = kDefaultBudget);
    OmegaEnumerator(std::uint32_t n, std::uint32_t r, std::uint64_t budget, std::size_t first_row_begin,
                    std::size_t first_row_end);

    std::uint32_t cells() const noexcept { return n_; }
    std::uint32_t degree() const noexcept { return r_; }
    // Number of admissible rows, binomial(n + r - 1, r).
    std::size_t row_choices() const noexcept { return rows_.size(); }

    // Writes the next matrix (row-major) into entries; false once exhausted.
    bool next(std::vector<std::uint32_t>& entries);

private:
    std::uint32_t n_;
    std::uint32_t r_;
    std::vector<std::vector<std::uint32_t>> rows_;
    std::vector<std::size_t> odometer_;
    std::size_t first_end_;
    bool done_ = false;
};

// Materializes Omega_{n,r}. Only sensible for small inputs.
std::vector<Network> enumerate_omega(std::uint32_t n, std::uint32_t r, std::uint64_t budget = kDefaultBudget);

struct OrbitClass {
    Network representative;  // canonical form
    bool connected = false;
    bool reduced = false;
    Network reduced_form;  // canonical form of reduce(representative)
    ReductionTrace trace;
};

struct OrbitCensus {
    std::uint32_t n = 0;
    std::uint32_t r = 0;
    std::uint64_t labeled_networks = 0;
    std::uint64_t total_orbits = 0;
    std::uint64_t connected_orbits = 0;
    std::uint64_t minimal_connected_orbits = 0;
    // Sorted by canonical form.
    std::vector<OrbitClass> classes;
    // Canonical reduced form -> number of connected classes reducing to it.
    std::map<Network, std::uint64_t> class_breakdown;
};

struct CensusOptions {
    std::uint64_t budget = kDefaultBudget;
    // Omega is split into contiguous first-row chunks, one per worker. The
    // result does not depend on the worker count.
    unsigned workers = 1;
    std::uint32_t size_cap = kDefaultSizeCap;
};

OrbitCensus census(std::uint32_t n, std::uint32_t r, const CensusOptions& options = {});

// Census totals against the closed forms H, K, M.
VerificationReport verify_counts(std::uint32_t n, std::uint32_t r, const CensusOptions& options = {});
VerificationReport verify_counts(const OrbitCensus& c, Counter& counter);

// For each minimal connected network of degree s < r, the number of connected
// degree-r classes reducing to it must be floor(r/s); minimal degree-r classes
// represent only themselves; the aggregate must match sum floor(r/s) M(n,s).
// Also checks that reductions lower the degree and keep connectivity, and
// confirms one sampled pair per equivalence class with the linear oracle.
VerificationReport verify_class_structure(std::uint32_t n, std::uint32_t r, const CensusOptions& options = {});

// verify_counts followed by verify_class_structure, sharing the censuses.
VerificationReport verify_all(std::uint32_t n, std::uint32_t r, const CensusOptions& options = {});

}  // namespace ccn
