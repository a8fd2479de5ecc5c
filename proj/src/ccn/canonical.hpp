#pragma once

#include "ccn/network.hpp"

#include <cstdint>
#include <vector>

namespace ccn {

// Default largest cell count for canonical_form (8! = 40320 relabelings).
inline constexpr std::uint32_t kDefaultSizeCap = 8;

// Computes canonical forms with reusable scratch space. Not thread-safe; give
// each worker its own instance.
class Canonicalizer {
public:
    explicit Canonicalizer(std::uint32_t size_cap = kDefaultSizeCap) : cap_(size_cap) {}

    // Lexicographically least row-major reading of relabel(g, p) over all
    // permutations p. Throws UnsupportedSize when g.cells() exceeds the cap.
    Network canonical_form(const Network& g);

    // Same as canonical_form but writes the row-major reading into out.
    void canonical_entries(const Network& g, std::vector<std::uint32_t>& out);

private:
    void search(std::uint32_t depth);
    // <0, 0, >0 comparing relabel(g, perm_) against best_; row 0 is known to
    // be no greater when this is called.
    int compare_leaf() const;

    std::uint32_t cap_;
    const Network* g_ = nullptr;
    std::uint32_t n_ = 0;
    std::vector<std::uint32_t> perm_;
    std::vector<bool> used_;
    std::vector<std::uint32_t> best_;
};

Network canonical_form(const Network& g, std::uint32_t size_cap = kDefaultSizeCap);

// Same cell count and equal canonical forms.
bool are_isomorphic(const Network& a, const Network& b, std::uint32_t size_cap = kDefaultSizeCap);

}  // namespace ccn
