#include "ccn/canonical.hpp"

#include "ccn/errors.hpp"

#include <numeric>

namespace ccn {

void Canonicalizer::canonical_entries(const Network& g, std::vector<std::uint32_t>& out) {
    if (g.cells() > cap_) {
        throw UnsupportedSize("canonical form needs n <= " + std::to_string(cap_) + ", got n = " +
                              std::to_string(g.cells()));
    }
    g_ = &g;
    n_ = g.cells();
    perm_.assign(n_, 0);
    used_.assign(n_, false);
    best_ = g.entries();  // identity relabeling
    search(0);
    out = best_;
    g_ = nullptr;
}

Network Canonicalizer::canonical_form(const Network& g) {
    std::vector<std::uint32_t> entries;
    canonical_entries(g, entries);
    return Network(g.cells(), std::move(entries), true);
}

// Depth d fixes perm_[d], which reveals row-0 entry (0, d) = g(perm_[0], perm_[d]).
// A branch whose row-0 prefix already exceeds the best reading is abandoned.
void Canonicalizer::search(std::uint32_t depth) {
    if (depth == n_) {
        if (compare_leaf() < 0) {
            for (std::uint32_t i = 0; i < n_; ++i)
                for (std::uint32_t j = 0; j < n_; ++j) best_[i * n_ + j] = g_->at(perm_[i], perm_[j]);
        }
        return;
    }
    for (std::uint32_t v = 0; v < n_; ++v) {
        if (used_[v]) continue;
        perm_[depth] = v;
        const std::uint32_t head = depth == 0 ? v : perm_[0];
        bool worse = false;
        for (std::uint32_t j = 0; j <= depth; ++j) {
            const auto value = g_->at(head, perm_[j]);
            if (value != best_[j]) {
                worse = value > best_[j];
                break;
            }
        }
        if (worse) continue;
        used_[v] = true;
        search(depth + 1);
        used_[v] = false;
    }
}

int Canonicalizer::compare_leaf() const {
    for (std::uint32_t i = 0; i < n_; ++i) {
        for (std::uint32_t j = 0; j < n_; ++j) {
            const auto value = g_->at(perm_[i], perm_[j]);
            const auto best = best_[i * n_ + j];
            if (value != best) return value < best ? -1 : 1;
        }
    }
    return 0;
}

Network canonical_form(const Network& g, std::uint32_t size_cap) { return Canonicalizer(size_cap).canonical_form(g); }

bool are_isomorphic(const Network& a, const Network& b, std::uint32_t size_cap) {
    if (a.cells() != b.cells()) return false;
    Canonicalizer canon(size_cap);
    const auto ca = canon.canonical_form(a);
    const auto cb = canon.canonical_form(b);
    return ca == cb;
}

}  // namespace ccn
