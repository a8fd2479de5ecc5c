#include "ccn/network.hpp"

#include "ccn/errors.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace ccn {

namespace {

constexpr std::uint64_t kMaxEntry = std::numeric_limits<std::uint32_t>::max();

}  // namespace

std::uint32_t common_row_sum(std::uint32_t n, std::span<const std::uint32_t> entries) {
    if (n == 0) throw MalformedNetwork("network must have at least one cell");
    if (entries.size() != std::size_t{n} * n) {
        throw MalformedNetwork("expected " + std::to_string(std::size_t{n} * n) + " entries for " + std::to_string(n) +
                               " cells, got " + std::to_string(entries.size()));
    }
    std::uint64_t first = 0;
    for (std::uint32_t i = 0; i < n; ++i) {
        std::uint64_t sum = 0;
        for (std::uint32_t j = 0; j < n; ++j) sum += entries[std::size_t{i} * n + j];
        if (sum > kMaxEntry) throw MalformedNetwork("row " + std::to_string(i) + " sum overflows");
        if (i == 0) {
            first = sum;
        } else if (sum != first) {
            throw MalformedNetwork("row " + std::to_string(i) + " sums to " + std::to_string(sum) + " but row 0 sums to " +
                                   std::to_string(first) + "; in-degree must be constant");
        }
    }
    return static_cast<std::uint32_t>(first);
}

Network::Network(std::uint32_t n, std::vector<std::uint32_t> entries, bool allow_zero_degree)
    : n_(n), degree_(common_row_sum(n, entries)), entries_(std::move(entries)) {
    if (degree_ == 0 && !allow_zero_degree) throw MalformedNetwork("network has degree 0");
}

Network Network::from_rows(const std::vector<std::vector<std::uint32_t>>& rows, bool allow_zero_degree) {
    const auto n = static_cast<std::uint32_t>(rows.size());
    std::vector<std::uint32_t> entries;
    entries.reserve(rows.size() * rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows.size()) {
            throw MalformedNetwork("row " + std::to_string(i) + " has " + std::to_string(rows[i].size()) +
                                   " entries, expected " + std::to_string(rows.size()));
        }
        entries.insert(entries.end(), rows[i].begin(), rows[i].end());
    }
    return Network(n, std::move(entries), allow_zero_degree);
}

std::vector<std::vector<std::uint32_t>> Network::rows() const {
    std::vector<std::vector<std::uint32_t>> out;
    out.reserve(n_);
    for (std::uint32_t i = 0; i < n_; ++i) out.emplace_back(row(i).begin(), row(i).end());
    return out;
}

Network add_loops(const Network& g, std::uint32_t s) {
    if (std::uint64_t{g.degree()} + s > kMaxEntry) throw DomainError("add_loops: degree overflows");
    auto entries = g.entries();
    for (std::uint32_t i = 0; i < g.cells(); ++i) entries[std::size_t{i} * g.cells() + i] += s;
    return Network(g.cells(), std::move(entries), true);
}

Network split_edges(const Network& g, std::uint32_t k) {
    if (k == 0) throw DomainError("split_edges: k must be positive");
    if (std::uint64_t{g.degree()} * k > kMaxEntry) throw DomainError("split_edges: degree overflows");
    auto entries = g.entries();
    for (auto& e : entries) e *= k;
    return Network(g.cells(), std::move(entries), true);
}

Reduction reduce(const Network& g) {
    const auto n = g.cells();
    std::uint32_t s = g.loops(0);
    for (std::uint32_t i = 1; i < n; ++i) s = std::min(s, g.loops(i));

    auto entries = g.entries();
    for (std::uint32_t i = 0; i < n; ++i) entries[std::size_t{i} * n + i] -= s;

    std::uint32_t d = 0;
    for (auto e : entries) d = std::gcd(d, e);
    if (d == 0) d = 1;
    if (d > 1) {
        for (auto& e : entries) e /= d;
    }
    return {Network(n, std::move(entries), true), ReductionTrace{s, d}};
}

bool is_reduced(const Network& g) {
    if (g.degree() == 0) return true;
    bool loop_free = false;
    for (std::uint32_t i = 0; i < g.cells(); ++i) loop_free = loop_free || g.loops(i) == 0;
    if (!loop_free) return false;
    std::uint32_t d = 0;
    for (auto e : g.entries()) d = std::gcd(d, e);
    return d == 1;
}

bool is_connected(const Network& g) {
    const auto n = g.cells();
    std::vector<bool> seen(n, false);
    std::vector<std::uint32_t> stack{0};
    seen[0] = true;
    std::uint32_t reached = 1;
    while (!stack.empty()) {
        const auto v = stack.back();
        stack.pop_back();
        for (std::uint32_t w = 0; w < n; ++w) {
            if (seen[w] || (g.at(v, w) == 0 && g.at(w, v) == 0)) continue;
            seen[w] = true;
            ++reached;
            stack.push_back(w);
        }
    }
    return reached == n;
}

Network relabel(const Network& g, std::span<const std::uint32_t> perm) {
    const auto n = g.cells();
    if (perm.size() != n) throw DomainError("relabel: permutation has wrong length");
    std::vector<bool> used(n, false);
    for (auto p : perm) {
        if (p >= n || used[p]) throw DomainError("relabel: not a permutation");
        used[p] = true;
    }
    std::vector<std::uint32_t> entries(std::size_t{n} * n);
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = 0; j < n; ++j) entries[std::size_t{i} * n + j] = g.at(perm[i], perm[j]);
    return Network(n, std::move(entries), true);
}

}  // namespace ccn
