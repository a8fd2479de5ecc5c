#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

namespace ccn {

// An identical-edge homogeneous network: a directed multigraph with loops in
// which every cell receives the same number r of arcs (the degree).
//
// Stored as the n x n in-adjacency matrix, row-major: at(i, j) is the number
// of arcs from cell j into cell i, so row i lists the inputs of cell i and the
// homogeneity constraint is a constant row sum.
class Network {
public:
    // entries.size() must be n*n with every row summing to the same value.
    // Degree 0 (all-zero matrix) is only accepted when allow_zero_degree is set;
    // it arises as the reduction of an all-loops network. Throws MalformedNetwork.
    Network(std::uint32_t n, std::vector<std::uint32_t> entries, bool allow_zero_degree = false);

    static Network from_rows(const std::vector<std::vector<std::uint32_t>>& rows, bool allow_zero_degree = false);

    std::uint32_t cells() const noexcept { return n_; }
    std::uint32_t degree() const noexcept { return degree_; }

    std::uint32_t at(std::uint32_t target, std::uint32_t source) const { return entries_[target * n_ + source]; }
    std::uint32_t loops(std::uint32_t cell) const { return at(cell, cell); }
    std::span<const std::uint32_t> row(std::uint32_t target) const {
        return std::span<const std::uint32_t>(entries_).subspan(std::size_t{target} * n_, n_);
    }
    const std::vector<std::uint32_t>& entries() const noexcept { return entries_; }
    std::vector<std::vector<std::uint32_t>> rows() const;

    // Ordered by cell count, then row-major entries.
    friend bool operator==(const Network& a, const Network& b) noexcept {
        return a.n_ == b.n_ && a.entries_ == b.entries_;
    }
    friend std::strong_ordering operator<=>(const Network& a, const Network& b) noexcept {
        if (auto c = a.n_ <=> b.n_; c != 0) return c;
        return a.entries_ <=> b.entries_;
    }

private:
    std::uint32_t n_;
    std::uint32_t degree_;
    std::vector<std::uint32_t> entries_;
};

// Checks that every row of the n x n matrix has the same sum and returns it.
// Throws MalformedNetwork naming the first offending row.
std::uint32_t common_row_sum(std::uint32_t n, std::span<const std::uint32_t> entries);

// Adds s loops to every cell: adj + s*Id.
Network add_loops(const Network& g, std::uint32_t s);

// Replaces each arc by k parallel copies: k*adj. k must be positive.
Network split_edges(const Network& g, std::uint32_t k);

// What reduce() removed: loops_removed loops per cell, then every
// multiplicity divided by divisor.
struct ReductionTrace {
    std::uint32_t loops_removed = 0;
    std::uint32_t divisor = 1;
    friend bool operator==(const ReductionTrace&, const ReductionTrace&) = default;
};

struct Reduction {
    Network network;
    ReductionTrace trace;
};

// Strips the minimum loop count from every cell, then divides all entries by
// their gcd (taken as 1 when nothing is left). The result is the unique
// minimal member of g's ODE-equivalence class up to relabeling, and
//   add_loops(split_edges(result, divisor), loops_removed) == g.
Reduction reduce(const Network& g);

// Some cell has no loops and the positive multiplicities have gcd 1.
// Degree-0 networks count as reduced.
bool is_reduced(const Network& g);

// Weak connectivity of the graph on nonzero off-diagonal entries.
bool is_connected(const Network& g);

// Simultaneous row/column relabeling: result.at(i, j) == g.at(perm[i], perm[j]).
// perm must be a permutation of 0..n-1.
Network relabel(const Network& g, std::span<const std::uint32_t> perm);

}  // namespace ccn
