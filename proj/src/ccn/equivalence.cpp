#include "ccn/equivalence.hpp"

#include "ccn/errors.hpp"

#include <algorithm>
#include <array>
#include <numeric>

namespace ccn {

bool are_ode_equivalent(const Network& a, const Network& b, std::uint32_t size_cap) {
    if (a.cells() != b.cells()) return false;
    if (a.cells() > size_cap) {
        throw UnsupportedSize("equivalence check needs n <= " + std::to_string(size_cap) + ", got n = " +
                              std::to_string(a.cells()));
    }
    return are_isomorphic(reduce(a).network, reduce(b).network, size_cap);
}

// One equation per matrix entry: offset*[i==j] + scale*m(i,j) = x(i,j).
// Gaussian elimination on the n^2 x 3 augmented system; consistent iff no
// row reduces to 0 = nonzero.
std::optional<PencilCoefficients> solve_in_pencil(const Network& x, const Network& m) {
    const auto n = m.cells();
    if (x.cells() != n) throw DomainError("solve_in_pencil: cell counts differ");

    std::vector<std::array<Rational, 3>> rows;
    rows.reserve(std::size_t{n} * n);
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = 0; j < n; ++j) rows.push_back({Rational(i == j ? 1 : 0), Rational(m.at(i, j)), Rational(x.at(i, j))});

    std::array<std::optional<std::size_t>, 2> pivot_row;
    std::size_t next = 0;
    for (std::size_t col = 0; col < 2; ++col) {
        auto it = std::find_if(rows.begin() + next, rows.end(), [&](const auto& r) { return r[col] != 0; });
        if (it == rows.end()) continue;
        std::iter_swap(rows.begin() + next, it);
        const auto p = rows[next];
        for (std::size_t k = 0; k < rows.size(); ++k) {
            if (k == next || rows[k][col] == 0) continue;
            const Rational f = rows[k][col] / p[col];
            for (std::size_t c = 0; c < 3; ++c) rows[k][c] -= f * p[c];
        }
        pivot_row[col] = next++;
    }
    for (std::size_t k = next; k < rows.size(); ++k)
        if (rows[k][2] != 0) return std::nullopt;

    // Free unknowns (no pivot) are set to zero.
    PencilCoefficients out{0, 0};
    if (pivot_row[1]) {
        const auto& r = rows[*pivot_row[1]];
        out.scale = r[2] / r[1];
    }
    if (pivot_row[0]) {
        const auto& r = rows[*pivot_row[0]];
        out.offset = (r[2] - r[1] * out.scale) / r[0];
    }
    return out;
}

std::optional<LinearWitness> find_linear_equivalence(const Network& a, const Network& b, std::uint32_t size_cap) {
    if (a.cells() != b.cells()) {
        throw DomainError("linear equivalence needs equal cell counts, got " + std::to_string(a.cells()) + " and " +
                          std::to_string(b.cells()));
    }
    const auto n = a.cells();
    if (n > size_cap) {
        throw UnsupportedSize("linear equivalence needs n <= " + std::to_string(size_cap) + ", got n = " +
                              std::to_string(n));
    }
    std::vector<std::uint32_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0u);
    do {
        const auto b_relabeled = relabel(b, perm);
        auto forward = solve_in_pencil(b_relabeled, a);
        if (!forward) continue;
        auto backward = solve_in_pencil(a, b_relabeled);
        if (!backward) continue;
        return LinearWitness{perm, std::move(*forward), std::move(*backward)};
    } while (std::next_permutation(perm.begin(), perm.end()));
    return std::nullopt;
}

bool linear_equiv_oracle(const Network& a, const Network& b, std::uint32_t size_cap) {
    return find_linear_equivalence(a, b, size_cap).has_value();
}

}  // namespace ccn
