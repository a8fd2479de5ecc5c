#pragma once

#include "ccn/canonical.hpp"
#include "ccn/network.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <vector>

namespace ccn {

using Rational = boost::multiprecision::cpp_rational;

// Decides ODE equivalence by reducing both networks and comparing the
// reductions up to isomorphism. Networks with different cell counts are never
// equivalent.
bool are_ode_equivalent(const Network& a, const Network& b, std::uint32_t size_cap = kDefaultSizeCap);

// Exact rational solution of x = offset*Id + scale*m, if one exists.
struct PencilCoefficients {
    Rational offset;
    Rational scale;
};

std::optional<PencilCoefficients> solve_in_pencil(const Network& x, const Network& m);

// Relabeling of b under which the linear pencils {a Id + b A} coincide, with
// relabel(b, permutation) == forward.offset*Id + forward.scale*A.
struct LinearWitness {
    std::vector<std::uint32_t> permutation;
    PencilCoefficients forward;
    PencilCoefficients backward;
};

// Independent decision via linear equivalence: searches all n! relabelings of
// b for one where each adjacency matrix lies in the other's span with the
// identity. Throws DomainError on mismatched cell counts, UnsupportedSize
// above the cap.
std::optional<LinearWitness> find_linear_equivalence(const Network& a, const Network& b,
                                                     std::uint32_t size_cap = kDefaultSizeCap);

bool linear_equiv_oracle(const Network& a, const Network& b, std::uint32_t size_cap = kDefaultSizeCap);

}  // namespace ccn
