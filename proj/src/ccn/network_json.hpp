#pragma once

#include "ccn/network.hpp"

#include <string>
#include <string_view>

namespace ccn {

// Network document: {"cells":n,"in_adjacency":[[row 0],...,[row n-1]]},
// with in_adjacency[i][j] the number of arcs from cell j into cell i.
//
// Parse failures throw ParseError (bad JSON, missing keys, wrong types,
// ragged rows, negative entries; messages carry the byte offset or JSON path)
// or MalformedNetwork (row sums differ, or degree 0 without allow_zero_degree).
Network network_from_json(std::string_view text, bool allow_zero_degree = false);

// Compact single-line rendering with keys in the order above.
std::string network_to_json(const Network& g);

std::string trace_to_json(const ReductionTrace& trace);

}  // namespace ccn
