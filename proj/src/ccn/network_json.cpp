#include "ccn/network_json.hpp"

#include "ccn/errors.hpp"

#include <json.hpp>

#include <limits>
#include <sstream>

namespace ccn {

using json = nlohmann::json;

Network network_from_json(std::string_view text, bool allow_zero_degree) {
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw ParseError("invalid JSON at byte " + std::to_string(e.byte) + ": " + e.what());
    }
    if (!doc.is_object()) throw ParseError("$: expected an object");
    if (!doc.contains("cells")) throw ParseError("$: missing key \"cells\"");
    if (!doc.contains("in_adjacency")) throw ParseError("$: missing key \"in_adjacency\"");

    const auto& cells = doc["cells"];
    if (!cells.is_number_integer()) throw ParseError("$.cells: expected an integer");
    if (cells.get<std::int64_t>() <= 0) throw ParseError("$.cells: must be positive");
    if (cells.get<std::int64_t>() > 1 << 16) throw ParseError("$.cells: too large");
    const auto n = cells.get<std::uint32_t>();

    const auto& adj = doc["in_adjacency"];
    if (!adj.is_array()) throw ParseError("$.in_adjacency: expected an array");
    if (adj.size() != n) {
        throw ParseError("$.in_adjacency: has " + std::to_string(adj.size()) + " rows but cells is " +
                         std::to_string(n));
    }
    std::vector<std::uint32_t> entries;
    entries.reserve(std::size_t{n} * n);
    for (std::uint32_t i = 0; i < n; ++i) {
        const auto path = "$.in_adjacency[" + std::to_string(i) + "]";
        const auto& row = adj[i];
        if (!row.is_array()) throw ParseError(path + ": expected an array");
        if (row.size() != n) {
            throw ParseError(path + ": ragged row with " + std::to_string(row.size()) + " entries, expected " +
                             std::to_string(n));
        }
        for (std::uint32_t j = 0; j < n; ++j) {
            const auto& v = row[j];
            const auto at = path + "[" + std::to_string(j) + "]";
            if (!v.is_number_integer()) throw ParseError(at + ": expected an integer");
            if (v.is_number_unsigned()) {
                if (v.get<std::uint64_t>() > std::numeric_limits<std::uint32_t>::max())
                    throw ParseError(at + ": entry too large");
            } else if (v.get<std::int64_t>() < 0) {
                throw ParseError(at + ": negative entry " + std::to_string(v.get<std::int64_t>()));
            }
            entries.push_back(v.get<std::uint32_t>());
        }
    }
    return Network(n, std::move(entries), allow_zero_degree);
}

std::string network_to_json(const Network& g) {
    std::ostringstream os;
    os << "{\"cells\":" << g.cells() << ",\"in_adjacency\":[";
    for (std::uint32_t i = 0; i < g.cells(); ++i) {
        if (i) os << ',';
        os << '[';
        for (std::uint32_t j = 0; j < g.cells(); ++j) {
            if (j) os << ',';
            os << g.at(i, j);
        }
        os << ']';
    }
    os << "]}";
    return os.str();
}

std::string trace_to_json(const ReductionTrace& trace) {
    return "{\"loops_removed\":" + std::to_string(trace.loops_removed) + ",\"divisor\":" +
           std::to_string(trace.divisor) + "}";
}

}  // namespace ccn
