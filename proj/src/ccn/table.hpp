#pragma once

#include "ccn/counting.hpp"

#include <cstdint>
#include <string>
#include <string_view>

namespace ccn {

enum class TableFormat { csv, markdown, json };

// "csv", "markdown" (or "md"), "json". Throws DomainError otherwise.
TableFormat parse_table_format(std::string_view text);

struct TableRequest {
    Family family = Family::H;
    std::uint32_t max_n = 1;
    std::uint32_t max_r = 1;
    TableFormat format = TableFormat::csv;
};

// Rows n = 1..max_n, columns r = 1..max_r, exact decimal values.
//   csv:      "n/r,1,2,...,max_r" then "n,v1,...,vR" per row
//   markdown: pipe table with the same header
//   json:     {"family":"H","max_n":..,"max_r":..,"rows":[{"n":1,"values":["1",...]},...]}
//             (values are decimal strings so they survive 53-bit JSON readers)
std::string render_table(Counter& counter, const TableRequest& request);

}  // namespace ccn
