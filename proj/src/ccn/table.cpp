#include "ccn/table.hpp"

#include "ccn/errors.hpp"

#include <json.hpp>

#include <sstream>
#include <vector>

namespace ccn {

TableFormat parse_table_format(std::string_view text) {
    if (text == "csv") return TableFormat::csv;
    if (text == "markdown" || text == "md") return TableFormat::markdown;
    if (text == "json") return TableFormat::json;
    throw DomainError("unknown table format '" + std::string(text) + "' (expected csv, markdown or json)");
}

std::string render_table(Counter& counter, const TableRequest& request) {
    if (request.max_n == 0 || request.max_r == 0) throw DomainError("table bounds must be positive");

    std::vector<std::vector<std::string>> cells(request.max_n);
    for (std::uint32_t n = 1; n <= request.max_n; ++n)
        for (std::uint32_t r = 1; r <= request.max_r; ++r)
            cells[n - 1].push_back(counter.count(request.family, n, r).str());

    std::ostringstream os;
    switch (request.format) {
        case TableFormat::csv: {
            os << "n/r";
            for (std::uint32_t r = 1; r <= request.max_r; ++r) os << ',' << r;
            os << '\n';
            for (std::uint32_t n = 1; n <= request.max_n; ++n) {
                os << n;
                for (const auto& v : cells[n - 1]) os << ',' << v;
                os << '\n';
            }
            break;
        }
        case TableFormat::markdown: {
            os << "| n/r |";
            for (std::uint32_t r = 1; r <= request.max_r; ++r) os << ' ' << r << " |";
            os << "\n|---:|";
            for (std::uint32_t r = 1; r <= request.max_r; ++r) os << "---:|";
            os << '\n';
            for (std::uint32_t n = 1; n <= request.max_n; ++n) {
                os << "| " << n << " |";
                for (const auto& v : cells[n - 1]) os << ' ' << v << " |";
                os << '\n';
            }
            break;
        }
        case TableFormat::json: {
            nlohmann::ordered_json doc;
            doc["family"] = std::string(1, family_letter(request.family));
            doc["max_n"] = request.max_n;
            doc["max_r"] = request.max_r;
            doc["rows"] = nlohmann::ordered_json::array();
            for (std::uint32_t n = 1; n <= request.max_n; ++n) {
                nlohmann::ordered_json row;
                row["n"] = n;
                row["values"] = cells[n - 1];
                doc["rows"].push_back(std::move(row));
            }
            os << doc.dump() << '\n';
            break;
        }
    }
    return os.str();
}

}  // namespace ccn
