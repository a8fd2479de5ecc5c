#include "ccn/report.hpp"

#include <json.hpp>

#include <algorithm>
#include <limits>
#include <sstream>

namespace ccn {

namespace {

nlohmann::ordered_json exact(const BigInt& v) {
    if (v >= 0 && v <= std::numeric_limits<std::uint64_t>::max()) return v.convert_to<std::uint64_t>();
    return v.str();
}

}  // namespace

void VerificationReport::add(std::string name, const BigInt& expected, const BigInt& actual) {
    checks.push_back({std::move(name), expected, actual, expected == actual});
}

void VerificationReport::append(const VerificationReport& other) {
    checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

bool VerificationReport::all_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

std::string VerificationReport::to_text() const {
    std::ostringstream os;
    os << "verification n=" << n << " r=" << r << '\n';
    std::size_t failed = 0;
    for (const auto& c : checks) {
        os << (c.pass ? "PASS " : "FAIL ") << c.name << " expected=" << c.expected << " actual=" << c.actual << '\n';
        failed += c.pass ? 0 : 1;
    }
    os << (failed == 0 ? "all " + std::to_string(checks.size()) + " checks passed"
                       : std::to_string(failed) + " of " + std::to_string(checks.size()) + " checks failed")
       << '\n';
    return os.str();
}

std::string VerificationReport::to_json() const {
    nlohmann::ordered_json doc;
    doc["n"] = n;
    doc["r"] = r;
    doc["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : checks) {
        nlohmann::ordered_json item;
        item["name"] = c.name;
        item["expected"] = exact(c.expected);
        item["actual"] = exact(c.actual);
        item["pass"] = c.pass;
        doc["checks"].push_back(std::move(item));
    }
    return doc.dump();
}

}  // namespace ccn
