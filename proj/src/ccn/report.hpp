#pragma once

#include "ccn/bigint.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace ccn {

struct Check {
    std::string name;
    BigInt expected;
    BigInt actual;
    bool pass = false;
};

// Outcome of an oracle verification. Mismatches are recorded as failing
// checks, never thrown.
struct VerificationReport {
    std::uint32_t n = 0;
    std::uint32_t r = 0;
    std::vector<Check> checks;

    void add(std::string name, const BigInt& expected, const BigInt& actual);
    void append(const VerificationReport& other);
    bool all_pass() const;

    // One line per check: "PASS name expected=... actual=...", then a summary.
    std::string to_text() const;
    // {"n":..,"r":..,"checks":[{"name":..,"expected":..,"actual":..,"pass":..}]}
    // Values that fit in 64 bits are JSON numbers, larger ones decimal strings.
    std::string to_json() const;
};

}  // namespace ccn
