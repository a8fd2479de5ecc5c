#include "ccn/ccn.h"

#include "ccn/canonical.hpp"
#include "ccn/counting.hpp"
#include "ccn/equivalence.hpp"
#include "ccn/errors.hpp"
#include "ccn/network_json.hpp"
#include "ccn/oracle.hpp"
#include "ccn/table.hpp"

#include <cstdlib>
#include <cstring>
#include <new>
#include <sstream>
#include <stdexcept>
#include <string>

struct ccn_counter {
    ccn::Counter impl;
};

struct ccn_network {
    ccn::Network impl;
};

struct ccn_census {
    ccn::OrbitCensus impl;
};

namespace {

thread_local std::string last_error;

// Bad enum values from the caller; reported as CCN_ERR_INVALID_ARGUMENT.
struct InvalidArgument : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

ccn_status status_of(ccn::ErrorCode code) {
    switch (code) {
        case ccn::ErrorCode::domain: return CCN_ERR_DOMAIN;
        case ccn::ErrorCode::malformed_network: return CCN_ERR_MALFORMED_NETWORK;
        case ccn::ErrorCode::unsupported_size: return CCN_ERR_UNSUPPORTED_SIZE;
        case ccn::ErrorCode::budget_exceeded: return CCN_ERR_BUDGET_EXCEEDED;
        case ccn::ErrorCode::parse: return CCN_ERR_PARSE;
        case ccn::ErrorCode::internal: return CCN_ERR_INTERNAL;
    }
    return CCN_ERR_INTERNAL;
}

ccn_status fail(ccn_status status, std::string message) {
    last_error = std::move(message);
    return status;
}

// Runs body, translating exceptions into status codes.
template <class F>
ccn_status guarded(F&& body) {
    try {
        last_error.clear();
        body();
        return CCN_OK;
    } catch (const ccn::Error& e) {
        return fail(status_of(e.code()), e.what());
    } catch (const InvalidArgument& e) {
        return fail(CCN_ERR_INVALID_ARGUMENT, e.what());
    } catch (const std::bad_alloc&) {
        return fail(CCN_ERR_OUT_OF_MEMORY, "out of memory");
    } catch (const std::exception& e) {
        return fail(CCN_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(CCN_ERR_INTERNAL, "unknown exception");
    }
}

char* duplicate(const std::string& s) {
    auto* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

ccn_network* wrap(ccn::Network g) { return new ccn_network{std::move(g)}; }

ccn::Family family_of(ccn_family f) {
    switch (f) {
        case CCN_FAMILY_H: return ccn::Family::H;
        case CCN_FAMILY_K: return ccn::Family::K;
        case CCN_FAMILY_M: return ccn::Family::M;
    }
    throw InvalidArgument("unknown family value " + std::to_string(static_cast<int>(f)));
}

std::uint32_t cap_or_default(std::uint32_t cap) { return cap == 0 ? ccn::kDefaultSizeCap : cap; }

ccn::CensusOptions options_of(const ccn_census_options* options) {
    ccn::CensusOptions out;
    if (options) {
        out.budget = options->budget;
        out.workers = options->workers == 0 ? 1 : options->workers;
        out.size_cap = cap_or_default(options->size_cap);
    }
    return out;
}

#define CCN_REQUIRE(ptr)                                                        \
    do {                                                                        \
        if (!(ptr)) return fail(CCN_ERR_INVALID_ARGUMENT, #ptr " must not be null"); \
    } while (0)

}  // namespace

extern "C" {

const char* ccn_status_name(ccn_status status) {
    switch (status) {
        case CCN_OK: return "ok";
        case CCN_ERR_INVALID_ARGUMENT: return "invalid argument";
        case CCN_ERR_DOMAIN: return "domain error";
        case CCN_ERR_MALFORMED_NETWORK: return "malformed network";
        case CCN_ERR_UNSUPPORTED_SIZE: return "unsupported size";
        case CCN_ERR_BUDGET_EXCEEDED: return "budget exceeded";
        case CCN_ERR_PARSE: return "parse error";
        case CCN_ERR_INTERNAL: return "internal error";
        case CCN_ERR_OUT_OF_MEMORY: return "out of memory";
    }
    return "unknown status";
}

const char* ccn_last_error(void) { return last_error.c_str(); }

void ccn_string_free(char* s) { std::free(s); }

const char* ccn_version(void) { return "1.0.0"; }

ccn_status ccn_parse_family(const char* text, ccn_family* out) {
    CCN_REQUIRE(text);
    CCN_REQUIRE(out);
    return guarded([&] { *out = static_cast<ccn_family>(ccn::parse_family(text)); });
}

ccn_status ccn_parse_table_format(const char* text, ccn_table_format* out) {
    CCN_REQUIRE(text);
    CCN_REQUIRE(out);
    return guarded([&] { *out = static_cast<ccn_table_format>(ccn::parse_table_format(text)); });
}

ccn_status ccn_counter_create(ccn_counter** out) {
    CCN_REQUIRE(out);
    return guarded([&] { *out = new ccn_counter{}; });
}

void ccn_counter_destroy(ccn_counter* counter) { delete counter; }

ccn_status ccn_count(ccn_counter* counter, ccn_family family, uint32_t n, uint32_t r, char** out_decimal) {
    CCN_REQUIRE(counter);
    CCN_REQUIRE(out_decimal);
    return guarded([&] { *out_decimal = duplicate(counter->impl.count(family_of(family), n, r).str()); });
}

ccn_status ccn_count_breakdown(uint32_t n, uint32_t r, char** out_text) {
    CCN_REQUIRE(out_text);
    return guarded([&] {
        std::ostringstream os;
        for (const auto& term : ccn::burnside_terms(n, r)) {
            os << term.cycle_type.to_string() << " class_size=" << term.class_size << " fixed=" << term.fixed_networks
               << '\n';
        }
        *out_text = duplicate(os.str());
    });
}

ccn_status ccn_table(ccn_counter* counter, ccn_family family, uint32_t max_n, uint32_t max_r,
                     ccn_table_format format, char** out_text) {
    CCN_REQUIRE(counter);
    CCN_REQUIRE(out_text);
    return guarded([&] {
        ccn::TableRequest request;
        request.family = family_of(family);
        request.max_n = max_n;
        request.max_r = max_r;
        switch (format) {
            case CCN_TABLE_CSV: request.format = ccn::TableFormat::csv; break;
            case CCN_TABLE_MARKDOWN: request.format = ccn::TableFormat::markdown; break;
            case CCN_TABLE_JSON: request.format = ccn::TableFormat::json; break;
            default: throw InvalidArgument("unknown table format value");
        }
        *out_text = duplicate(ccn::render_table(counter->impl, request));
    });
}

ccn_status ccn_euler_totient(uint64_t r, uint64_t* out) {
    CCN_REQUIRE(out);
    return guarded([&] { *out = ccn::euler_totient(r); });
}

ccn_status ccn_network_create(uint32_t n, const uint32_t* entries, int allow_zero_degree, ccn_network** out) {
    CCN_REQUIRE(entries);
    CCN_REQUIRE(out);
    return guarded([&] {
        std::vector<std::uint32_t> values(entries, entries + std::size_t{n} * n);
        *out = wrap(ccn::Network(n, std::move(values), allow_zero_degree != 0));
    });
}

ccn_status ccn_network_from_json(const char* text, size_t len, int allow_zero_degree, ccn_network** out) {
    CCN_REQUIRE(text);
    CCN_REQUIRE(out);
    return guarded([&] { *out = wrap(ccn::network_from_json(std::string_view(text, len), allow_zero_degree != 0)); });
}

ccn_status ccn_network_to_json(const ccn_network* g, char** out_json) {
    CCN_REQUIRE(g);
    CCN_REQUIRE(out_json);
    return guarded([&] { *out_json = duplicate(ccn::network_to_json(g->impl)); });
}

void ccn_network_destroy(ccn_network* g) { delete g; }

uint32_t ccn_network_cells(const ccn_network* g) { return g ? g->impl.cells() : 0; }

uint32_t ccn_network_degree(const ccn_network* g) { return g ? g->impl.degree() : 0; }

ccn_status ccn_network_entry(const ccn_network* g, uint32_t target, uint32_t source, uint32_t* out) {
    CCN_REQUIRE(g);
    CCN_REQUIRE(out);
    if (target >= g->impl.cells() || source >= g->impl.cells()) return fail(CCN_ERR_DOMAIN, "cell index out of range");
    *out = g->impl.at(target, source);
    return CCN_OK;
}

ccn_status ccn_add_loops(const ccn_network* g, uint32_t s, ccn_network** out) {
    CCN_REQUIRE(g);
    CCN_REQUIRE(out);
    return guarded([&] { *out = wrap(ccn::add_loops(g->impl, s)); });
}

ccn_status ccn_split_edges(const ccn_network* g, uint32_t k, ccn_network** out) {
    CCN_REQUIRE(g);
    CCN_REQUIRE(out);
    return guarded([&] { *out = wrap(ccn::split_edges(g->impl, k)); });
}

ccn_status ccn_reduce(const ccn_network* g, ccn_network** out, uint32_t* loops_removed, uint32_t* divisor) {
    CCN_REQUIRE(g);
    CCN_REQUIRE(out);
    return guarded([&] {
        auto reduction = ccn::reduce(g->impl);
        if (loops_removed) *loops_removed = reduction.trace.loops_removed;
        if (divisor) *divisor = reduction.trace.divisor;
        *out = wrap(std::move(reduction.network));
    });
}

ccn_status ccn_is_reduced(const ccn_network* g, int* out) {
    CCN_REQUIRE(g);
    CCN_REQUIRE(out);
    return guarded([&] { *out = ccn::is_reduced(g->impl) ? 1 : 0; });
}

ccn_status ccn_is_connected(const ccn_network* g, int* out) {
    CCN_REQUIRE(g);
    CCN_REQUIRE(out);
    return guarded([&] { *out = ccn::is_connected(g->impl) ? 1 : 0; });
}

ccn_status ccn_canonical_form(const ccn_network* g, uint32_t size_cap, ccn_network** out) {
    CCN_REQUIRE(g);
    CCN_REQUIRE(out);
    return guarded([&] { *out = wrap(ccn::canonical_form(g->impl, cap_or_default(size_cap))); });
}

ccn_status ccn_are_isomorphic(const ccn_network* a, const ccn_network* b, uint32_t size_cap, int* out) {
    CCN_REQUIRE(a);
    CCN_REQUIRE(b);
    CCN_REQUIRE(out);
    return guarded([&] { *out = ccn::are_isomorphic(a->impl, b->impl, cap_or_default(size_cap)) ? 1 : 0; });
}

ccn_status ccn_are_ode_equivalent(const ccn_network* a, const ccn_network* b, uint32_t size_cap, int* out) {
    CCN_REQUIRE(a);
    CCN_REQUIRE(b);
    CCN_REQUIRE(out);
    return guarded([&] { *out = ccn::are_ode_equivalent(a->impl, b->impl, cap_or_default(size_cap)) ? 1 : 0; });
}

ccn_status ccn_linear_equiv_oracle(const ccn_network* a, const ccn_network* b, uint32_t size_cap, int* out) {
    CCN_REQUIRE(a);
    CCN_REQUIRE(b);
    CCN_REQUIRE(out);
    return guarded([&] { *out = ccn::linear_equiv_oracle(a->impl, b->impl, cap_or_default(size_cap)) ? 1 : 0; });
}

void ccn_census_options_default(ccn_census_options* options) {
    if (!options) return;
    options->budget = ccn::kDefaultBudget;
    options->workers = 1;
    options->size_cap = ccn::kDefaultSizeCap;
}

ccn_status ccn_omega_size(uint32_t n, uint32_t r, char** out_decimal) {
    CCN_REQUIRE(out_decimal);
    return guarded([&] { *out_decimal = duplicate(ccn::omega_size(n, r).str()); });
}

ccn_status ccn_census_run(uint32_t n, uint32_t r, const ccn_census_options* options, ccn_census** out) {
    CCN_REQUIRE(out);
    return guarded([&] { *out = new ccn_census{ccn::census(n, r, options_of(options))}; });
}

void ccn_census_destroy(ccn_census* census) { delete census; }

ccn_status ccn_census_totals(const ccn_census* census, uint64_t* total, uint64_t* connected,
                             uint64_t* minimal_connected) {
    CCN_REQUIRE(census);
    if (total) *total = census->impl.total_orbits;
    if (connected) *connected = census->impl.connected_orbits;
    if (minimal_connected) *minimal_connected = census->impl.minimal_connected_orbits;
    return CCN_OK;
}

size_t ccn_census_class_count(const ccn_census* census) { return census ? census->impl.classes.size() : 0; }

ccn_status ccn_census_class(const ccn_census* census, size_t index, ccn_network** representative, int* connected,
                            int* reduced) {
    CCN_REQUIRE(census);
    if (index >= census->impl.classes.size()) return fail(CCN_ERR_DOMAIN, "class index out of range");
    return guarded([&] {
        const auto& cls = census->impl.classes[index];
        if (connected) *connected = cls.connected ? 1 : 0;
        if (reduced) *reduced = cls.reduced ? 1 : 0;
        if (representative) *representative = wrap(cls.representative);
    });
}

ccn_status ccn_verify(uint32_t n, uint32_t r, const ccn_census_options* options, ccn_report_format format,
                      char** out_report, int* all_pass) {
    CCN_REQUIRE(out_report);
    CCN_REQUIRE(all_pass);
    if (format != CCN_REPORT_TEXT && format != CCN_REPORT_JSON) {
        return fail(CCN_ERR_INVALID_ARGUMENT, "unknown report format value");
    }
    return guarded([&] {
        const auto report = ccn::verify_all(n, r, options_of(options));
        *all_pass = report.all_pass() ? 1 : 0;
        *out_report = duplicate(format == CCN_REPORT_JSON ? report.to_json() + "\n" : report.to_text());
    });
}

}  // extern "C"
