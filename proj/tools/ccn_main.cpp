// ccn: command-line front end over the ccn C API.
//
// Exit statuses: 0 success (or "equivalent"), 1 "not-equivalent" or a failed
// verification, 2 usage/input/budget errors, 3 the two equivalence deciders
// disagreeing.

#include "ccn/ccn.h"

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <sstream>
#include <string>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNo = 1;
constexpr int kExitError = 2;
constexpr int kExitDisagreement = 3;

struct CliError {
    int status;
    std::string message;
};

void check(ccn_status status, const std::string& context) {
    if (status != CCN_OK) {
        throw CliError{kExitError, context + ": " + ccn_status_name(status) + ": " + ccn_last_error()};
    }
}

struct StringDeleter {
    void operator()(char* s) const { ccn_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

struct NetworkDeleter {
    void operator()(ccn_network* g) const { ccn_network_destroy(g); }
};
using OwnedNetwork = std::unique_ptr<ccn_network, NetworkDeleter>;

struct CounterDeleter {
    void operator()(ccn_counter* c) const { ccn_counter_destroy(c); }
};

struct CensusDeleter {
    void operator()(ccn_census* c) const { ccn_census_destroy(c); }
};

std::string read_input(const std::string& path) {
    if (path == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CliError{kExitError, path + ": cannot open file"};
    return std::string(std::istreambuf_iterator<char>(in), {});
}

OwnedNetwork load_network(const std::string& path, bool allow_zero_degree) {
    const auto text = read_input(path);
    ccn_network* g = nullptr;
    check(ccn_network_from_json(text.data(), text.size(), allow_zero_degree ? 1 : 0, &g), path);
    return OwnedNetwork(g);
}

std::string to_json(const ccn_network* g) {
    char* out = nullptr;
    check(ccn_network_to_json(g, &out), "render network");
    return OwnedString(out).get();
}

std::unique_ptr<ccn_counter, CounterDeleter> make_counter() {
    ccn_counter* counter = nullptr;
    check(ccn_counter_create(&counter), "counter");
    return std::unique_ptr<ccn_counter, CounterDeleter>(counter);
}

ccn_family family_arg(const std::string& text) {
    ccn_family family{};
    if (ccn_parse_family(text.c_str(), &family) != CCN_OK) throw CliError{kExitError, ccn_last_error()};
    return family;
}

struct GlobalOptions {
    std::string format;
    std::uint64_t budget = 0;
    bool oracle = false;
    unsigned workers = 1;
};

ccn_census_options census_options(const GlobalOptions& global) {
    ccn_census_options options;
    ccn_census_options_default(&options);
    if (global.budget != 0) options.budget = global.budget;
    options.workers = global.workers == 0 ? 1 : global.workers;
    return options;
}

int run_count(const std::string& family, std::uint32_t n, std::uint32_t r, bool verbose) {
    auto counter = make_counter();
    const auto fam = family_arg(family);
    char* value = nullptr;
    check(ccn_count(counter.get(), fam, n, r, &value), "count");
    OwnedString owned(value);
    if (verbose) {
        char* breakdown = nullptr;
        check(ccn_count_breakdown(n, r, &breakdown), "count");
        std::cerr << OwnedString(breakdown).get();
    }
    std::cout << owned.get() << '\n';
    return kExitOk;
}

int run_table(const std::string& family, std::uint32_t max_n, std::uint32_t max_r, const GlobalOptions& global) {
    ccn_table_format format = CCN_TABLE_CSV;
    if (!global.format.empty() && ccn_parse_table_format(global.format.c_str(), &format) != CCN_OK) {
        throw CliError{kExitError, std::string("table: ") + ccn_last_error()};
    }
    auto counter = make_counter();
    const auto fam = family_arg(family);
    char* text = nullptr;
    check(ccn_table(counter.get(), fam, max_n, max_r, format, &text), "table");
    std::cout << OwnedString(text).get();
    return kExitOk;
}

int run_reduce(const std::string& path, bool allow_zero_degree) {
    auto g = load_network(path, allow_zero_degree);
    ccn_network* reduced = nullptr;
    std::uint32_t loops = 0;
    std::uint32_t divisor = 1;
    check(ccn_reduce(g.get(), &reduced, &loops, &divisor), path);
    OwnedNetwork owned(reduced);
    std::cout << to_json(owned.get()) << '\n'
              << "{\"loops_removed\":" << loops << ",\"divisor\":" << divisor << "}\n";
    return kExitOk;
}

int run_equiv(const std::string& path_a, const std::string& path_b, bool allow_zero_degree,
              const GlobalOptions& global) {
    auto a = load_network(path_a, allow_zero_degree);
    auto b = load_network(path_b, allow_zero_degree);
    int equivalent = 0;
    check(ccn_are_ode_equivalent(a.get(), b.get(), 0, &equivalent), "equiv");
    if (global.oracle) {
        if (ccn_network_cells(a.get()) != ccn_network_cells(b.get())) {
            // Different cell counts are never equivalent; the oracle only
            // compares equal sizes.
            if (equivalent) throw CliError{kExitDisagreement, "internal error: cell counts differ but reported equivalent"};
        } else {
            int linear = 0;
            check(ccn_linear_equiv_oracle(a.get(), b.get(), 0, &linear), "equiv --oracle");
            if (linear != equivalent) {
                throw CliError{kExitDisagreement,
                               std::string("internal error: reduction says ") +
                                   (equivalent ? "equivalent" : "not-equivalent") + " but the linear oracle says " +
                                   (linear ? "equivalent" : "not-equivalent")};
            }
        }
    }
    std::cout << (equivalent ? "equivalent" : "not-equivalent") << '\n';
    return equivalent ? kExitOk : kExitNo;
}

int run_verify(std::uint32_t n, std::uint32_t r, const GlobalOptions& global) {
    ccn_report_format format = CCN_REPORT_TEXT;
    if (global.format == "json") {
        format = CCN_REPORT_JSON;
    } else if (!global.format.empty() && global.format != "text") {
        throw CliError{kExitError, "verify: --format must be text or json"};
    }
    const auto options = census_options(global);
    char* report = nullptr;
    int all_pass = 0;
    check(ccn_verify(n, r, &options, format, &report, &all_pass), "verify");
    std::cout << OwnedString(report).get();
    return all_pass ? kExitOk : kExitNo;
}

int run_enumerate(std::uint32_t n, std::uint32_t r, bool connected_only, bool minimal_only,
                  const GlobalOptions& global) {
    const auto options = census_options(global);
    ccn_census* raw = nullptr;
    check(ccn_census_run(n, r, &options, &raw), "enumerate");
    std::unique_ptr<ccn_census, CensusDeleter> census(raw);
    const auto classes = ccn_census_class_count(census.get());
    std::ostringstream out;
    for (std::size_t i = 0; i < classes; ++i) {
        ccn_network* rep = nullptr;
        int connected = 0;
        int reduced = 0;
        check(ccn_census_class(census.get(), i, &rep, &connected, &reduced), "enumerate");
        OwnedNetwork owned(rep);
        if (connected_only && !connected) continue;
        if (minimal_only && !reduced) continue;
        out << to_json(owned.get()) << '\n';
    }
    std::cout << out.str();
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Count and classify identical-edge homogeneous coupled cell networks", "ccn"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOptions global;
    app.add_option("--format", global.format, "Output format: csv, markdown or json (table); text or json (verify)");
    app.add_option("--budget", global.budget, "Largest |Omega| the brute-force oracle may enumerate");
    app.add_flag("--oracle", global.oracle, "equiv: also run the linear-equivalence oracle and compare");
    app.add_option("--workers", global.workers, "Oracle worker threads (output does not depend on this)");

    std::string family;
    std::uint32_t n = 0;
    std::uint32_t r = 0;
    bool verbose = false;
    auto* count = app.add_subcommand("count", "Print H, K or M for (n, r) as an exact integer");
    count->add_option("family", family, "H, K or M")->required();
    count->add_option("n", n, "Number of cells")->required();
    count->add_option("r", r, "Degree")->required();
    count->add_flag("--verbose", verbose, "Print the per-cycle-type orbit sum to stderr");

    auto* table = app.add_subcommand("table", "Print the family for n = 1..max_n, r = 1..max_r");
    table->add_option("family", family, "H, K or M")->required();
    table->add_option("max_n", n, "Largest cell count")->required();
    table->add_option("max_r", r, "Largest degree")->required();

    std::string path_a;
    std::string path_b;
    bool allow_zero_degree = false;
    auto* reduce = app.add_subcommand("reduce", "Reduce a network JSON document to its minimal form");
    reduce->add_option("input", path_a, "Network JSON file, or - for stdin")->required();
    reduce->add_flag("--allow-zero-degree", allow_zero_degree, "Accept degree-0 networks");

    auto* equiv = app.add_subcommand("equiv", "Decide ODE equivalence of two network JSON documents");
    equiv->add_option("a", path_a, "First network JSON file")->required();
    equiv->add_option("b", path_b, "Second network JSON file")->required();
    equiv->add_flag("--allow-zero-degree", allow_zero_degree, "Accept degree-0 networks");

    auto* verify = app.add_subcommand("verify", "Check the closed-form counts against brute-force enumeration");
    verify->add_option("n", n, "Number of cells")->required();
    verify->add_option("r", r, "Degree")->required();

    bool connected_only = false;
    bool minimal_only = false;
    auto* enumerate = app.add_subcommand("enumerate", "List one canonical network per isomorphism class");
    enumerate->add_option("n", n, "Number of cells")->required();
    enumerate->add_option("r", r, "Degree")->required();
    enumerate->add_flag("--connected", connected_only, "Only connected networks");
    enumerate->add_flag("--minimal", minimal_only, "Only reduced (minimal) networks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitError;
    }

    try {
        if (*count) return run_count(family, n, r, verbose);
        if (*table) return run_table(family, n, r, global);
        if (*reduce) return run_reduce(path_a, allow_zero_degree);
        if (*equiv) return run_equiv(path_a, path_b, allow_zero_degree, global);
        if (*verify) return run_verify(n, r, global);
        if (*enumerate) return run_enumerate(n, r, connected_only, minimal_only, global);
    } catch (const CliError& e) {
        std::cerr << "ccn: " << e.message << '\n';
        return e.status;
    }
    return kExitError;
}
