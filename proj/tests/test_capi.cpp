#include "ccn/ccn.h"

#include <gtest/gtest.h>

#include <cstring>
#include <string>

namespace {

std::string take(char* s) {
    std::string out = s ? s : "";
    ccn_string_free(s);
    return out;
}

ccn_network* make(uint32_t n, std::initializer_list<uint32_t> entries, int allow_zero = 0) {
    std::vector<uint32_t> v(entries);
    ccn_network* g = nullptr;
    EXPECT_EQ(ccn_network_create(n, v.data(), allow_zero, &g), CCN_OK) << ccn_last_error();
    return g;
}

}  // namespace

TEST(CApi, Counting) {
    ccn_counter* counter = nullptr;
    ASSERT_EQ(ccn_counter_create(&counter), CCN_OK);
    char* out = nullptr;
    ASSERT_EQ(ccn_count(counter, CCN_FAMILY_M, 3, 3, &out), CCN_OK);
    EXPECT_EQ(take(out), "128");
    ASSERT_EQ(ccn_count(counter, CCN_FAMILY_H, 6, 6, &out), CCN_OK);
    EXPECT_EQ(take(out), "13508534834704");
    EXPECT_EQ(ccn_count(counter, CCN_FAMILY_K, 0, 3, &out), CCN_ERR_DOMAIN);
    EXPECT_STRNE(ccn_last_error(), "");
    EXPECT_EQ(ccn_count(counter, static_cast<ccn_family>(7), 1, 1, &out), CCN_ERR_INVALID_ARGUMENT);
    EXPECT_EQ(ccn_count(nullptr, CCN_FAMILY_H, 1, 1, &out), CCN_ERR_INVALID_ARGUMENT);
    EXPECT_EQ(ccn_count(counter, CCN_FAMILY_H, 1, 1, nullptr), CCN_ERR_INVALID_ARGUMENT);

    ASSERT_EQ(ccn_table(counter, CCN_FAMILY_K, 2, 3, CCN_TABLE_CSV, &out), CCN_OK);
    EXPECT_EQ(take(out), "n/r,1,2,3\n1,1,1,1\n2,2,5,9\n");

    ASSERT_EQ(ccn_count_breakdown(2, 1, &out), CCN_OK);
    const auto breakdown = take(out);
    EXPECT_NE(breakdown.find("[1^2]"), std::string::npos);
    EXPECT_NE(breakdown.find("[2^1]"), std::string::npos);
    ccn_counter_destroy(counter);

    uint64_t phi = 0;
    ASSERT_EQ(ccn_euler_totient(12, &phi), CCN_OK);
    EXPECT_EQ(phi, 4u);
    EXPECT_EQ(ccn_euler_totient(0, &phi), CCN_ERR_DOMAIN);

    ccn_family fam;
    EXPECT_EQ(ccn_parse_family("k", &fam), CCN_OK);
    EXPECT_EQ(fam, CCN_FAMILY_K);
    EXPECT_EQ(ccn_parse_family("Q", &fam), CCN_ERR_DOMAIN);
    ccn_table_format fmt;
    EXPECT_EQ(ccn_parse_table_format("md", &fmt), CCN_OK);
    EXPECT_EQ(fmt, CCN_TABLE_MARKDOWN);
}

TEST(CApi, StatusNames) {
    EXPECT_STREQ(ccn_status_name(CCN_OK), "ok");
    EXPECT_STRNE(ccn_status_name(CCN_ERR_BUDGET_EXCEEDED), ccn_status_name(CCN_ERR_PARSE));
    EXPECT_NE(std::strlen(ccn_version()), 0u);
}

TEST(CApi, NetworkLifecycle) {
    ccn_network* g = make(3, {2, 3, 3, 3, 5, 0, 6, 0, 2});
    EXPECT_EQ(ccn_network_cells(g), 3u);
    EXPECT_EQ(ccn_network_degree(g), 8u);
    uint32_t v = 0;
    ASSERT_EQ(ccn_network_entry(g, 2, 0, &v), CCN_OK);
    EXPECT_EQ(v, 6u);
    EXPECT_EQ(ccn_network_entry(g, 3, 0, &v), CCN_ERR_DOMAIN);

    ccn_network* reduced = nullptr;
    uint32_t loops = 0, divisor = 0;
    ASSERT_EQ(ccn_reduce(g, &reduced, &loops, &divisor), CCN_OK);
    EXPECT_EQ(loops, 2u);
    EXPECT_EQ(divisor, 3u);
    char* json = nullptr;
    ASSERT_EQ(ccn_network_to_json(reduced, &json), CCN_OK);
    EXPECT_EQ(take(json), R"({"cells":3,"in_adjacency":[[0,1,1],[1,1,0],[2,0,0]]})");

    int flag = -1;
    ASSERT_EQ(ccn_is_reduced(reduced, &flag), CCN_OK);
    EXPECT_EQ(flag, 1);
    ASSERT_EQ(ccn_is_connected(reduced, &flag), CCN_OK);
    EXPECT_EQ(flag, 1);

    ccn_network *split = nullptr, *rebuilt = nullptr;
    ASSERT_EQ(ccn_split_edges(reduced, 3, &split), CCN_OK);
    ASSERT_EQ(ccn_add_loops(split, 2, &rebuilt), CCN_OK);
    ASSERT_EQ(ccn_are_isomorphic(rebuilt, g, 0, &flag), CCN_OK);
    EXPECT_EQ(flag, 1);
    ASSERT_EQ(ccn_are_ode_equivalent(reduced, g, 0, &flag), CCN_OK);
    EXPECT_EQ(flag, 1);
    ASSERT_EQ(ccn_linear_equiv_oracle(reduced, g, 0, &flag), CCN_OK);
    EXPECT_EQ(flag, 1);
    EXPECT_EQ(ccn_split_edges(g, 0, &split), CCN_ERR_DOMAIN);

    ccn_network* canon = nullptr;
    ASSERT_EQ(ccn_canonical_form(reduced, 0, &canon), CCN_OK);
    ASSERT_EQ(ccn_network_to_json(canon, &json), CCN_OK);
    EXPECT_EQ(take(json), R"({"cells":3,"in_adjacency":[[0,0,2],[0,1,1],[1,1,0]]})");

    for (auto* h : {g, reduced, split, rebuilt, canon}) ccn_network_destroy(h);
    ccn_network_destroy(nullptr);
}

TEST(CApi, NetworkErrors) {
    ccn_network* g = nullptr;
    const uint32_t bad[] = {0, 2, 1, 0};
    EXPECT_EQ(ccn_network_create(2, bad, 0, &g), CCN_ERR_MALFORMED_NETWORK);
    EXPECT_EQ(g, nullptr);
    EXPECT_EQ(ccn_network_create(2, nullptr, 0, &g), CCN_ERR_INVALID_ARGUMENT);

    const std::string ragged = R"({"cells":2,"in_adjacency":[[0,1],[1]]})";
    EXPECT_EQ(ccn_network_from_json(ragged.data(), ragged.size(), 0, &g), CCN_ERR_PARSE);
    EXPECT_NE(std::string(ccn_last_error()).find("$.in_adjacency[1]"), std::string::npos);

    const std::string ok = R"({"cells":2,"in_adjacency":[[0,1],[1,0]]})";
    ASSERT_EQ(ccn_network_from_json(ok.data(), ok.size(), 0, &g), CCN_OK);
    ccn_network* big = make(9, {1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0,
                                0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0,
                                0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1});
    int flag = 0;
    EXPECT_EQ(ccn_are_ode_equivalent(big, big, 0, &flag), CCN_ERR_UNSUPPORTED_SIZE);
    EXPECT_EQ(ccn_are_ode_equivalent(big, big, 9, &flag), CCN_OK);
    EXPECT_EQ(ccn_linear_equiv_oracle(g, big, 9, &flag), CCN_ERR_DOMAIN);
    ccn_network_destroy(g);
    ccn_network_destroy(big);
}

TEST(CApi, Census) {
    char* out = nullptr;
    ASSERT_EQ(ccn_omega_size(3, 2, &out), CCN_OK);
    EXPECT_EQ(take(out), "216");

    ccn_census_options opts;
    ccn_census_options_default(&opts);
    opts.workers = 2;
    ccn_census* c = nullptr;
    ASSERT_EQ(ccn_census_run(3, 2, &opts, &c), CCN_OK);
    uint64_t total = 0, connected = 0, minimal = 0;
    ASSERT_EQ(ccn_census_totals(c, &total, &connected, &minimal), CCN_OK);
    EXPECT_EQ(total, 44u);
    EXPECT_EQ(connected, 38u);
    EXPECT_EQ(minimal, 30u);
    ASSERT_EQ(ccn_census_class_count(c), 44u);
    ccn_network* rep = nullptr;
    int conn = 0, red = 0;
    ASSERT_EQ(ccn_census_class(c, 0, &rep, &conn, &red), CCN_OK);
    EXPECT_EQ(ccn_network_degree(rep), 2u);
    ccn_network_destroy(rep);
    EXPECT_EQ(ccn_census_class(c, 44, &rep, &conn, &red), CCN_ERR_DOMAIN);
    ccn_census_destroy(c);

    opts.budget = 10;
    EXPECT_EQ(ccn_census_run(3, 2, &opts, &c), CCN_ERR_BUDGET_EXCEEDED);
    EXPECT_NE(std::string(ccn_last_error()).find("216"), std::string::npos);
}

TEST(CApi, Verify) {
    char* report = nullptr;
    int pass = 0;
    ASSERT_EQ(ccn_verify(3, 2, nullptr, CCN_REPORT_TEXT, &report, &pass), CCN_OK);
    EXPECT_EQ(pass, 1);
    EXPECT_NE(take(report).find("checks passed"), std::string::npos);
    ASSERT_EQ(ccn_verify(2, 3, nullptr, CCN_REPORT_JSON, &report, &pass), CCN_OK);
    EXPECT_EQ(take(report).rfind("{\"n\":2,\"r\":3,", 0), 0u);
    EXPECT_EQ(ccn_verify(6, 6, nullptr, CCN_REPORT_TEXT, &report, &pass), CCN_ERR_BUDGET_EXCEEDED);
}
