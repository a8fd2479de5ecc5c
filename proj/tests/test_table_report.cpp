#include "ccn/errors.hpp"
#include "ccn/report.hpp"
#include "ccn/table.hpp"

#include <gtest/gtest.h>

#include <sstream>

using namespace ccn;

namespace {

std::string table(Family f, std::uint32_t n, std::uint32_t r, TableFormat fmt = TableFormat::csv) {
    Counter counter;
    return render_table(counter, TableRequest{f, n, r, fmt});
}

}  // namespace

TEST(Table, Csv) {
    EXPECT_EQ(table(Family::H, 1, 1), "n/r,1\n1,1\n");
    EXPECT_EQ(table(Family::K, 2, 3), "n/r,1,2,3\n1,1,1,1\n2,2,5,9\n");
    const auto m = table(Family::M, 6, 6);
    std::istringstream lines(m);
    std::string line;
    std::vector<std::string> all;
    while (std::getline(lines, line)) all.push_back(line);
    ASSERT_EQ(all.size(), 7u);
    EXPECT_EQ(all[0], "n/r,1,2,3,4,5,6");
    EXPECT_EQ(all[1], "1,0,0,0,0,0,0");
    EXPECT_EQ(all[6], "6,51,116918,42605901,5511720691,350077435378,13149391543076");
}

TEST(Table, Markdown) {
    EXPECT_EQ(table(Family::K, 2, 2, TableFormat::markdown),
              "| n/r | 1 | 2 |\n|---:|---:|---:|\n| 1 | 1 | 1 |\n| 2 | 2 | 5 |\n");
}

TEST(Table, Json) {
    EXPECT_EQ(table(Family::H, 2, 2, TableFormat::json),
              R"({"family":"H","max_n":2,"max_r":2,"rows":[{"n":1,"values":["1","1"]},{"n":2,"values":["3","6"]}]})"
              "\n");
}

TEST(Table, FormatParsing) {
    EXPECT_EQ(parse_table_format("csv"), TableFormat::csv);
    EXPECT_EQ(parse_table_format("md"), TableFormat::markdown);
    EXPECT_EQ(parse_table_format("markdown"), TableFormat::markdown);
    EXPECT_EQ(parse_table_format("json"), TableFormat::json);
    EXPECT_THROW(parse_table_format("xml"), DomainError);
}

TEST(Report, TextAndJson) {
    VerificationReport report;
    report.n = 3;
    report.r = 2;
    report.add("H", 44, 44);
    report.add("big", BigInt("100000000000000000000"), BigInt("100000000000000000001"));
    EXPECT_FALSE(report.all_pass());
    EXPECT_EQ(report.to_text(),
              "verification n=3 r=2\n"
              "PASS H expected=44 actual=44\n"
              "FAIL big expected=100000000000000000000 actual=100000000000000000001\n"
              "1 of 2 checks failed\n");
    EXPECT_EQ(report.to_json(),
              R"({"n":3,"r":2,"checks":[{"name":"H","expected":44,"actual":44,"pass":true},)"
              R"({"name":"big","expected":"100000000000000000000","actual":"100000000000000000001","pass":false}]})");

    VerificationReport passing;
    passing.add("x", 1, 1);
    EXPECT_TRUE(passing.all_pass());
    EXPECT_NE(passing.to_text().find("all 1 checks passed"), std::string::npos);
    report.append(passing);
    EXPECT_EQ(report.checks.size(), 3u);
}
