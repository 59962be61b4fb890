#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct CommandResult {
    int exit_code = -1;
    std::string output;
};

CommandResult run_raw(const std::string& cmd)
{
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return {};
    CommandResult result;
    std::array<char, 4096> buffer{};
    size_t got = 0;
    while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
        result.output.append(buffer.data(), got);
    }
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

CommandResult run(const std::string& args, bool merge_stderr = false)
{
    return run_raw(std::string(DICKSON_CLI_PATH) + " " + args +
                   (merge_stderr ? " 2>&1" : " 2>/dev/null"));
}

size_t count_lines(const std::string& s)
{
    size_t lines = 0;
    for (char c : s) {
        if (c == '\n') ++lines;
    }
    return lines;
}

TEST(CliTest, EvalAllMethodsAgree)
{
    const auto r = run("eval --field 7 --n 5 --x 2 --method all");
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_NE(r.output.find("\"agree\":true"), std::string::npos);
    EXPECT_NE(r.output.find("\"recurrence\":[6]"), std::string::npos);
}

TEST(CliTest, EvalKnownValues)
{
    const auto at_zero = run("eval --field 7 --n 9 --x 0 --method recurrence");
    EXPECT_EQ(at_zero.exit_code, 0);
    EXPECT_NE(at_zero.output.find("\"value\":[1]"), std::string::npos);

    const auto at_ext = run("eval --field 3^2 --n 0 --x 1 --method recurrence");
    EXPECT_EQ(at_ext.exit_code, 0);
    EXPECT_NE(at_ext.output.find("\"value\":[0,0]"), std::string::npos);
}

TEST(CliTest, EvalAcceptsCoefficientLists)
{
    const auto r = run("eval --field 3^2 --n 5 --x 1,2 --method all");
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_NE(r.output.find("\"agree\":true"), std::string::npos);
    EXPECT_NE(r.output.find("\"x\":[1,2]"), std::string::npos);
}

TEST(CliTest, CoeffsExamples)
{
    const auto n4 = run("coeffs --field 7 --n 4 --kind 2");
    EXPECT_EQ(n4.exit_code, 0);
    EXPECT_NE(n4.output.find("\"coeffs\":[1,5]"), std::string::npos);

    const auto n0 = run("coeffs --field 7 --n 0 --kind 2");
    EXPECT_EQ(n0.exit_code, 0);
    EXPECT_NE(n0.output.find("\"coeffs\":[]"), std::string::npos);

    const auto first_kind = run("coeffs --field 5 --n 2 --kind 0");
    EXPECT_EQ(first_kind.exit_code, 0);
    EXPECT_NE(first_kind.output.find("\"coeffs\":[1,3]"), std::string::npos);
}

TEST(CliTest, ScanProducesConsistentRecords)
{
    const auto r = run("scan --field 3 --n-max 8");
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_EQ(count_lines(r.output), 9u);
    EXPECT_NE(r.output.find("\"consistent\":true"), std::string::npos);
    EXPECT_EQ(r.output.find("\"consistent\":false"), std::string::npos);
}

TEST(CliTest, ScanDeterministicAcrossRuns)
{
    const auto a = run("scan --field 3^2 --n-max 30");
    const auto b = run("scan --field 3^2 --n-max 30");
    EXPECT_EQ(a.exit_code, 0);
    EXPECT_EQ(a.output, b.output);
}

TEST(CliTest, ScanDeterministicAcrossWorkerCounts)
{
    const std::string tail = " scan --field 5 --n-max 24 2>/dev/null";
    const auto serial =
        run_raw("env DICKSON_THREADS=1 " + std::string(DICKSON_CLI_PATH) + tail);
    const auto parallel =
        run_raw("env DICKSON_THREADS=4 " + std::string(DICKSON_CLI_PATH) + tail);
    EXPECT_EQ(serial.exit_code, 0);
    EXPECT_EQ(serial.output, parallel.output);
    EXPECT_FALSE(serial.output.empty());
}

TEST(CliTest, ScanCsvHeaderMatchesJsonKeys)
{
    const auto csv = run("scan --field 3 --n-max 2 --format csv");
    EXPECT_EQ(csv.exit_code, 0);
    std::stringstream ss(csv.output);
    std::string header;
    std::getline(ss, header);
    const auto json = run("scan --field 3 --n-max 2");
    std::stringstream hs(header);
    std::string column;
    size_t columns = 0;
    while (std::getline(hs, column, ',')) {
        ++columns;
        EXPECT_NE(json.output.find("\"" + column + "\""), std::string::npos)
            << "column " << column << " missing from JSON records";
    }
    EXPECT_EQ(columns, 14u);
}

TEST(CliTest, CharacteristicTwoRejected)
{
    const auto r = run("scan --field 2 --n-max 3", /*merge_stderr=*/true);
    EXPECT_EQ(r.exit_code, 1);
    EXPECT_NE(r.output.find("characteristic 2 collapses to first kind"),
              std::string::npos);
    EXPECT_EQ(run("eval --field 4 --x 1 --n 2").exit_code, 1);
    EXPECT_EQ(run("verify --fields 2^4 --level quick").exit_code, 1);
}

TEST(CliTest, UsageErrorsExitOne)
{
    EXPECT_EQ(run("eval --field 6 --n 1 --x 0").exit_code, 1);
    EXPECT_EQ(run("eval --field 7 --n 1 --x 0 --method nosuch").exit_code, 1);
    EXPECT_EQ(run("nosuchcommand").exit_code, 1);
    EXPECT_EQ(run("sum --field 3 --n 0").exit_code, 1);   // below range
    EXPECT_EQ(run("sum --field 3 --n 9").exit_code, 1);   // above q^2-1
    EXPECT_EQ(run("coeffs --field 7 --n 2 --kind 3").exit_code, 1);
}

TEST(CliTest, SumSingleAndFullTable)
{
    const auto single = run("sum --field 3 --n 5");
    EXPECT_EQ(single.exit_code, 0);
    EXPECT_NE(single.output.find("\"brute\":[2]"), std::string::npos);
    EXPECT_NE(single.output.find("\"recursive\":[2]"), std::string::npos);
    EXPECT_NE(single.output.find("\"equal\":true"), std::string::npos);

    const auto table = run("sum --field 5");
    EXPECT_EQ(table.exit_code, 0);
    EXPECT_EQ(count_lines(table.output), 24u);  // q^2 - 1 rows
    EXPECT_EQ(table.output.find("\"equal\":false"), std::string::npos);
}

TEST(CliTest, SumDeterministicAcrossRuns)
{
    const auto a = run("sum --field 5 --format csv");
    const auto b = run("sum --field 5 --format csv");
    EXPECT_EQ(a.exit_code, 0);
    EXPECT_EQ(a.output, b.output);
}

TEST(CliTest, VerifyQuickPasses)
{
    const auto r = run("verify --level quick");
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_NE(r.output.find("PASS three_oracle_agreement q=3"),
              std::string::npos);
    EXPECT_EQ(r.output.find("FAIL"), std::string::npos);
}

TEST(CliTest, VerifyFieldOverrideIncludesExtensionField)
{
    const auto r = run("verify --fields 3,9 --level quick");
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_NE(r.output.find("PASS three_oracle_agreement q=3^2"),
              std::string::npos);
}

TEST(CliTest, ScanWritesToFile)
{
    const std::string path = "/tmp/dickson_cli_test_scan.jsonl";
    const auto r = run("scan --field 3 --n-max 4 --out " + path);
    EXPECT_EQ(r.exit_code, 0);
    std::ifstream in(path);
    ASSERT_TRUE(in.good());
    std::string content((std::istreambuf_iterator<char>(in)),
                        std::istreambuf_iterator<char>());
    EXPECT_EQ(count_lines(content), 5u);
    std::remove(path.c_str());
}

}  // namespace
