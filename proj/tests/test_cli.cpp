#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "vnclass/cli.hpp"
#include "vnclass/known_values.hpp"

using namespace vnclass;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args)
{
    args.insert(args.begin(), "vnclass");
    std::vector<const char*> argv;
    for (const auto& a : args)
        argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text)
{
    std::vector<std::string> out;
    std::istringstream is(text);
    for (std::string line; std::getline(is, line);)
        out.push_back(line);
    return out;
}

std::filesystem::path temp_file(const std::string& name)
{
    return std::filesystem::temp_directory_path() / ("vnclass_test_" + name);
}

} // namespace

TEST(CliCompute, Decimal)
{
    auto r = run({"compute", "--n", "2"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "7\n");
}

TEST(CliCompute, JsonRoundTripsValue)
{
    auto r = run({"compute", "--n", "4", "--format", "json"});
    ASSERT_EQ(r.code, 0);
    auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["n"], 4);
    EXPECT_EQ(j["mode"], "exact");
    EXPECT_EQ(j["value"], "36325278240");
    EXPECT_EQ(j["num_partitions"], 5);
    EXPECT_LE(j["t_cycle_index_s"].get<double>(), j["t_total_s"].get<double>());

    auto big = run({"compute", "--n", "9", "--format", "json"});
    ASSERT_EQ(big.code, 0);
    auto value = nlohmann::json::parse(big.out)["value"].get<std::string>();
    EXPECT_EQ(value, kKnownValues[8]);
    EXPECT_EQ(mpz_class(value).get_str(), value);
}

TEST(CliCompute, Modes)
{
    EXPECT_EQ(run({"compute", "--n", "3", "--mode", "mod:97"}).out, "8\n");
    auto lg = run({"compute", "--n", "4", "--mode", "log10"});
    EXPECT_EQ(lg.code, 0);
    EXPECT_NEAR(std::stod(lg.out), 10.5602, 1e-4);
    auto j = nlohmann::json::parse(run({"compute", "--n", "30", "--mode", "log10", "--format", "json"}).out);
    EXPECT_EQ(j["mode"], "log10");
    EXPECT_EQ(j["num_partitions"], 5604);
    EXPECT_GT(std::stod(j["value"].get<std::string>()), 9e9);
}

TEST(CliCompute, RepeatedRunsIdentical)
{
    EXPECT_EQ(run({"compute", "--n", "7"}).out, run({"compute", "--n", "7", "--threads", "3"}).out);
}

TEST(CliCompute, InvalidArgumentsExitTwo)
{
    for (auto args : std::vector<std::vector<std::string>>{
             {"compute", "--n", "0"},
             {"compute", "--n", "35"},
             {"compute", "--n", "3", "--mode", "fast"},
             {"compute", "--n", "3", "--mode", "mod:91"},
             {"compute", "--n", "3", "--mode", "mod:3"},
             {"compute", "--n", "3", "--mode", "mod:"},
             {"compute", "--n", "3", "--format", "xml"},
             {"compute"},
             {}}) {
        auto r = run(args);
        EXPECT_EQ(r.code, 2) << r.err;
        EXPECT_TRUE(r.out.empty()) << r.out;
    }
}

TEST(CliCompute, ResourceErrorExitThree)
{
    auto r = run({"compute", "--n", "30"});
    EXPECT_EQ(r.code, 3);
    EXPECT_TRUE(r.out.empty());
    EXPECT_NE(r.err.find("budget"), std::string::npos);

    EXPECT_EQ(run({"compute", "--n", "12", "--memory-budget", "0"}).code, 3);
}

TEST(CliCompute, HelpIsSuccess)
{
    EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(CliTable, Rows)
{
    EXPECT_EQ(run({"table", "--max", "3"}).out, "1 2\n2 7\n3 1172\n");
    EXPECT_EQ(run({"table", "--max", "1"}).out, "1 2\n");
    auto six = lines(run({"table", "--max", "6"}).out);
    ASSERT_EQ(six.size(), 6u);
    EXPECT_EQ(six[5], "6 " + std::string(kKnownValues[5]));
    EXPECT_EQ(run({"table", "--max", "0"}).code, 2);
}

TEST(CliTable, Json)
{
    auto j = nlohmann::json::parse(run({"table", "--max", "3", "--format", "json"}).out);
    ASSERT_EQ(j.size(), 3u);
    EXPECT_EQ(j[2]["n"], 3);
    EXPECT_EQ(j[2]["value"], "1172");
}

TEST(CliVerify, QuickPasses)
{
    auto r = run({"verify"});
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_NE(r.out.find("[PASS] A000653 n<=6"), std::string::npos);
    EXPECT_NE(r.out.find("all suites passed"), std::string::npos);
}

TEST(CliVerify, FullReportsOrbitCheck)
{
    auto r = run({"verify", "--level", "full"});
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_NE(r.out.find("orbit n=3: 1172 == 1172"), std::string::npos) << r.out;
}

TEST(CliVerify, CorruptedESequenceFails)
{
    auto good = e_sequence(kMaxESequence);
    std::vector<std::uint64_t> v(good.values().begin(), good.values().end());
    v[4] = 7; // e(5) should be 6
    std::ostringstream out, err;
    int code = cli::cmd_verify(VerifyLevel::quick, out, err, ESequence(v));
    EXPECT_EQ(code, 1);
    EXPECT_NE(out.str().find("[FAIL] e-sequence divisor sum"), std::string::npos) << out.str();
    EXPECT_NE(out.str().find("verification FAILED"), std::string::npos);
}

TEST(CliVerify, BadLevel)
{
    EXPECT_EQ(run({"verify", "--level", "slow"}).code, 2);
}

TEST(CliBench, WritesCsv)
{
    auto path = temp_file("bench.csv");
    auto r = run({"bench", "--max", "9", "--csv", path.string()});
    ASSERT_EQ(r.code, 0) << r.err;
    std::ifstream in(path, std::ios::binary);
    std::string text((std::istreambuf_iterator<char>(in)), {});
    EXPECT_EQ(text.find('\r'), std::string::npos);
    auto rows = lines(text);
    ASSERT_EQ(rows.size(), 10u);
    EXPECT_EQ(rows[0], "n,t_total_s,t_cycle_index_s");
    for (unsigned n = 1; n <= 9; ++n) {
        std::istringstream is(rows[n]);
        std::string a, b, c;
        std::getline(is, a, ',');
        std::getline(is, b, ',');
        std::getline(is, c, ',');
        EXPECT_EQ(std::stoul(a), n);
        EXPECT_LE(std::stod(c), std::stod(b));
    }
    std::filesystem::remove(path);
}

TEST(CliBench, Errors)
{
    EXPECT_EQ(run({"bench", "--max", "0", "--csv", temp_file("zero.csv").string()}).code, 2);
    EXPECT_EQ(run({"bench", "--max", "2", "--csv", "/nonexistent-dir/x/out.csv"}).code, 4);
}
