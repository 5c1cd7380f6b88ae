#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "cli.hpp"

using namespace goldnug;

namespace {

struct Invocation {
    int code;
    std::string out, err;
};

Invocation run(std::vector<std::string> args) {
    args.insert(args.begin(), "goldnug");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path) {
    std::ifstream f(path);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

}  // namespace

TEST(Cli, WorkedExamples) {
    EXPECT_EQ(run({"rcf", "19", "--format", "text"}).out, "11/16\n");
    EXPECT_EQ(run({"xi", "0.110011"}).out, "116\n");
    Invocation solve = run({"solve", "3b+20b+18r"});
    EXPECT_EQ(solve.code, 0);
    EXPECT_EQ(solve.out.substr(0, 10), "outcome=L\n");
    Invocation right = run({"solve", "20b+17r", "--mover", "R"});
    EXPECT_EQ(right.out, "outcome=N\nR: 20b -> 0b\n");
}

TEST(Cli, SingleHeapCommands) {
    EXPECT_EQ(run({"value", "5"}).out, "{1,{1|0}|0}\n");
    EXPECT_EQ(run({"rcf", "16"}).out, "{1|1/2}\n");
    EXPECT_EQ(run({"rcf", "16", "--from-oracle"}).out, "{1|1/2}\n");
    EXPECT_EQ(run({"classify", "45"}).out, "G(2) i=2\n");
    EXPECT_EQ(run({"number", "87"}).out, "85/128 0.1010101\n");
    EXPECT_EQ(run({"repr", "117", "--kind", "even"}).out, "2F10+2F4+F2 2000002010\n");
    EXPECT_EQ(run({"repr", "11", "--kind", "lo"}).out, "F6+F3+F1 100101\n");
    EXPECT_EQ(run({"repr", "117"}).out, "F11+F8+F5+F3 1001001010\n");
    // the classifier has no size limit
    EXPECT_EQ(run({"rcf", "100000000000000000000000000000"}).code, 0);
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"frobnicate"}).code, 2);
    EXPECT_EQ(run({"rcf", "19", "--bogus"}).code, 2);
    EXPECT_EQ(run({"table", "--kind", "nope"}).code, 2);
    EXPECT_EQ(run({"rcf", "abc"}).code, 2);
    EXPECT_EQ(run({"number", "8"}).code, 2);
    EXPECT_EQ(run({"solve", "3q"}).code, 2);
    Invocation big = run({"value", "61"});
    EXPECT_EQ(big.code, 3);
    EXPECT_NE(big.err.find("--oracle-bound"), std::string::npos);
    EXPECT_EQ(run({"value", "61", "--oracle-bound", "61"}).code, 0);
    EXPECT_EQ(run({"solve", "26b"}).code, 0);
    EXPECT_EQ(run({"solve", "61b"}).code, 3);
    EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, Verify) {
    Invocation r = run({"verify", "--suite", "rcf", "--bound", "20"});
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_NE(r.out.find("checks passed"), std::string::npos);
    EXPECT_EQ(run({"verify", "--suite", "nope"}).code, 2);
    // a bound below the suite's own minimum still runs
    EXPECT_EQ(run({"verify", "--suite", "positions", "--bound", "10"}).code, 0);
}

TEST(Cli, GoldenRcfTable) {
    Invocation r = run({"table", "--kind", "rcf", "--max", "20"});
    EXPECT_EQ(r.out, slurp(std::string(GOLDEN_DIR) + "/table_rcf_20.txt"));
}

TEST(Cli, Tables) {
    Invocation seq = run({"table", "--kind", "sequences", "--max", "14", "--format", "csv"});
    EXPECT_NE(seq.out.find("n,A,B,AB,B2,W\n0,0,0,0,0,b\n1,1,2,3,5,a\n"), std::string::npos);
    Invocation part = run({"table", "--kind", "partition", "--max", "14"});
    EXPECT_NE(part.out.find("G(3)   32  66  121  155  210  265  299  354  388  443  498  532  587  642  676"), std::string::npos);
    Invocation nums = run({"table", "--kind", "numbers", "--max", "87", "--format", "csv"});
    EXPECT_NE(nums.out.find("53,43/64,0.101011,\"21,34\",\"32,19\",{21/32|11/16}"), std::string::npos);
    Invocation vals = run({"table", "--kind", "values", "--max", "8", "--format", "csv"});
    EXPECT_NE(vals.out.find("4,{1|{1|0}},1,"), std::string::npos);
    EXPECT_EQ(run({"outcomes", "--game", "oddeven", "--max", "3"}).out, "h  outcome\n0  P\n1  L\n2  N\n3  L\n");
    EXPECT_EQ(run({"probe-period", "--game", "oddeven", "--max", "100"}).out, "period=2 preperiod=1\n");
    EXPECT_EQ(run({"probe-period", "--game", "golden", "--max", "5000"}).out, "no period found <= 5000\n");
}

TEST(Cli, JsonRoundTrips) {
    Universe u;
    for (std::size_t h = 0; h <= 20; ++h) {
        json j = json::parse(run({"value", std::to_string(h), "--format", "json"}).out);
        NuggetOracle oracle(u, 20);
        EXPECT_EQ(game_from_json(u, j["value"]), oracle.heap(h)) << h;
        json r = json::parse(run({"rcf", std::to_string(h), "--format", "json"}).out);
        EXPECT_EQ(game_from_json(u, r["rcf"]), heap_rcf<BigInt>(BigInt(h)).to_game(u)) << h;
    }
    json n = json::parse(run({"number", "53", "--format", "json"}).out);
    EXPECT_EQ(dyadic_from_json(n["value"]), Dyadic::parse("43/64"));
    for (const char* kind : {"zeck", "lo", "even"}) {
        json j = json::parse(run({"repr", "117", "--kind", kind, "--format", "json"}).out);
        FibRepr r = repr_from_json(j);
        EXPECT_EQ(r.value<BigInt>(), 117);
    }
    json x = json::parse(run({"xi", "0.110011", "--format", "json"}).out);
    EXPECT_EQ(repr_from_json(x["repr"]).value<BigInt>(), 116);
    json table = json::parse(run({"table", "--kind", "values", "--max", "12", "--format", "json"}).out);
    ASSERT_EQ(table.size(), 12u);
    EXPECT_EQ(game_from_json(u, table[11]["value"]), parse_game(u, "{1||1|0||||1||1|0|||0,{1|0}}"));
    EXPECT_THROW(game_from_json(u, json::parse("{\"L\": 3}")), std::invalid_argument);
}

TEST(Cli, OutFile) {
    std::string path = ::testing::TempDir() + "goldnug_out.csv";
    Invocation r = run({"table", "--kind", "rcf", "--max", "3", "--format", "csv", "--out", path});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "");
    EXPECT_EQ(slurp(path), "h,rcf\n1,1\n2,{1|0}\n3,1/2\n");
    std::remove(path.c_str());
}
