// Copyright 2026 The stoqkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "stoqkit/cli.hpp"

namespace stoq {
namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string data(const std::string &name) {
    const char *dir = std::getenv("STOQKIT_DATA");
    return std::string(dir ? dir : "data") + "/" + name;
}

nlohmann::json report(std::vector<std::string> args) {
    args.insert(args.begin(), "--json");
    Run r = run(args);
    nlohmann::json j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["exit_code"].get<int>(), r.code);
    return j;
}

std::string temp_file(const std::string &name, const std::string &contents) {
    auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream(path) << contents;
    return path.string();
}

TEST(Cli, Sha256KnownVectors) {
    EXPECT_EQ(sha256_hex(""), "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
    EXPECT_EQ(sha256_hex("abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST(Cli, CheckGlobalVerdicts) {
    nlohmann::json yes = report({"check", "global", data("tfim4.hsum")});
    EXPECT_EQ(yes["verdict"], "yes");
    EXPECT_EQ(yes["exit_code"], kExitYes);
    EXPECT_EQ(yes["command"], "check global");
    ASSERT_EQ(yes["inputs"].size(), 1u);
    EXPECT_EQ(yes["inputs"][0]["sha256"].get<std::string>().size(), 64u);

    nlohmann::json no = report({"check", "global", data("frustrated_pair.hsum")});
    EXPECT_EQ(no["verdict"], "no");
    EXPECT_EQ(no["exit_code"], kExitNo);
}

TEST(Cli, TermwiseThresholdOnTriangleInstance) {
    EXPECT_EQ(run({"check", "termwise", data("prop1_triangle.hsum"), "--m", "3"}).code, kExitNo);
    EXPECT_EQ(run({"check", "termwise", data("prop1_triangle.hsum"), "--m", "4"}).code, kExitYes);
}

TEST(Cli, UndecidedWithSmallBudget) {
    std::string f = temp_file("stoqkit_cli_budget.hsum", "qubits 4\n-1 X0 Z1 Z2 Z3\n");
    EXPECT_EQ(run({"check", "global", f, "--budget", "2"}).code, kExitUndecided);
}

TEST(Cli, DecomposeAndCure) {
    nlohmann::json d = report({"decompose", data("tfim4.hsum")});
    EXPECT_EQ(d["exit_code"], kExitYes);
    EXPECT_EQ(run({"decompose", data("frustrated_pair.hsum")}).code, kExitNo);

    EXPECT_EQ(run({"cure", "xyz", data("h123.chain"), "--method", "clifford"}).code, kExitYes);
    EXPECT_EQ(run({"cure", "xyz", data("h123.chain"), "--method", "single-qubit"}).code, kExitNo);
    EXPECT_EQ(run({"cure", "xyz", data("ineligible4.chain"), "--method", "clifford"}).code, kExitUndecided);
    EXPECT_EQ(run({"cure", "hadamard", data("frustrated_pair.hsum")}).code, kExitNo);
}

TEST(Cli, GeneratorsProduceParsableInstances) {
    std::string out = (std::filesystem::temp_directory_path() / "stoqkit_cli_gen.hsum").string();
    EXPECT_EQ(run({"gen", "prop1", data("triangle.graph"), "--out", out}).code, kExitYes);
    EXPECT_EQ(run({"check", "termwise", out, "--m", "4"}).code, kExitYes);
    EXPECT_EQ(run({"gen", "conp", data("triangle.graph"), "--k", "-1", "--out", out}).code, kExitYes);
    EXPECT_EQ(run({"check", "global", out}).code, kExitNo);
    EXPECT_EQ(run({"gen", "sigma2", data("sigma2.cnf"), "--k", "1", "--out", out}).code, kExitYes);
    EXPECT_EQ(run({"gen", "minmax", data("forall_exists.cnf"), "--out", out}).code, kExitYes);
}

TEST(Cli, QmcReportsEnergy) {
    nlohmann::json q = report({"qmc", data("tfim4.hsum"), "--beta", "1", "--slices", "16", "--sweeps", "2000",
                               "--burn-in", "200", "--seed", "5"});
    EXPECT_EQ(q["exit_code"], kExitYes);
    ASSERT_TRUE(q["result"].contains("energy"));
    nlohmann::json again = report({"qmc", data("tfim4.hsum"), "--beta", "1", "--slices", "16", "--sweeps",
                                   "2000", "--burn-in", "200", "--seed", "5"});
    EXPECT_EQ(q["result"], again["result"]);
}

TEST(Cli, VerifySuite) {
    nlohmann::json v = report({"verify", "reductions-conp"});
    EXPECT_EQ(v["exit_code"], kExitYes);
    EXPECT_EQ(run({"verify", "no-such-suite"}).code, kExitUsage);
}

TEST(Cli, ErrorCodes) {
    EXPECT_EQ(run({}).code, kExitUsage);
    EXPECT_EQ(run({"check", "termwise", data("tfim4.hsum")}).code, kExitUsage);
    EXPECT_EQ(run({"check", "global", "/nonexistent/file.hsum"}).code, kExitIo);
    std::string bad = temp_file("stoqkit_cli_bad.hsum", "qubits 2\n1 X5\n");
    EXPECT_EQ(run({"check", "global", bad}).code, kExitParse);
    std::string complex = temp_file("stoqkit_cli_complex.hsum", "qubits 2\n1 X0 Y1\n");
    EXPECT_EQ(run({"check", "global", complex}).code, kExitParse);
}

}  // namespace
}  // namespace stoq
