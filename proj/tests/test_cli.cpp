#include "commands.hpp"

#include <gtest/gtest.h>

using fockindex::cli::CommandResult;
using fockindex::cli::run;

namespace {
const std::string data_dir = FOCKINDEX_DATA_DIR;

bool contains(const std::string& s, const std::string& part) { return s.find(part) != std::string::npos; }
}  // namespace

TEST(Cli, GenusPolynomial) {
    const CommandResult r = run({"genus", "todd", "--degree", "2"});
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_EQ(r.out, "(c1^2 + c2)/12\n");
    EXPECT_EQ(run({"genus", "ahat", "-D", "4"}).out, "(7*p1^2 - 4*p2)/5760\n");
}

TEST(Cli, GenusNumberOnManifold) {
    EXPECT_EQ(run({"genus", "ahat", "--manifold", "cp2"}).out, "-1/8\n");
    EXPECT_EQ(run({"genus", "todd", "-m", "cp1xcp2"}).out, "1\n");
}

TEST(Cli, GenusTableAndJson) {
    const CommandResult t = run({"genus", "todd"});
    EXPECT_TRUE(contains(t.out, "c1*c2/24"));
    const auto j = nlohmann::json::parse(run({"genus", "todd", "--degree", "1", "--format", "json"}).out);
    EXPECT_EQ(j["text"], "c1/2");
    EXPECT_EQ(j["polynomial"]["basis"], "chern");
}

TEST(Cli, IndexPairings) {
    const auto j = nlohmann::json::parse(run({"index", "ff", "cp2", "--format", "json"}).out);
    EXPECT_EQ(j["index"], "3");
    EXPECT_EQ(j["mode"], "exact");
    for (const std::string k : {"fb", "bb", "ff", "bf"}) {
        const CommandResult r = run({"index", k, "cp3", "--mode", "nondegenerate", "--format", "json"});
        ASSERT_EQ(r.exit_code, 0) << r.err;
        EXPECT_EQ(nlohmann::json::parse(r.out)["index"], "4") << k;
    }
}

TEST(Cli, IndexRiemannRoch) {
    EXPECT_TRUE(contains(run({"index", "hrr", "cp1", "--bundle", "O(3)"}).out, "index"));
    const auto j = nlohmann::json::parse(run({"index", "hrr", "cp1", "--bundle", "O(-3)", "--format", "json"}).out);
    EXPECT_EQ(j["index"], "-2");
    const auto p = nlohmann::json::parse(run({"index", "hrr", "cp1xcp1", "--bundle", "O(1,2)", "--format", "json"}).out);
    EXPECT_EQ(p["index"], "6");
    const auto s = nlohmann::json::parse(run({"index", "hrr", "cp2", "--bundle", "O+O(1)", "--format", "json"}).out);
    EXPECT_EQ(s["index"], "4");
}

TEST(Cli, BundleParserRejectsGarbage) {
    EXPECT_EQ(run({"index", "hrr", "cp1", "--bundle", "O(1"}).exit_code, 2);
    EXPECT_EQ(run({"index", "hrr", "cp1", "--bundle", "O(1,2)"}).exit_code, 2);
    EXPECT_EQ(run({"index", "hrr", "cp1", "--bundle", "L(2)"}).exit_code, 2);
}

TEST(Cli, VerifySingleAndAll) {
    const CommandResult one = run({"verify", "bb", "--l", "2"});
    EXPECT_EQ(one.exit_code, 0) << one.err;
    EXPECT_TRUE(contains(one.out, "x1*x2"));
    EXPECT_TRUE(one.out.ends_with("PASS\n"));

    const CommandResult all = run({"verify", "--all", "--l", "3", "--degree", "8"});
    EXPECT_EQ(all.exit_code, 0) << all.err;
    EXPECT_TRUE(contains(all.out, "Fermi-Fermi"));
    EXPECT_TRUE(all.out.ends_with("PASS\n"));

    const auto j = nlohmann::json::parse(run({"verify", "fb", "--l", "2", "--mode", "both", "--format", "json"}).out);
    EXPECT_EQ(j["degree"], 8);
    EXPECT_EQ(j["reports"].size(), 2u);
    EXPECT_TRUE(j["pass"].get<bool>());
}

TEST(Cli, VerifyLiteralConvention) {
    const CommandResult r = run({"verify", "bb", "--l", "2", "--convention", "literal"});
    EXPECT_EQ(r.exit_code, 0) << r.err;
    EXPECT_EQ(run({"verify", "bb", "--convention", "sideways"}).exit_code, 2);
}

TEST(Cli, VerifyProperties) {
    const CommandResult r = run({"verify", "--properties", "--seed", "7"});
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_TRUE(contains(r.out, "PASS ring-law spot checks (seed 7)"));
}

TEST(Cli, VerifyDegreeTooLow) {
    // truncation below the degree where the density lives
    EXPECT_EQ(run({"verify", "ff", "--l", "3", "--degree", "1"}).exit_code, 2);
}

TEST(Cli, Stats) {
    const CommandResult r = run({"stats", data_dir + "/fd_single.json"});
    EXPECT_EQ(r.exit_code, 0) << r.err;
    EXPECT_TRUE(contains(r.out, "1.5"));
    const CommandResult c = run({"stats", data_dir + "/be_three.json", "--check-correspondence"});
    EXPECT_EQ(c.exit_code, 0) << c.err;
    EXPECT_TRUE(contains(c.out, "PASS Xi = CH correspondence"));
}

TEST(Cli, StatsDivergentBose) {
    const CommandResult r = run({"stats", data_dir + "/be_divergent.json"});
    EXPECT_EQ(r.exit_code, 2);
    EXPECT_TRUE(contains(r.err, "level 1")) << r.err;
}

TEST(Cli, ZetaDetAndSpectral) {
    const CommandResult z = run({"zeta-det", "--a", "1", "--c", "1"});
    EXPECT_EQ(z.exit_code, 0) << z.err;
    EXPECT_TRUE(contains(z.out, "2.50662827463"));
    const auto j = nlohmann::json::parse(run({"zeta-det", data_dir + "/affine_n.json", "--format", "json"}).out);
    EXPECT_NEAR(j["determinant"].get<double>(), 2.5066282746310002, 1e-12);

    const auto s = nlohmann::json::parse(run({"spectral", data_dir + "/finite_123.json", "--format", "json"}).out);
    EXPECT_NEAR(s["determinant"].get<double>(), 6.0, 1e-14);
    ASSERT_EQ(s["pairings"].size(), 4u);
    EXPECT_NEAR(s["pairings"][2]["exact"].get<double>(), 6.0, 1e-12);
    EXPECT_EQ(run({"spectral", "--eigenvalues", "1,2", "--a", "2"}).exit_code, 2);
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(run({"index", "ff", "k3"}).exit_code, 2);
    EXPECT_EQ(run({"genus", "witten"}).exit_code, 2);
    EXPECT_EQ(run({"frobnicate"}).exit_code, 2);
    EXPECT_EQ(run({}).exit_code, 2);
    EXPECT_EQ(run({"genus", "todd", "--format", "xml"}).exit_code, 2);
    EXPECT_EQ(run({"stats", "/nonexistent/file.json"}).exit_code, 2);
    EXPECT_EQ(run({"--help"}).exit_code, 0);
}

TEST(Cli, ConfigFileAndOverride) {
    const std::string cfg = data_dir + "/config.json";
    const CommandResult r = run({"--config", cfg, "verify", "ff", "--l", "1"});
    ASSERT_EQ(r.exit_code, 0) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["degree"], 6);
    const CommandResult o = run({"--config", cfg, "verify", "ff", "--l", "1", "--degree", "3", "--format", "text"});
    EXPECT_TRUE(contains(o.out, "degree")) << o.out;
    EXPECT_TRUE(o.out.ends_with("PASS\n"));
    EXPECT_TRUE(contains(o.out, " 3\n"));
}

TEST(Cli, Deterministic) {
    const std::vector<std::string> args{"verify", "--properties", "--seed", "123", "--format", "json"};
    EXPECT_EQ(run(args).out, run(args).out);
    EXPECT_EQ(run({"spectral", "--eigenvalues", "0.5,1.5"}).out, run({"spectral", "--eigenvalues", "0.5,1.5"}).out);
}

TEST(Cli, CsvFormat) {
    const CommandResult r = run({"index", "all", "cp2", "--format", "csv"});
    ASSERT_EQ(r.exit_code, 0) << r.err;
    EXPECT_TRUE(r.out.starts_with("pairing,mode,density,index\n"));
}
