#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
    int code = -1;
    std::string out;
};

Run cli(const std::string& args) {
    const std::string cmd = std::string(ORDLIP_CLI) + " " + args + " 2>/dev/null";
    Run r;
    FILE* pipe = ::popen(cmd.c_str(), "r");
    if (!pipe) return r;
    std::array<char, 4096> buf{};
    std::size_t n = 0;
    while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
    const int status = ::pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string data(const std::string& name) { return std::string(ORDLIP_TEST_DATA) + "/" + name; }

bool has(const Run& r, const std::string& s) { return r.out.find(s) != std::string::npos; }

} // namespace

TEST(Cli, UnknownSubcommandIsUsageError) { EXPECT_EQ(cli("frobnicate").code, 2); }
TEST(Cli, NoSubcommandIsUsageError) { EXPECT_EQ(cli("").code, 2); }

TEST(Cli, Validate) {
    EXPECT_EQ(cli("validate " + data("witness.json")).code, 0);
    const auto bad = cli("validate " + data("asymmetric.json"));
    EXPECT_EQ(bad.code, 1);
    EXPECT_TRUE(has(bad, "symmetry violated at (1, 2)"));
    EXPECT_EQ(cli("validate " + data("syntax.json")).code, 2);
    EXPECT_EQ(cli("validate " + data("missing.json")).code, 2);
}

TEST(Cli, Radial) {
    const auto r = cli("radial " + data("witness.json"));
    EXPECT_EQ(r.code, 1);
    EXPECT_TRUE(has(r, "RD1"));
    EXPECT_TRUE(has(r, "lhs=1.41421356"));
    EXPECT_TRUE(has(r, "rhs=2.23606798"));
    EXPECT_EQ(cli("radial " + data("chain.json")).code, 0);
    EXPECT_EQ(cli("radial " + data("asymmetric.json")).code, 2);
}

TEST(Cli, Busemann) {
    const auto h = cli("busemann --space hilbert --e 0,1 --point 3,4 --format machine");
    EXPECT_EQ(h.code, 0);
    EXPECT_TRUE(has(h, "\"value\": -4")) << h.out;
    EXPECT_EQ(cli("busemann --space hyperbolic --point 0,2.718281828459045").code, 0);
    EXPECT_EQ(cli("busemann --space hyperbolic --point 0,-1").code, 2);
    const auto t = cli("busemann --space rtree --tree " + data("tree.json") + " --vertex b --limit 10,100");
    EXPECT_EQ(t.code, 0);
    EXPECT_TRUE(has(t, "B(a) = -0.5"));
    EXPECT_EQ(cli("busemann --space rtree --tree " + data("cycle_tree.json") + " --vertex a").code, 2);
    EXPECT_EQ(cli("busemann --space nowhere --point 1,2").code, 2);
}

TEST(Cli, Certify) {
    for (const char* target : {"hilbert", "hyperbolic", "rtree"}) {
        const auto r = cli("certify " + data("witness.json") + " --target " + target);
        EXPECT_EQ(r.code, 1) << target;
        EXPECT_TRUE(has(r, "1.58113883")) << r.out;
    }
    EXPECT_EQ(cli("certify " + data("chain.json")).code, 0);
}

TEST(Cli, Extend) {
    EXPECT_EQ(cli("extend " + data("problem_witness.json") + " --mode scalar").code, 1);
    EXPECT_EQ(cli("extend " + data("problem_witness.json") + " --mode feasible --K 1.6").code, 0);
    EXPECT_EQ(cli("extend " + data("problem_witness.json") + " --mode feasible --K 1.0").code, 1);
    EXPECT_EQ(cli("extend " + data("problem_chain.json") + " --mode componentwise").code, 0);
    const auto line = cli("extend " + data("line.json") + " --mode thm2 --query=-1,1,9");
    EXPECT_EQ(line.code, 0);
    EXPECT_TRUE(has(line, "F(1) = (0.5, 0.5, 0)")) << line.out;
    EXPECT_EQ(cli("extend " + data("problem_witness.json") + " --mode bogus").code, 2);
}

TEST(Cli, EstimateAndDeterminism) {
    const std::string args = "estimate-e " + data("problem_witness.json") + " --samples 5 --seed 7 --format machine";
    const auto a = cli(args);
    const auto b = cli(args);
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
    EXPECT_TRUE(has(a, "\"seed\": 7"));
    EXPECT_TRUE(has(a, "1.5811"));
}

TEST(Cli, Generators) {
    const auto g = cli("gen grid --dim 2 --side 2 --format machine");
    EXPECT_EQ(g.code, 0);
    EXPECT_TRUE(has(g, "(1,1)"));
    EXPECT_EQ(cli("gen grid --dim 5 --side 20").code, 2);
    const auto t1 = cli("gen tree --vertices 6 --seed 3 --format machine");
    EXPECT_EQ(t1.code, 0);
    EXPECT_EQ(t1.out, cli("gen tree --vertices 6 --seed 3 --format machine").out);
}
