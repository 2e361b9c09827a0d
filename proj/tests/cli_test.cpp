#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

namespace {

using nlohmann::json;

struct Run {
    int code;
    std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
    const std::string cmd = env + " " EXTROPY_CLI " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    std::string out;
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::vector<json> records(const std::string& out) {
    std::vector<json> r;
    std::istringstream in(out);
    for (std::string line; std::getline(in, line);) {
        if (!line.empty()) r.push_back(json::parse(line));
    }
    return r;
}

const std::string kReference = std::string(TSX_DATA_DIR) + "/iris_reference_intervals.json";

TEST(Cli, MeasureExamples) {
    const auto r = run("--format json measure --p 0.3058,0.4148,0.2794 --alpha 0.5 --measure tsallis-extropy,shannon");
    ASSERT_EQ(r.code, 0);
    const auto recs = records(r.out);
    ASSERT_EQ(recs.size(), 2u);
    EXPECT_NEAR(recs[0]["value"].get<double>(), 0.8941, 1e-4);
    EXPECT_NEAR(recs[1]["value"].get<double>(), 1.0835920525968618, 1e-14);

    const auto text = run("measure --p 0.3058,0.4148,0.2794 --alpha 0.5 --measure tsallis-extropy");
    EXPECT_NE(text.out.find("0.8941"), std::string::npos);
}

TEST(Cli, ValidationFailures) {
    EXPECT_EQ(run("measure --p 0.5,0.6").code, 1);
    EXPECT_EQ(run("measure --p 0.5,0.5 --alpha 0").code, 1);
    EXPECT_EQ(run("measure --p 0.5,0.5 --measure bogus").code, 1);
    EXPECT_EQ(run("classify --sample 999").code, 1);
    EXPECT_EQ(run("classify --sample 1,2,3").code, 1);
    EXPECT_EQ(run("verify --n-min 2").code, 1);
}

TEST(Cli, MissingDatasetIsIoFailure) {
    EXPECT_EQ(run("evaluate --dataset /nonexistent/iris.data").code, 3);
}

TEST(Cli, ClassifyWithReferenceModel) {
    const auto r = run("--format json classify --sample 6.1,3.0,4.9,1.8 --alpha 2 --model " + kReference);
    ASSERT_EQ(r.code, 0);
    const auto recs = records(r.out);
    ASSERT_EQ(recs.size(), 1u);
    EXPECT_EQ(recs[0]["decision"], "Vi");
    EXPECT_NEAR(recs[0]["fused"]["Vi"].get<double>(), 0.39560216138902474, 1e-12);
    EXPECT_EQ(recs[0]["weights"].size(), 4u);
}

TEST(Cli, EvaluateSmallTrainingSet) {
    const auto r = run("--format json evaluate --per-class 10 --alpha 0.5");
    ASSERT_EQ(r.code, 0);
    const auto recs = records(r.out);
    ASSERT_EQ(recs.size(), 2u);
    EXPECT_EQ(recs[0]["record"], "report");
    EXPECT_EQ(recs[0]["samples"].size(), 150u);
    EXPECT_EQ(recs[1]["record"], "comparison");
    EXPECT_EQ(recs[1]["rows"].size(), 3u);
}

TEST(Cli, EvaluateAlphaOneMatchesNeighbours) {
    const auto r = run("--format json evaluate --alpha 0.999999,1,1.000001 --model " + kReference);
    ASSERT_EQ(r.code, 0);
    const auto recs = records(r.out);
    ASSERT_EQ(recs.size(), 4u);
    EXPECT_EQ(recs[0]["correct"], recs[1]["correct"]);
    EXPECT_EQ(recs[1]["correct"], recs[2]["correct"]);
}

TEST(Cli, VerifyCurve) {
    const auto r = run("--format json verify --n-max 100 --points 100");
    ASSERT_EQ(r.code, 0);
    std::size_t curve = 0;
    for (const auto& rec : records(r.out)) {
        if (rec["record"] == "confronto") {
            ++curve;
            EXPECT_LT(rec["lower"].get<double>(), rec["middle"].get<double>());
            EXPECT_LT(rec["middle"].get<double>(), rec["upper"].get<double>());
        } else {
            EXPECT_TRUE(rec["passed"].get<bool>()) << rec.dump();
        }
    }
    EXPECT_EQ(curve, 98u);
}

TEST(Cli, VerifyReportsInjectedFault) {
    const auto r = run("--format json verify --n-max 50 --points 100 --no-curve --inject-fault 0.01");
    EXPECT_EQ(r.code, 2);
    bool any_failed = false;
    for (const auto& rec : records(r.out)) any_failed |= !rec["passed"].get<bool>();
    EXPECT_TRUE(any_failed);
}

TEST(Cli, OutputIsDeterministic) {
    const std::string args = "--format json evaluate --policy random --seed 7 --alpha 0.5,2";
    const auto a = run(args);
    const auto b = run(args);
    ASSERT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
    const auto c = run("verify --n-max 60 --points 200 --seed 3");
    EXPECT_EQ(c.out, run("verify --n-max 60 --points 200 --seed 3").out);
}

TEST(Cli, EnvironmentDefaultsYieldToFlags) {
    const auto from_env = records(run("--format json classify --sample 0", "EXTROPY_ALPHA=1.5 EXTROPY_GAMMA=2").out);
    ASSERT_EQ(from_env.size(), 1u);
    EXPECT_EQ(from_env[0]["alpha"].get<double>(), 1.5);
    EXPECT_EQ(from_env[0]["gamma"].get<double>(), 2.0);
    const auto flags =
        records(run("--format json classify --sample 0 --alpha 0.7 --gamma 4", "EXTROPY_ALPHA=1.5 EXTROPY_GAMMA=2").out);
    ASSERT_EQ(flags.size(), 1u);
    EXPECT_EQ(flags[0]["alpha"].get<double>(), 0.7);
    EXPECT_EQ(flags[0]["gamma"].get<double>(), 4.0);
    EXPECT_EQ(run("classify --sample 0", "EXTROPY_GAMMA=abc").code, 1);
}

}  // namespace
