#include "plab/cli.hpp"
#include "plab/json_io.hpp"
#include "plab/verify.hpp"

#include <doctest.h>

#include <sstream>

using namespace plab;

namespace {

struct Run {
    int code;
    std::string out, err;
    Json json() const { return Json::parse(out); }
};

Run run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    int code = cmd_dispatch(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("xt-class")
{
    auto r = run({"xt-class", "-n", "3"});
    REQUIRE(r.code == kExitOk);
    auto j = r.json();
    CHECK(j["schema"] == "1");
    CHECK(j["class"] == "minus_theta");
    CHECK(j["point"]["u"] == "0");
    CHECK(run({"xt-class", "-n", "0"}).json()["class"] == "trivial");
    CHECK(run({"xt-class", "-n", "-4"}).json()["class"] == "trivial");
}

TEST_CASE("preimages")
{
    auto r = run({"preimages", "-d", "4", "-c", "-1"});
    REQUIRE(r.code == kExitOk);
    auto j = r.json();
    CHECK(j["union_size"] == "3");
    CHECK(j["predicted_count"] == "3");
    CHECK(j["cycle_detected"] == true);

    auto q = run({"preimages", "-d", "2", "-c", "-1/9", "--max-depth", "1"}).json();
    CHECK(q["truncated"] == true);
    CHECK_FALSE(q.contains("predicted_count"));

    CHECK(run({"preimages", "-d", "1", "-c", "0"}).code == kExitUsage);
    CHECK(run({"preimages", "-d", "3", "-c", "1/0"}).code == kExitUsage);
    CHECK(run({"preimages", "-d", "3"}).code == kExitUsage);
}

TEST_CASE("cd-points")
{
    auto j = run({"cd-points", "-D", "-1"}).json();
    CHECK(j["points"].size() == 6);
    for (const auto& row : j["delta_pairs"]) CHECK(row["candidate"] == true);
    CHECK(run({"cd-points", "-D", "23"}).json()["points"].empty());
    CHECK(run({"cd-points", "-D", "3"}).code == kExitUsage);
}

TEST_CASE("curve-ideal")
{
    auto j = run({"curve-ideal", "-N", "3"}).json();
    CHECK(j["generators"][0] == "Z1^2 + Z1*W - Z2^2");
    CHECK(j["boundary_points"].size() == 4);
    auto f = run({"curve-ideal", "-N", "4", "--factor-mod", "2551"}).json();
    CHECK(f["factor_mod"]["text"] == "(c + 477)^2 (c^4 + 1600*c^3 + 1162*c^2 + 297*c + 1869)");
    CHECK(run({"curve-ideal", "-N", "4", "--factor-mod", "10"}).code == kExitUsage);
    CHECK(run({"curve-ideal", "-N", "1"}).code == kExitUsage);
}

TEST_CASE("dm-search")
{
    auto j = run({"dm-search", "-n", "5", "--bound", "20"}).json();
    CHECK(j["nontrivial"].empty());
    CHECK(run({"dm-search", "-n", "3"}).code == kExitUsage);
}

TEST_CASE("verify-paper")
{
    auto one = run({"verify-paper", "--only", "discriminant", "--no-timing"});
    CHECK(one.code == kExitOk);
    auto j = one.json();
    CHECK(j["checks"].size() == 1);
    CHECK(j["checks"][0]["status"] == "pass");
    CHECK_FALSE(j["checks"][0].contains("elapsed_ms"));

    auto again = run({"verify-paper", "--only", "discriminant", "--no-timing"});
    CHECK(again.out == one.out);

    auto bad = run({"verify-paper", "--only", "torsion", "--inject-failure", "torsion"});
    CHECK(bad.code == kExitFailure);
    CHECK(bad.json()["summary"]["failed"] == "1");

    CHECK(run({"verify-paper", "--only", "nonsense"}).code == kExitUsage);
    CHECK(run({"verify-paper", "--depth", "0"}).code == kExitUsage);
}

TEST_CASE("usage errors and help")
{
    CHECK(run({}).code == kExitUsage);
    CHECK(run({"frobnicate"}).code == kExitUsage);
    CHECK(run({"xt-class", "--bogus"}).code == kExitUsage);
    auto h = run({"--help"});
    CHECK(h.code == kExitOk);
    CHECK(h.out.find("verify-paper") != std::string::npos);
}

TEST_CASE("report covers every check once")
{
    VerifyConfig cfg;
    cfg.height_bound = 100;
    cfg.dm_bound = 30;
    cfg.grid_p = 10;
    cfg.grid_q = 2;
    auto report = run_verification(cfg);
    REQUIRE(report.checks.size() == check_ids().size());
    for (std::size_t i = 0; i < report.checks.size(); ++i) CHECK(report.checks[i].id == check_ids()[i]);
    CHECK(report.all_passed());
}
