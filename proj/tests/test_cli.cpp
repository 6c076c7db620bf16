#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

#include "covertex/commands.hpp"
#include "covertex/io.hpp"
#include "covertex/models.hpp"

using namespace covertex;

namespace {

std::string data_path(const char* file) {
    return std::string(COVERTEX_TEST_DATA) + "/" + file;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

nlohmann::json parse_report(const RunResult& res) {
    REQUIRE(!res.report.empty());
    return nlohmann::json::parse(res.report);
}

}  // namespace

TEST_CASE("check passes the golden model and reports every bundle") {
    RunConfig cfg;
    cfg.command = Command::check;
    cfg.input_path = data_path("m3.json");
    const RunResult res = run_command(cfg);
    CHECK(res.exit_code == 0);
    CHECK(res.out.find("verdict: pass") != std::string::npos);
    CHECK(res.err.find("elapsed:") != std::string::npos);

    const auto report = parse_report(res);
    CHECK(report["schema_version"] == 1);
    CHECK(report["command"] == "check");
    CHECK(report["verdict"] == "pass");
    CHECK(report["bundles"].size() == 4);
    CHECK(report["exterior"]["verdict"] == "pass");
    CHECK(report["window"]["support"] == nlohmann::json({-2, -1}));
    CHECK(report["window"]["cube"] == nlohmann::json({-4, 1}));
    // Timing never leaks into the report.
    CHECK(res.report.find("elapsed") == std::string::npos);
    CHECK(res.report.find("ms") == std::string::npos);
}

TEST_CASE("check restricted to one bundle reports only that bundle") {
    RunConfig cfg;
    cfg.command = Command::check;
    cfg.input_path = data_path("m3.json");
    cfg.bundle = "C";
    const RunResult res = run_command(cfg);
    CHECK(res.exit_code == 0);
    const auto report = parse_report(res);
    CHECK(report["bundles"].size() == 1);
    CHECK(report["bundles"][0]["bundle"] == "C");

    cfg.bundle = "E";
    CHECK(run_command(cfg).exit_code == 2);
}

TEST_CASE("check flags the mutant with witnesses and exit 1") {
    RunConfig cfg;
    cfg.command = Command::check;
    cfg.input_path = data_path("mutant.json");
    const RunResult res = run_command(cfg);
    CHECK(res.exit_code == 1);
    const auto report = parse_report(res);
    CHECK(report["verdict"] == "fail");
    bool some_witness = false;
    for (const auto& bundle : report["bundles"]) {
        for (const auto& check : bundle["checks"]) {
            some_witness = some_witness || !check["witnesses"].empty();
        }
    }
    CHECK(some_witness);
}

TEST_CASE("check rejects malformed and missing files with exit 2") {
    RunConfig cfg;
    cfg.command = Command::check;
    cfg.input_path = data_path("malformed.json");
    const RunResult bad = run_command(cfg);
    CHECK(bad.exit_code == 2);
    CHECK(bad.report.empty());
    CHECK(bad.err.find("dimension") != std::string::npos);

    cfg.input_path = data_path("absent.json");
    CHECK(run_command(cfg).exit_code == 2);
}

TEST_CASE("check reports are byte-identical across thread counts") {
    RunConfig cfg;
    cfg.command = Command::check;
    cfg.input_path = data_path("m3.json");
    cfg.box = 7;
    cfg.jobs = 1;
    const RunResult one = run_command(cfg);
    cfg.jobs = 4;
    const RunResult four = run_command(cfg);
    CHECK(one.exit_code == 0);
    CHECK(four.exit_code == 0);
    CHECK(one.report == four.report);
    CHECK(one.out == four.out);

    // The same holds on a failing subject, witnesses included.
    cfg.input_path = data_path("mutant.json");
    cfg.jobs = 1;
    const RunResult mone = run_command(cfg);
    cfg.jobs = 4;
    const RunResult mfour = run_command(cfg);
    CHECK(mone.exit_code == 1);
    CHECK(mone.report == mfour.report);
}

TEST_CASE("certify covers the golden model and embeds the certificate") {
    RunConfig cfg;
    cfg.command = Command::certify;
    cfg.input_path = data_path("m3.json");
    cfg.box = 2;
    cfg.margin = 8;
    const RunResult res = run_command(cfg);
    CHECK(res.exit_code == 0);
    const auto report = parse_report(res);
    CHECK(report["command"] == "certify");
    CHECK(report["verdict"] == "pass");
    CHECK(report["coverage"]["complete"] == true);
    CHECK(report["replay"]["verdict"] == "pass");
    const std::string cert = report["certificate"].get<std::string>();
    CHECK(cert.rfind("certificate v1\n", 0) == 0);
    CHECK(cert.find("target-box: [-2,2]^3") != std::string::npos);

    // Byte determinism across thread counts, certificate included.
    cfg.jobs = 1;
    const RunResult one = run_command(cfg);
    cfg.jobs = 4;
    const RunResult four = run_command(cfg);
    CHECK(one.report == four.report);
}

TEST_CASE("certify with a single seed plane reports the gap and fails") {
    RunConfig cfg;
    cfg.command = Command::certify;
    cfg.input_path = data_path("m3.json");
    cfg.box = 2;
    cfg.margin = 8;
    cfg.seed_p0 = false;
    const RunResult res = run_command(cfg);
    CHECK(res.exit_code == 1);
    const auto report = parse_report(res);
    CHECK(report["verdict"] == "fail");
    CHECK(report["coverage"]["complete"] == false);
    CHECK(report["coverage"]["gaps"]["total"] == 50);
    CHECK(!report.contains("certificate"));
    CHECK(report["seeds"] == nlohmann::json({"r=0"}));

    cfg.seed_r0 = false;
    CHECK(run_command(cfg).exit_code == 2);
}

TEST_CASE("certify of a radius zero box is trivially covered by the seeds") {
    RunConfig cfg;
    cfg.command = Command::certify;
    cfg.input_path = data_path("m3.json");
    cfg.box = 0;
    cfg.margin = 0;
    const RunResult res = run_command(cfg);
    CHECK(res.exit_code == 0);
    const auto report = parse_report(res);
    CHECK(report["coverage"]["complete"] == true);
    CHECK(report["coverage"]["steps"] == 0);
}

TEST_CASE("certify catches the mutant at its seed planes") {
    RunConfig cfg;
    cfg.command = Command::certify;
    cfg.input_path = data_path("mutant.json");
    cfg.box = 2;
    cfg.margin = 4;
    const RunResult res = run_command(cfg);
    CHECK(res.exit_code == 1);
    const auto report = parse_report(res);
    CHECK(report["verdict"] == "fail");
    CHECK(report["checks"]["verdict"] == "fail");
}

TEST_CASE("selftest passes at the default and rejects tiny orders") {
    RunConfig cfg;
    cfg.command = Command::selftest;
    const RunResult res = run_command(cfg);
    CHECK(res.exit_code == 0);
    const auto report = parse_report(res);
    CHECK(report["order"] == 12);
    CHECK(report["suites"].size() == 2);
    CHECK(report["verdict"] == "pass");

    cfg.order = 6;
    CHECK(run_command(cfg).exit_code == 0);
    cfg.order = 4;
    CHECK(run_command(cfg).exit_code == 0);

    cfg.order = 1;
    const RunResult tiny = run_command(cfg);
    CHECK(tiny.exit_code == 2);
    CHECK(tiny.err.find("order") != std::string::npos);
}

TEST_CASE("dualize writes the golden bytes and chains the check") {
    RunConfig cfg;
    cfg.command = Command::dualize;
    cfg.m = 3;
    const RunResult to_stdout = run_command(cfg);
    CHECK(to_stdout.exit_code == 0);
    CHECK(to_stdout.out == slurp(data_path("m3.json")));

    cfg.out_path = "cli_dualize_tmp.json";
    cfg.chain_check = true;
    const RunResult chained = run_command(cfg);
    CHECK(chained.exit_code == 0);
    CHECK(slurp(cfg.out_path) == slurp(data_path("m3.json")));
    const auto report = parse_report(chained);
    CHECK(report["command"] == "check");
    CHECK(report["subject"] == "dual-differential(m=3)");
    CHECK(std::remove(cfg.out_path.c_str()) == 0);

    cfg.m = 1;
    cfg.out_path = "cli_dualize_tmp1.json";
    cfg.chain_check = false;
    CHECK(run_command(cfg).exit_code == 0);
    CHECK(slurp(cfg.out_path) == slurp(data_path("trivial.json")));
    CHECK(std::remove(cfg.out_path.c_str()) == 0);

    cfg.m = 0;
    CHECK(run_command(cfg).exit_code == 2);
}

TEST_CASE("report files carry exactly the report bytes") {
    RunConfig cfg;
    cfg.command = Command::check;
    cfg.input_path = data_path("m3.json");
    cfg.report_path = "cli_report_tmp.json";
    const RunResult res = run_command(cfg);
    CHECK(res.exit_code == 0);
    CHECK(slurp(cfg.report_path) == res.report);
    CHECK(res.out.find("report: cli_report_tmp.json") != std::string::npos);
    CHECK(std::remove(cfg.report_path.c_str()) == 0);
}
