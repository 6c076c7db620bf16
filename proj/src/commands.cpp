#include "covertex/commands.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <vector>

#include "json.hpp"

#include "covertex/bundles.hpp"
#include "covertex/io.hpp"
#include "covertex/lattice.hpp"
#include "covertex/models.hpp"
#include "covertex/selftest.hpp"

namespace covertex {

namespace {

using nlohmann::ordered_json;

constexpr int kSchemaVersion = 1;

struct UsageError : std::runtime_error {
    explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

ordered_json check_json(const Check& c) {
    ordered_json j;
    j["id"] = c.id;
    j["verdict"] = verdict_str(c.verdict());
    j["cases"] = c.cases;
    j["failures"] = c.failures;
    ordered_json ws = ordered_json::array();
    for (const auto& w : c.witnesses) {
        ordered_json wj;
        wj["location"] = w.location;
        wj["detail"] = w.detail;
        ws.push_back(std::move(wj));
    }
    j["witnesses"] = std::move(ws);
    return j;
}

ordered_json checkset_json(const CheckSet& cs) {
    ordered_json j;
    j["subject"] = cs.subject;
    j["verdict"] = verdict_str(cs.verdict());
    ordered_json arr = ordered_json::array();
    for (const auto& c : cs.checks) arr.push_back(check_json(c));
    j["checks"] = std::move(arr);
    return j;
}

std::string render(const ordered_json& j) { return j.dump(2) + "\n"; }

std::vector<Bundle> selected_bundles(const std::string& spec) {
    if (spec == "all") return all_bundles();
    if (spec == "A") return {Bundle::A};
    if (spec == "B") return {Bundle::B};
    if (spec == "C") return {Bundle::C};
    if (spec == "D") return {Bundle::D};
    throw UsageError("unknown bundle '" + spec + "' (use A, B, C, D, or all)");
}

void summarize(std::ostringstream& out, const CheckSet& cs) {
    long cases = 0;
    for (const auto& c : cs.checks) cases += c.cases;
    out << cs.subject << ": " << verdict_str(cs.verdict()) << " (" << cs.checks.size()
        << " checks, " << cases << " cases)\n";
    for (const auto& c : cs.checks) {
        if (c.passed()) continue;
        out << "  " << c.id << ": " << c.failures << " of " << c.cases
            << " cases failed";
        if (!c.witnesses.empty()) {
            out << "; first witness " << c.witnesses[0].location;
        }
        out << "\n";
    }
}

// Shared by cmd_check and dualize --check: run the selected bundles plus
// the window-exterior sampling probe, build the report, return the exit.
int run_check_on(const VertexCoalgebra& V, const RunConfig& cfg,
                 std::ostringstream& out, std::string& report_text) {
    const std::vector<Bundle> bundles = selected_bundles(cfg.bundle);
    const ActivityWindow w = effective_window(V);

    ordered_json report;
    report["schema_version"] = kSchemaVersion;
    report["command"] = "check";
    report["subject"] = V.name;
    report["window"] = ordered_json{{"support", {V.support().lo, V.support().hi}},
                                    {"cube", {w.cube_lo, w.cube_hi}}};

    bool all_pass = true;
    ordered_json bundle_arr = ordered_json::array();
    for (Bundle b : bundles) {
        const CheckSet cs = run_bundle(V, b, cfg.jobs);
        all_pass = all_pass && cs.passed();
        ordered_json bj = checkset_json(cs);
        bj["bundle"] = bundle_name(b);
        bundle_arr.push_back(std::move(bj));
        summarize(out, cs);
    }
    report["bundles"] = std::move(bundle_arr);

    // Exterior probe: everything outside the activity cube must contribute
    // nothing, or the cube default would be unsound.
    const long radius = std::max(std::abs(w.cube_lo), std::abs(w.cube_hi)) + 8;
    CheckSet probe;
    probe.subject = V.name + " [window exterior]";
    probe.checks.push_back(check_inactive_samples(V, 1000, cfg.sample_seed, radius));
    all_pass = all_pass && probe.passed();
    ordered_json pj = checkset_json(probe);
    pj["seed"] = cfg.sample_seed;
    pj["radius"] = radius;
    report["exterior"] = std::move(pj);
    summarize(out, probe);

    // Optional enlargement: never shrinks the default cube, only sweeps a
    // larger one with the same exact grid check.
    if (cfg.box >= 0) {
        ActivityWindow big = w;
        big.cube_lo = std::min(big.cube_lo, -cfg.box);
        big.cube_hi = std::max(big.cube_hi, cfg.box);
        CheckSet sweep;
        sweep.subject = V.name + " [enlarged cube]";
        sweep.checks.push_back(check_cb_box(V, big, cfg.jobs));
        all_pass = all_pass && sweep.passed();
        ordered_json sj = checkset_json(sweep);
        sj["cube"] = {big.cube_lo, big.cube_hi};
        report["enlarged"] = std::move(sj);
        summarize(out, sweep);
    }

    report["verdict"] = all_pass ? "pass" : "fail";
    report_text = render(report);
    out << "verdict: " << (all_pass ? "pass" : "fail") << "\n";
    return all_pass ? 0 : 1;
}

int cmd_check(const RunConfig& cfg, std::ostringstream& out, std::string& report_text) {
    const VertexCoalgebra V = load_coalgebra(cfg.input_path);
    return run_check_on(V, cfg, out, report_text);
}

int cmd_certify(const RunConfig& cfg, std::ostringstream& out,
                std::string& report_text) {
    if (cfg.box < 0) throw UsageError("certify needs a box radius >= 0");
    if (cfg.margin < 0) throw UsageError("certify needs a margin >= 0");
    if (!cfg.seed_r0 && !cfg.seed_p0) {
        throw UsageError("certify needs at least one seed plane");
    }
    const VertexCoalgebra V = load_coalgebra(cfg.input_path);

    const Box3 target{-cfg.box, cfg.box};
    LatticeOutcome lattice = propagate(V.name, target, cfg.margin, cfg.seed_r0,
                                       cfg.seed_p0);

    CheckSet checks;
    checks.subject = V.name + " [certify]";
    checks.checks.push_back(check_seed_planes(V, lattice.cert, cfg.jobs));
    const ActivityWindow w = effective_window(V);
    if (cfg.seed_r0) {
        checks.checks.push_back(check_cocommutator_plane(V, w, cfg.jobs));
    }
    if (cfg.seed_p0) {
        checks.checks.push_back(check_coassociator_plane(V, w, cfg.jobs));
    }
    checks.checks.push_back(cross_validate(V, lattice.cert, cfg.jobs));

    std::string replay_why;
    const bool replay_ok = replay_certificate(lattice.cert, &replay_why);
    const bool covered = lattice.complete();
    const bool pass = covered && replay_ok && checks.passed();

    ordered_json report;
    report["schema_version"] = kSchemaVersion;
    report["command"] = "certify";
    report["subject"] = V.name;
    report["target_box"] = {target.lo, target.hi};
    report["margin"] = cfg.margin;
    ordered_json seeds = ordered_json::array();
    if (cfg.seed_r0) seeds.push_back("r=0");
    if (cfg.seed_p0) seeds.push_back("p=0");
    report["seeds"] = std::move(seeds);
    report["checks"] = checkset_json(checks);
    ordered_json replay;
    replay["verdict"] = replay_ok ? "pass" : "fail";
    if (!replay_ok) replay["error"] = replay_why;
    report["replay"] = std::move(replay);
    ordered_json coverage;
    coverage["complete"] = covered;
    coverage["steps"] = lattice.cert.steps.size();
    coverage["observed_reach"] = lattice.cert.observed_reach;
    if (!covered) {
        ordered_json gaps;
        gaps["total"] = lattice.gaps.total;
        ordered_json listed = ordered_json::array();
        for (const Triple& t : lattice.gaps.uncovered) {
            listed.push_back({t.p, t.q, t.r});
        }
        gaps["listed"] = std::move(listed);
        coverage["gaps"] = std::move(gaps);
    }
    report["coverage"] = std::move(coverage);
    if (pass) report["certificate"] = lattice.cert.str();
    report["verdict"] = pass ? "pass" : "fail";
    report_text = render(report);

    summarize(out, checks);
    out << "replay: " << (replay_ok ? "pass" : "fail") << "\n";
    if (!replay_ok) out << "  " << replay_why << "\n";
    out << "coverage: " << (covered ? "complete" : "incomplete") << " ("
        << lattice.cert.steps.size() << " steps, reach "
        << lattice.cert.observed_reach << ")\n";
    if (!covered) out << "  uncovered: " << lattice.gaps.total << " triples\n";
    out << "verdict: " << (pass ? "pass" : "fail") << "\n";
    return pass ? 0 : 1;
}

int cmd_selftest(const RunConfig& cfg, std::ostringstream& out,
                 std::string& report_text) {
    if (cfg.order < 4) {
        throw UsageError(
            "selftest order must be >= 4: the residue and three-term identities "
            "need that much window room to be non-vacuous");
    }
    const CheckSet series = delta_selftest(cfg.order);
    const CheckSet binom = binomial_selftest(20);
    const bool pass = series.passed() && binom.passed();

    ordered_json report;
    report["schema_version"] = kSchemaVersion;
    report["command"] = "selftest";
    report["order"] = cfg.order;
    report["suites"] = ordered_json::array({checkset_json(series), checkset_json(binom)});
    report["verdict"] = pass ? "pass" : "fail";
    report_text = render(report);

    summarize(out, series);
    summarize(out, binom);
    out << "verdict: " << (pass ? "pass" : "fail") << "\n";
    return pass ? 0 : 1;
}

int cmd_dualize(const RunConfig& cfg, std::ostringstream& out,
                std::string& report_text) {
    if (cfg.m < 1) throw UsageError("dualize needs --m >= 1");
    const VertexCoalgebra V = dual_differential(cfg.m);
    if (cfg.out_path.empty()) {
        out << emit_coalgebra(V);
    } else {
        save_coalgebra(V, cfg.out_path);
        out << "wrote " << cfg.out_path << "\n";
    }
    if (!cfg.chain_check) return 0;
    return run_check_on(V, cfg, out, report_text);
}

}  // namespace

RunResult run_command(const RunConfig& cfg) {
    RunResult res;
    std::ostringstream out, err;
    const auto started = std::chrono::steady_clock::now();
    try {
        switch (cfg.command) {
            case Command::check:
                res.exit_code = cmd_check(cfg, out, res.report);
                break;
            case Command::certify:
                res.exit_code = cmd_certify(cfg, out, res.report);
                break;
            case Command::selftest:
                res.exit_code = cmd_selftest(cfg, out, res.report);
                break;
            case Command::dualize:
                res.exit_code = cmd_dualize(cfg, out, res.report);
                break;
        }
        if (!cfg.report_path.empty() && !res.report.empty()) {
            std::ofstream file(cfg.report_path, std::ios::binary | std::ios::trunc);
            if (!file) throw IoError("cannot open '" + cfg.report_path + "' for writing");
            file << res.report;
            file.flush();
            if (!file.good()) throw IoError("failed writing '" + cfg.report_path + "'");
            out << "report: " << cfg.report_path << "\n";
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        res.exit_code = 2;
    } catch (const IoError& e) {
        err << "error: " << e.what() << "\n";
        res.exit_code = 2;
    } catch (const ContractViolation& e) {
        err << "error: " << e.what() << "\n";
        res.exit_code = 2;
    }
    const auto elapsed = std::chrono::duration<double, std::milli>(
        std::chrono::steady_clock::now() - started);
    // Timing is diagnostics only; reports must stay byte-stable across runs.
    err << "elapsed: " << elapsed.count() << " ms\n";
    res.out = out.str();
    res.err = err.str();
    return res;
}

}  // namespace covertex
