#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "covertex/commands.hpp"

int main(int argc, char** argv) {
    CLI::App app{"exact verifier and certifier for finite vertex coalgebras"};
    app.require_subcommand(1);

    covertex::RunConfig cfg;
    std::string plane = "both";

    auto add_jobs = [&](CLI::App* c) {
        c->add_option("--jobs", cfg.jobs,
                      "worker threads for grid checks (0 = all hardware threads)")
            ->check(CLI::NonNegativeNumber);
    };
    auto add_report = [&](CLI::App* c) {
        c->add_option("--report", cfg.report_path, "write the structured report here");
    };
    auto add_bundle = [&](CLI::App* c) {
        c->add_option("--bundle", cfg.bundle, "axiom bundle to run (default all)")
            ->check(CLI::IsMember({"A", "B", "C", "D", "all"}));
    };

    CLI::App* check = app.add_subcommand("check", "run axiom bundles on a coalgebra file");
    check->add_option("input", cfg.input_path, "coalgebra file")->required();
    add_bundle(check);
    check->add_option("--box", cfg.box,
                      "enlarge the verification cube to cover [-R, R]^3 (never shrinks)")
        ->check(CLI::NonNegativeNumber);
    check->add_option("--seed", cfg.sample_seed, "seed for the window-exterior probe");
    add_jobs(check);
    add_report(check);

    CLI::App* certify =
        app.add_subcommand("certify", "derive a box coverage certificate from seed planes");
    certify->add_option("input", cfg.input_path, "coalgebra file")->required();
    certify->add_option("--box", cfg.box, "target box radius (default 6)")
        ->check(CLI::NonNegativeNumber);
    certify->add_option("--margin", cfg.margin, "work box inflation (default 20)")
        ->check(CLI::NonNegativeNumber);
    certify->add_option("--plane", plane, "seed planes to use (default both)")
        ->check(CLI::IsMember({"both", "r0", "p0"}));
    add_jobs(certify);
    add_report(certify);

    CLI::App* selftest =
        app.add_subcommand("selftest", "verify the formal calculus and binomial kernels");
    selftest->add_option("--order", cfg.order, "series window order (default 12, min 4)");
    add_report(selftest);

    CLI::App* dualize =
        app.add_subcommand("dualize", "emit the dual of the truncated differential algebra");
    dualize->add_option("--m", cfg.m, "truncation dimension (>= 1)")->required();
    dualize->add_option("--out", cfg.out_path, "output file (default stdout)");
    dualize->add_flag("--check", cfg.chain_check, "verify the result before exiting");
    add_bundle(dualize);
    dualize->add_option("--seed", cfg.sample_seed, "seed for the window-exterior probe");
    add_jobs(dualize);
    add_report(dualize);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (app.got_subcommand(check)) {
        cfg.command = covertex::Command::check;
    } else if (app.got_subcommand(certify)) {
        cfg.command = covertex::Command::certify;
        if (cfg.box < 0) cfg.box = 6;
        cfg.seed_r0 = plane != "p0";
        cfg.seed_p0 = plane != "r0";
    } else if (app.got_subcommand(selftest)) {
        cfg.command = covertex::Command::selftest;
    } else {
        cfg.command = covertex::Command::dualize;
    }

    const covertex::RunResult res = covertex::run_command(cfg);
    std::cout << res.out;
    std::cerr << res.err;
    return res.exit_code;
}
