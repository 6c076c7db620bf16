#pragma once

#include <string>

namespace covertex {

enum class Command { check, certify, selftest, dualize };

// One parsed invocation. Defaults here are the tool's defaults; the
// front end only fills in what the user typed.
struct RunConfig {
    Command command = Command::check;
    std::string input_path;        // check/certify: coalgebra file to load
    std::string report_path;       // write the structured report here; empty = skip
    std::string out_path;          // dualize: output file; empty = stdout
    std::string bundle = "all";  // check/dualize --check: A|B|C|D|all
    long box = -1;                 // check: enlarge cube to [-R,R]^3; certify: target radius
    long margin = 20;              // certify: work box inflation per side
    long order = 12;               // selftest: series window order
    long m = 0;                    // dualize: truncation dimension
    long sample_seed = 20260819;   // window-exterior sampling seed (check)
    int jobs = 0;                  // grid parallelism; 0 = all hardware threads
    bool chain_check = false;      // dualize: verify the result in memory
    bool seed_r0 = true;           // certify: seed the r = 0 plane
    bool seed_p0 = true;           // certify: seed the p = 0 plane
};

struct RunResult {
    int exit_code = 0;   // 0 success, 1 mathematical failure, 2 input/usage error
    std::string out;     // human-readable summary for stdout
    std::string err;     // diagnostics for stderr (includes timing; never in report)
    std::string report;  // structured report bytes; empty when the verb makes none
};

// Executes one command in-process and never throws. The report bytes are
// deterministic for a fixed config: jobs, wall time, and environment leave
// no trace in them.
RunResult run_command(const RunConfig& cfg);

}  // namespace covertex
