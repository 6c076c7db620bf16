#pragma once

#include <string>
#include <vector>

namespace covertex {

enum class Verdict { pass, fail };

inline const char* verdict_str(Verdict v) { return v == Verdict::pass ? "pass" : "fail"; }

struct Witness {
    std::string location;  // which instance failed, e.g. "n=-2 basis=1"
    std::string detail;    // small lhs/rhs dump
};

// One named family of instances of a single identity. Failures carry the
// first few witnesses in evaluation order; the count is always complete.
struct Check {
    std::string id;
    long cases = 0;
    long failures = 0;
    std::vector<Witness> witnesses;

    static constexpr std::size_t kMaxWitnesses = 8;

    bool passed() const { return failures == 0; }
    Verdict verdict() const { return passed() ? Verdict::pass : Verdict::fail; }

    void count_case() { ++cases; }
    void fail_case(std::string location, std::string detail) {
        ++failures;
        if (witnesses.size() < kMaxWitnesses) {
            witnesses.push_back({std::move(location), std::move(detail)});
        }
    }

    // Combine chunk results; call in a fixed order to keep output deterministic.
    void merge(const Check& o) {
        cases += o.cases;
        failures += o.failures;
        for (const auto& w : o.witnesses) {
            if (witnesses.size() >= kMaxWitnesses) break;
            witnesses.push_back(w);
        }
    }
};

struct CheckSet {
    std::string subject;
    std::vector<Check> checks;

    bool passed() const {
        for (const auto& c : checks) {
            if (!c.passed()) return false;
        }
        return true;
    }
    Verdict verdict() const { return passed() ? Verdict::pass : Verdict::fail; }

    const Check* find(const std::string& id) const {
        for (const auto& c : checks) {
            if (c.id == id) return &c;
        }
        return nullptr;
    }
};

}  // namespace covertex
