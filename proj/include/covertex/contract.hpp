#pragma once

#include <stdexcept>
#include <string>

namespace covertex {

// Thrown when a caller violates a documented precondition. Distinct from a
// mathematical check failing, which is reported as data, never thrown.
struct ContractViolation : std::logic_error {
    explicit ContractViolation(const std::string& what) : std::logic_error(what) {}
};

[[noreturn]] inline void contract_fail(const std::string& what) {
    throw ContractViolation(what);
}

inline void require(bool ok, const char* what) {
    if (!ok) contract_fail(what);
}

}  // namespace covertex
