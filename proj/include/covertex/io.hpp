#pragma once

#include <stdexcept>
#include <string>

#include "covertex/coalgebra.hpp"

namespace covertex {

// A malformed or invalid coalgebra file: bad syntax, unknown or missing
// fields, wrong types, out-of-range indices, stored zeros, duplicates.
// Distinct from ContractViolation (caller bug) and from a failing check
// (mathematical result).
struct IoError : std::runtime_error {
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

// Strict parse of the coalgebra format: an object with exactly the fields
//   dimension   positive integer
//   counit      array of scalar strings, length = dimension
//   coproducts  array of {n: integer, entries: [[i, j, k, "coeff"], ...]}
// where an entry means the component at degree n sends e_i to
// coeff * e_j (x) e_k (plus the other entries). Every violation throws
// IoError: unknown fields, duplicate degrees, duplicate index triples,
// zero coefficients, empty components, indices outside [0, dimension).
VertexCoalgebra parse_coalgebra(const std::string& text, std::string name);

// Canonical emission: fields in the order above, components sorted by
// degree, entries sorted by index triple, coefficients in lowest terms.
// parse_coalgebra(emit_coalgebra(V)) reproduces V exactly, and emitting
// the parse of any valid file reproduces the canonical bytes of the same
// coalgebra, so emit-parse-emit is a fixed point.
std::string emit_coalgebra(const VertexCoalgebra& V);

// File wrappers. load_coalgebra names the result after the path; a file
// that cannot be read or written throws IoError.
VertexCoalgebra load_coalgebra(const std::string& path);
void save_coalgebra(const VertexCoalgebra& V, const std::string& path);

}  // namespace covertex
