#pragma once

#include "covertex/checks.hpp"
#include "covertex/dstar.hpp"

namespace covertex {

// Full three-variable co-Jacobi identity on generating series: both sides
// are materialized inside a cube window of the given order and compared on
// the jointly trusted region (which the delta factors erode, exactly as the
// calculus prescribes). Vacuous comparisons count as failures.
Check check_cojacobi_series(const VertexCoalgebra& V, long order);

// Window order that leaves a comfortably nonempty trusted region for the
// family's degree spread.
long default_series_order(const VertexCoalgebra& V);

// Four verification routes with deliberately different blind spots:
//   A: axioms at coefficient level + the component grid + the generating
//      series route for co-Jacobi
//   B: the same minus the series route (pure coefficient arithmetic)
//   C: derivation-operator route, with the r = 0 plane of the component
//      identity (the commutator form)
//   D: derivation-operator route, with the p = 0 plane (the associator form)
enum class Bundle { A, B, C, D };

const char* bundle_name(Bundle b);
std::vector<Bundle> all_bundles();

CheckSet run_bundle(const VertexCoalgebra& V, Bundle b, int jobs);

}  // namespace covertex
