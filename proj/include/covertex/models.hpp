#pragma once

#include "covertex/coalgebra.hpp"

namespace covertex {

// One-dimensional coalgebra: counit 1, Delta_{-1} e0 = e0 (x) e0, nothing else.
VertexCoalgebra trivial_coalgebra();

// Graded dual of the truncated polynomial line C[t]/(t^m) carrying the
// derivation D = t^2 d/dt. Basis f_0..f_{m-1} dual to t^0..t^{m-1}, counit
// f |-> f(1), coproducts in closed form:
//   Delta_n f_s = sum_{j+l=s+n+1, 0<=j,l<m} binom(j-n-2, -n-1) f_j (x) f_l
// for n <= -1 and zero otherwise. The l >= 0 constraint silently enforces
// the algebra truncation (derivatives that climb past t^{m-1} die).
VertexCoalgebra dual_differential(long m);

// Oracle route for the same object: extract every coefficient from the
// defining pairing <Delta_n f, a (x) b> = <f, (D^{(-n-1)} a) * b> by iterated
// application of D = t^2 d/dt and truncated polynomial multiplication.
VertexCoalgebra dual_differential_from_pairing(long m);

// Single structure-coefficient perturbation, for fault injection: adds
// `perturbation` to the f_target coefficient of Delta_n(e_basis).
struct MutationSpec {
    long n = -1;
    int basis = 0;
    Idx2 target{0, 0};
    Rational perturbation = Rational(1);
};

VertexCoalgebra mutate(VertexCoalgebra V, const MutationSpec& spec);

}  // namespace covertex
