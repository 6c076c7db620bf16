#pragma once

#include "covertex/series.hpp"
#include "covertex/verdict.hpp"

namespace covertex {

// Self-contained health check of the formal-series layer on a symmetric
// window [-order, order] per variable:
//   delta-coefficients   delta(x,y) stores exactly the defining diagonal
//   shift-symmetry       delta(x-y, z) == delta(z+y, x)
//   three-term           delta(x-y,z) - delta(-y+x,z) == delta(x-z,y)
//   residue-limit        Res_x delta(x,y) X(x,y) == X(y,y) for polynomial X
//   derivative-residue   Res_x d/dx (delta(x,y) X) == 0
//   product-erosion      (x+y) * (x+y)^n == (x+y)^(n+1) on the eroded region,
//                        and the eroded region is exactly the predicted one
//   shift-vs-expansion   taylor_shift(x^n, x, z) == binomial expansion of (x+z)^n
//
// Contract: order >= 4.
CheckSet delta_selftest(long order);

// The three binomial identities the descent and plane arguments lean on
// (Pascal, absorption, negation), verified exactly for all |n| <= bound
// and 0 <= k <= bound.
//
// Contract: bound >= 1.
CheckSet binomial_selftest(long bound);

}  // namespace covertex
