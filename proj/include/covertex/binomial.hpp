#pragma once

#include "covertex/rational.hpp"

namespace covertex {

// Generalized binomial coefficient C(n, k) = n(n-1)...(n-k+1) / k! for any
// integer n (either sign) and k >= 0. Always an integer; returned as a
// Rational so it composes directly with scalar arithmetic.
//
// Contract: k >= 0.
//
// Identities relied on elsewhere (and pinned by tests):
//   Pascal      C(n, k) = C(n-1, k) + C(n-1, k-1),     k >= 1
//   absorption  k C(n, k) = n C(n-1, k-1),             k >= 1
//   negation    C(n, k) = (-1)^k C(k-n-1, k)
Rational binom(long n, long k);

}  // namespace covertex
