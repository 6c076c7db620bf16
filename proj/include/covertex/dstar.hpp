#pragma once

#include <optional>
#include <vector>

#include "covertex/coalgebra.hpp"
#include "covertex/verdict.hpp"

namespace covertex {

// The covacuum-contracted shift operator D* = (Id (x) c) Delta_{-2} together
// with the two ladders the derivation checks compare:
//   divided[k]   = (Id (x) c) Delta_{-1-k}, read off the family
//   power_div[k] = (D*)^k / k!,             computed from D* alone
// cap is the largest ladder index materialized; it covers both the degree
// range of the family and the dimension bound on nilpotency degree.
struct DStarData {
    Matrix dstar;
    std::vector<Matrix> divided;
    std::vector<Matrix> power_div;
    std::optional<int> nilpotency;
    long cap = 0;
};

DStarData dstar_data(const VertexCoalgebra& V);

// (D* (x) Id) Delta_q == -q Delta_{q-1} over the support and one degree above.
Check check_dstar_left(const VertexCoalgebra& V, const DStarData& d);

// ((D*)^k/k! (x) Id) Delta_n == (-1)^k binom(n,k) Delta_{n-k}, matrix route.
Check check_divided_shift(const VertexCoalgebra& V, const DStarData& d);

// The same ladder through the series calculus: shifting the structure series
// by a fresh variable must equal the exponential action of D* on the first
// slot, coefficient by coefficient.
Check check_shift_series(const VertexCoalgebra& V, const DStarData& d);

// (Id (x) c) Delta_{-1-k} == (D*)^k/k! for k in [0, cap], plus
// (Id (x) c) Delta_n == 0 for stored n >= 0.
Check check_strong_cocreation(const VertexCoalgebra& V, const DStarData& d);

// T Delta_r == sum_i (-1)^{r+1+i} Delta_{r+i} (D*)^i/i!; requires nilpotent
// D* so the ladder terminates, and fails honestly when it is not.
Check check_coskew(const VertexCoalgebra& V, const DStarData& d);

// -q Delta_{q-1} == Delta_q D* - (Id (x) D*) Delta_q.
Check check_dstar_commutator(const VertexCoalgebra& V, const DStarData& d);

// sum_{a+b=k} (-1)^a (Id (x) (D*)^a/a!) Delta_n (D*)^b/b!
//   == (-1)^k binom(n,k) Delta_{n-k}; also needs nilpotent D*.
Check check_dstar_exchange(const VertexCoalgebra& V, const DStarData& d);

// All of the above in a fixed order.
std::vector<Check> check_translation_suite(const VertexCoalgebra& V,
                                           const DStarData& d);

}  // namespace covertex
