#pragma once

#include <array>
#include <vector>

#include "covertex/coalgebra.hpp"
#include "covertex/verdict.hpp"

namespace covertex {

// A linear map V -> V (x) V (x) V, stored densely by basis column.
struct TriMap {
    std::vector<Tensor3> cols;

    TriMap() = default;
    explicit TriMap(int dim) : cols(static_cast<std::size_t>(dim), Tensor3(dim)) {}

    int dim() const { return static_cast<int>(cols.size()); }
    bool zero() const {
        for (const auto& c : cols)
            if (!c.zero()) return false;
        return true;
    }

    TriMap& operator+=(const TriMap& o) {
        require(cols.size() == o.cols.size(), "TriMap dim mismatch");
        for (std::size_t s = 0; s < cols.size(); ++s) cols[s] += o.cols[s];
        return *this;
    }
    TriMap& operator-=(const TriMap& o) {
        require(cols.size() == o.cols.size(), "TriMap dim mismatch");
        for (std::size_t s = 0; s < cols.size(); ++s) cols[s] -= o.cols[s];
        return *this;
    }
    friend TriMap operator-(TriMap a, const TriMap& b) { return a -= b; }
    friend bool operator==(const TriMap&, const TriMap&) = default;
};

// The three iterate-composition sums whose identity is the component form
// of the co-Jacobi axiom:
//   term 1:  sum_i binom(p,i)        (Delta_{r+i} (x) Id) Delta_{p+q-i}
//   term 2:  sum_i (-1)^i binom(r,i) (Id (x) Delta_{q+i}) Delta_{p+r-i}
//   term 3:  sum_i (-1)^{i+r} binom(r,i) (T (x) Id)(Id (x) Delta_{p+i}) Delta_{q+r-i}
// Each sum is finite because both component indices must land in the
// family's degree support. The axiom states term1 == term2 - term3.
TriMap cb_term(const VertexCoalgebra& V, int j, long p, long q, long r);

// Verifies term1 == term2 - term3 at one (p, q, r); one case, witnesses
// name the first failing basis columns.
Check check_cb(const VertexCoalgebra& V, long p, long q, long r);

// Where the three sums can have any candidate summand at all. Each
// predicate is exact: it holds iff the i-range of the corresponding sum is
// nonempty, so outside it that term vanishes identically. The cube bounds
// give a box whose CB identity, together with the two seed planes checked
// over their own finite active windows, determines the identity on all of
// Z^3 via the shift recurrence.
struct ActivityWindow {
    DegreeSupport support;
    long cube_lo = 0;
    long cube_hi = 0;

    bool term_active(int j, long p, long q, long r) const;
    bool any_active(long p, long q, long r) const {
        return term_active(1, p, q, r) || term_active(2, p, q, r) ||
               term_active(3, p, q, r);
    }

    // Row-major (p, q, r) enumeration of the closed cube.
    std::vector<std::array<long, 3>> cube() const;
    // The same square window used for both seed planes r = 0 and p = 0.
    std::vector<std::array<long, 2>> plane() const;
};

ActivityWindow effective_window(const VertexCoalgebra& V);

// CB identity over every triple of the activity cube; deterministic for
// any jobs value.
Check check_cb_box(const VertexCoalgebra& V, const ActivityWindow& w, int jobs);

// (c (x) Id) Delta_n == delta_{n,-1} Id over the support and n = -1.
Check check_left_counit(const VertexCoalgebra& V);

// (Id (x) c) Delta_n == 0 for n >= 0 and == Id for n = -1.
Check check_weak_cocreation(const VertexCoalgebra& V);

// The truncation axiom holds structurally: the stored family is finite and
// every stored component is nonzero. This check re-verifies the storage
// invariants and dimension coherence.
Check check_truncation_structural(const VertexCoalgebra& V);

// Direct two-parameter forms evaluated without the three-term machinery;
// tests pin them against cb_term on the matching plane.
//   cocommutator(p, q):  (Id (x) Delta_q) Delta_p
//                          - (T (x) Id)(Id (x) Delta_p) Delta_q
//                          - sum_i binom(p,i) (Delta_i (x) Id) Delta_{p+q-i}
//   coassociator(q, r):  (Delta_r (x) Id) Delta_q
//                          - sum_i (-1)^i binom(r,i) [ (Id (x) Delta_{q+i}) Delta_{r-i}
//                              - (-1)^r (T (x) Id)(Id (x) Delta_i) Delta_{q+r-i} ]
TriMap cocommutator_defect(const VertexCoalgebra& V, long p, long q);
TriMap coassociator_defect(const VertexCoalgebra& V, long q, long r);

Check check_cocommutator_plane(const VertexCoalgebra& V, const ActivityWindow& w,
                               int jobs);
Check check_coassociator_plane(const VertexCoalgebra& V, const ActivityWindow& w,
                               int jobs);

// cb_term vanishes for all three j at triples where no term is active;
// samples uniformly from [-radius, radius]^3 minus the activity region.
Check check_inactive_samples(const VertexCoalgebra& V, int count,
                             unsigned long seed, long radius);

}  // namespace covertex
