#pragma once

#include <compare>
#include <string>
#include <vector>

#include "covertex/checks.hpp"

namespace covertex {

struct Triple {
    long p = 0, q = 0, r = 0;
    friend auto operator<=>(const Triple&, const Triple&) = default;
    std::string str() const;
};

// Closed cube [lo, hi]^3.
struct Box3 {
    long lo = 0, hi = -1;
    bool contains(const Triple& t) const {
        return lo <= t.p && t.p <= hi && lo <= t.q && t.q <= hi && lo <= t.r && t.r <= hi;
    }
    long side() const { return hi < lo ? 0 : hi - lo + 1; }
    std::string str() const;
};

// Every component sum obeys the same two-step descent
//   CB_j(p+1, q, r) == CB_j(p, q+1, r) + CB_j(p, q, r+1)
// because binomials obey Pascal's rule and nothing else about the family
// enters. One instance therefore ties three lattice points together, and
// knowing any two of the combined identity's values forces the third.
struct DerivationStep {
    Triple target;
    Triple parent_a;
    Triple parent_b;
};

// A replayable derivation: starting from the stated seed planes inside the
// work box, the steps derive the combined identity on every triple they
// name, in order, each from two already-known triples.
struct Certificate {
    std::string subject;
    Box3 target_box;
    long margin = 0;
    bool seed_r0 = false;
    bool seed_p0 = false;
    Box3 work_box;
    std::vector<DerivationStep> steps;
    long observed_reach = 0;  // max Chebyshev distance of a derived triple
                              // outside the target box
    std::string str() const;
};

struct GapReport {
    static constexpr std::size_t kMaxListed = 32;
    std::vector<Triple> uncovered;  // first few, in (p,q,r)-lex order
    long total = 0;
    std::string str() const;
};

struct LatticeOutcome {
    Certificate cert;
    GapReport gaps;
    bool complete() const { return gaps.total == 0; }
};

// Fixpoint propagation of the descent instances inside the inflated box.
// Pure lattice combinatorics: no coalgebra values are consulted, so the
// certificate is only as strong as its seeds plus the replay and the
// cross-validation below.
LatticeOutcome propagate(std::string subject, Box3 target, long margin, bool seed_r0,
                         bool seed_p0);

// Structural replay of a certificate: seeds are regenerated from the header,
// each step must be a genuine descent instance whose parents are already
// known and whose target is new, and the target box must end fully covered.
// Returns false and explains through `why` on the first defect.
bool replay_certificate(const Certificate& cert, std::string* why);

// The seed planes of the certificate, verified against the actual family.
Check check_seed_planes(const VertexCoalgebra& V, const Certificate& cert, int jobs);

// Every derived triple of the certificate, verified against the actual
// family; this is the independent check that propagation never outruns the
// algebra.
Check cross_validate(const VertexCoalgebra& V, const Certificate& cert, int jobs);

// The descent identity itself, term by term, over a box of base points.
Check check_shift_recurrence(const VertexCoalgebra& V, const Box3& box, int jobs);

}  // namespace covertex
