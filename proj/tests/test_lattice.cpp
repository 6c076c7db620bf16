#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "covertex/lattice.hpp"
#include "covertex/models.hpp"

using namespace covertex;

namespace {

// Locate a step whose target feeds a later step, so dropping it must break
// the replay at a well-defined point.
std::size_t prerequisite_step(const Certificate& cert) {
    for (std::size_t j = 0; j < cert.steps.size(); ++j) {
        const Triple& t = cert.steps[j].target;
        for (std::size_t k = j + 1; k < cert.steps.size(); ++k) {
            if (cert.steps[k].parent_a == t || cert.steps[k].parent_b == t) return j;
        }
    }
    return cert.steps.size();
}

}  // namespace

TEST_CASE("descent recurrence holds per term over a box") {
    const VertexCoalgebra T = trivial_coalgebra();
    const Check ct = check_shift_recurrence(T, Box3{-4, 4}, 2);
    CHECK(ct.passed());
    CHECK(ct.cases == 9 * 9 * 9 * 3);

    const VertexCoalgebra V = dual_differential(3);
    const Check cv = check_shift_recurrence(V, Box3{-6, 6}, 2);
    CHECK(cv.passed());
    CHECK(cv.cases == 13 * 13 * 13 * 3);

    // The box is not vacuous: at least one base has a nonzero term.
    CHECK(!cb_term(V, 1, -1, 0, -1).zero());

    CHECK_THROWS(check_shift_recurrence(V, Box3{1, 0}, 1));
}

TEST_CASE("descent recurrence is family independent") {
    // The recurrence follows from Pascal's rule alone, so even a corrupted
    // family satisfies it; it transports validity but cannot create it.
    const VertexCoalgebra M =
        mutate(dual_differential(4), {-2, 3, Idx2{1, 1}, Rational(-1)});
    CHECK(check_shift_recurrence(M, Box3{-3, 3}, 1).passed());
    CHECK(!check_cb(M, -2, -1, 0).passed());
}

TEST_CASE("two seed planes cover the box and the replay validates") {
    LatticeOutcome out = propagate("subject-a", Box3{-2, 2}, 6, true, true);
    CHECK(out.complete());
    CHECK(out.gaps.total == 0);
    CHECK(out.cert.work_box.lo == -8);
    CHECK(out.cert.work_box.hi == 8);
    CHECK(!out.cert.steps.empty());
    CHECK(out.cert.observed_reach > 0);
    CHECK(out.cert.observed_reach <= out.cert.margin);

    std::string why = "sentinel";
    CHECK(replay_certificate(out.cert, &why));
    CHECK(why.empty());

    const std::string text = out.cert.str();
    CHECK(text.rfind("certificate v1\n", 0) == 0);
    CHECK(text.find("subject: subject-a\n") != std::string::npos);
    CHECK(text.find("target-box: [-2,2]^3\n") != std::string::npos);
    CHECK(text.find("work-box: [-8,8]^3\n") != std::string::npos);
    CHECK(text.find("seeds: r=0 p=0\n") != std::string::npos);
    CHECK(text.find("steps: " + std::to_string(out.cert.steps.size()) + "\n") !=
          std::string::npos);

    // Same inputs, same certificate, byte for byte.
    LatticeOutcome again = propagate("subject-a", Box3{-2, 2}, 6, true, true);
    CHECK(again.cert.str() == text);

    CHECK_THROWS(propagate("subject-a", Box3{2, -2}, 6, true, true));
    CHECK_THROWS(propagate("subject-a", Box3{-2, 2}, -1, true, true));
}

TEST_CASE("certificate cross validates against the family") {
    const VertexCoalgebra V = dual_differential(2);
    LatticeOutcome out = propagate(V.name, Box3{-2, 2}, 6, true, true);
    REQUIRE(out.complete());

    const Check seeds = check_seed_planes(V, out.cert, 2);
    CHECK(seeds.passed());
    // r=0 plane is 17x17; the p=0 plane re-lists everything except its
    // intersection with the first.
    CHECK(seeds.cases == 17 * 17 + 17 * 16);

    const Check derived = cross_validate(V, out.cert, 2);
    CHECK(derived.passed());
    CHECK(derived.cases == static_cast<long>(out.cert.steps.size()));

    const Check seeds1 = check_seed_planes(V, out.cert, 1);
    CHECK(seeds1.cases == seeds.cases);
    CHECK(seeds1.failures == seeds.failures);
}

TEST_CASE("single plane leaves the opposite half space uncovered") {
    LatticeOutcome r0 = propagate("subject-b", Box3{-2, 2}, 6, true, false);
    CHECK(!r0.complete());
    CHECK(r0.gaps.total == 50);
    CHECK(r0.gaps.uncovered.size() == GapReport::kMaxListed);
    CHECK(r0.gaps.uncovered.front() == Triple{-2, -2, -2});
    for (const Triple& t : r0.gaps.uncovered) CHECK(t.r <= -1);
    CHECK(std::is_sorted(r0.gaps.uncovered.begin(), r0.gaps.uncovered.end()));
    const std::string gap_text = r0.gaps.str();
    CHECK(gap_text.find("uncovered: 50\n") != std::string::npos);
    CHECK(gap_text.find("... (18 more)\n") != std::string::npos);

    std::string why;
    CHECK(!replay_certificate(r0.cert, &why));
    CHECK(why.find("not covered") != std::string::npos);

    LatticeOutcome p0 = propagate("subject-b", Box3{-2, 2}, 6, false, true);
    CHECK(!p0.complete());
    CHECK(p0.gaps.total == 50);
    for (const Triple& t : p0.gaps.uncovered) CHECK(t.p <= -1);
}

TEST_CASE("tampered certificates are rejected on replay") {
    const LatticeOutcome out = propagate("subject-c", Box3{-2, 2}, 6, true, true);
    REQUIRE(out.complete());
    REQUIRE(replay_certificate(out.cert, nullptr));
    std::string why;

    {
        Certificate c = out.cert;
        c.steps[0].parent_a.p += 1;
        CHECK(!replay_certificate(c, &why));
        CHECK(why.find("not a descent instance") != std::string::npos);
    }
    {
        Certificate c = out.cert;
        c.steps.push_back(c.steps.front());
        CHECK(!replay_certificate(c, &why));
        CHECK(why.find("target already known") != std::string::npos);
    }
    {
        Certificate c = out.cert;
        const std::size_t j = prerequisite_step(c);
        REQUIRE(j < c.steps.size());
        c.steps.erase(c.steps.begin() + static_cast<long>(j));
        CHECK(!replay_certificate(c, &why));
        CHECK(why.find("parent not yet known") != std::string::npos);
    }
    {
        Certificate c = out.cert;
        c.steps[0].target.q += 1000;
        c.steps[0].parent_a.q += 1000;
        c.steps[0].parent_b.q += 1000;
        CHECK(!replay_certificate(c, &why));
        CHECK(why.find("target outside the work box") != std::string::npos);
    }
    {
        Certificate c = out.cert;
        c.observed_reach += 1;
        CHECK(!replay_certificate(c, &why));
        CHECK(why.find("observed reach") != std::string::npos);
    }
    {
        Certificate c = out.cert;
        c.work_box.hi += 1;
        CHECK(!replay_certificate(c, &why));
        CHECK(why.find("work box") != std::string::npos);
    }
}

TEST_CASE("seed validation catches a corrupted family") {
    const VertexCoalgebra M =
        mutate(dual_differential(4), {-2, 3, Idx2{1, 1}, Rational(-1)});
    const LatticeOutcome out = propagate(M.name, Box3{-2, 2}, 2, true, true);

    const Check seeds = check_seed_planes(M, out.cert, 1);
    CHECK(!seeds.passed());
    REQUIRE(!seeds.witnesses.empty());
    // The mutation lives in the top basis column, and only that column of
    // any plane point can disagree.
    for (const auto& w : seeds.witnesses) {
        CHECK(w.location.find("basis=3") != std::string::npos);
    }

    const Check seeds4 = check_seed_planes(M, out.cert, 4);
    CHECK(seeds4.failures == seeds.failures);
    REQUIRE(seeds4.witnesses.size() == seeds.witnesses.size());
    for (std::size_t i = 0; i < seeds.witnesses.size(); ++i) {
        CHECK(seeds4.witnesses[i].location == seeds.witnesses[i].location);
        CHECK(seeds4.witnesses[i].detail == seeds.witnesses[i].detail);
    }
}

TEST_CASE("margin twice radius plus two covers every box up to radius eight") {
    for (long r = 1; r <= 8; ++r) {
        LatticeOutcome out = propagate("margin-sweep", Box3{-r, r}, 2 * r + 2, true, true);
        INFO("radius ", r);
        CHECK(out.complete());
        CHECK(out.cert.observed_reach <= 2 * r + 2);
        CHECK(replay_certificate(out.cert, nullptr));
    }
}

TEST_CASE("growing the margin or adding a plane never loses coverage") {
    // 27 target points, so every gap report lists its set in full.
    const Box3 box{-1, 1};
    GapReport prev;
    bool have_prev = false;
    for (long margin = 0; margin <= 4; ++margin) {
        LatticeOutcome both = propagate("closure", box, margin, true, true);
        LatticeOutcome r0 = propagate("closure", box, margin, true, false);
        REQUIRE(both.gaps.total == static_cast<long>(both.gaps.uncovered.size()));
        REQUIRE(r0.gaps.total == static_cast<long>(r0.gaps.uncovered.size()));

        // The second seed plane only removes gaps.
        CHECK(both.gaps.total <= r0.gaps.total);
        CHECK(std::includes(r0.gaps.uncovered.begin(), r0.gaps.uncovered.end(),
                            both.gaps.uncovered.begin(), both.gaps.uncovered.end()));

        // A wider work box only removes gaps.
        if (have_prev) {
            CHECK(both.gaps.total <= prev.total);
            CHECK(std::includes(prev.uncovered.begin(), prev.uncovered.end(),
                                both.gaps.uncovered.begin(), both.gaps.uncovered.end()));
        }
        prev = both.gaps;
        have_prev = true;

        if (margin == 0) CHECK(both.gaps.total > 0);
        if (margin == 4) CHECK(both.complete());
    }
}
