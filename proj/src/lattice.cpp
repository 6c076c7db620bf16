#include "covertex/lattice.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "covertex/contract.hpp"
#include "covertex/grid.hpp"

namespace covertex {

namespace {

long chebyshev_outside(const Triple& t, const Box3& box) {
    auto excess = [&](long v) {
        if (v < box.lo) return box.lo - v;
        if (v > box.hi) return v - box.hi;
        return 0L;
    };
    return std::max({excess(t.p), excess(t.q), excess(t.r)});
}

std::vector<Triple> seed_triples(const Certificate& c) {
    std::vector<Triple> out;
    const Box3& w = c.work_box;
    if (c.seed_r0 && w.lo <= 0 && 0 <= w.hi) {
        for (long p = w.lo; p <= w.hi; ++p) {
            for (long q = w.lo; q <= w.hi; ++q) out.push_back({p, q, 0});
        }
    }
    if (c.seed_p0 && w.lo <= 0 && 0 <= w.hi) {
        for (long q = w.lo; q <= w.hi; ++q) {
            for (long r = w.lo; r <= w.hi; ++r) {
                if (c.seed_r0 && r == 0) continue;  // already seeded above
                out.push_back({0, q, r});
            }
        }
    }
    return out;
}

}  // namespace

std::string Triple::str() const {
    std::ostringstream os;
    os << "(" << p << "," << q << "," << r << ")";
    return os.str();
}

std::string Box3::str() const {
    std::ostringstream os;
    os << "[" << lo << "," << hi << "]^3";
    return os.str();
}

std::string Certificate::str() const {
    std::ostringstream os;
    os << "certificate v1\n";
    os << "subject: " << subject << "\n";
    os << "target-box: " << target_box.str() << "\n";
    os << "margin: " << margin << "\n";
    os << "work-box: " << work_box.str() << "\n";
    os << "seeds:";
    if (seed_r0) os << " r=0";
    if (seed_p0) os << " p=0";
    os << "\n";
    os << "steps: " << steps.size() << "\n";
    os << "observed-reach: " << observed_reach << "\n";
    for (const auto& s : steps) {
        os << s.target.str() << " <= " << s.parent_a.str() << " + " << s.parent_b.str()
           << "\n";
    }
    return os.str();
}

std::string GapReport::str() const {
    std::ostringstream os;
    os << "uncovered: " << total << "\n";
    for (const auto& t : uncovered) os << t.str() << "\n";
    if (total > static_cast<long>(uncovered.size())) {
        os << "... (" << (total - static_cast<long>(uncovered.size())) << " more)\n";
    }
    return os.str();
}

LatticeOutcome propagate(std::string subject, Box3 target, long margin, bool seed_r0,
                         bool seed_p0) {
    require(target.lo <= target.hi, "target box must be nonempty");
    require(margin >= 0, "margin must be >= 0");

    LatticeOutcome out;
    Certificate& cert = out.cert;
    cert.subject = std::move(subject);
    cert.target_box = target;
    cert.margin = margin;
    cert.seed_r0 = seed_r0;
    cert.seed_p0 = seed_p0;
    cert.work_box = Box3{target.lo - margin, target.hi + margin};

    const long wlo = cert.work_box.lo;
    const long whi = cert.work_box.hi;
    const std::size_t side = static_cast<std::size_t>(whi - wlo + 1);
    std::vector<unsigned char> known(side * side * side, 0);
    auto at = [&](long p, long q, long r) -> std::size_t {
        return (static_cast<std::size_t>(r - wlo) * side + static_cast<std::size_t>(p - wlo)) *
                   side +
               static_cast<std::size_t>(q - wlo);
    };

    for (const Triple& t : seed_triples(cert)) known[at(t.p, t.q, t.r)] = 1;

    // Fixpoint over descent instances with base (p,q,r): the instance links
    //   A = (p+1,q,r),  B = (p,q+1,r),  C = (p,q,r+1)
    // and two known members force the third. Scan order r, p, q ascending
    // with immediate marking; the fixpoint set is order-independent, the
    // step list is deterministic for a fixed order.
    bool changed = true;
    while (changed) {
        changed = false;
        for (long r = wlo; r + 1 <= whi; ++r) {
            for (long p = wlo; p + 1 <= whi; ++p) {
                for (long q = wlo; q + 1 <= whi; ++q) {
                    const std::size_t ia = at(p + 1, q, r);
                    const std::size_t ib = at(p, q + 1, r);
                    const std::size_t ic = at(p, q, r + 1);
                    const int count = known[ia] + known[ib] + known[ic];
                    if (count != 2) continue;
                    const Triple a{p + 1, q, r}, b{p, q + 1, r}, c{p, q, r + 1};
                    if (!known[ia]) {
                        known[ia] = 1;
                        cert.steps.push_back({a, b, c});
                    } else if (!known[ib]) {
                        known[ib] = 1;
                        cert.steps.push_back({b, a, c});
                    } else {
                        known[ic] = 1;
                        cert.steps.push_back({c, a, b});
                    }
                    changed = true;
                }
            }
        }
    }

    cert.observed_reach = 0;
    for (const auto& s : cert.steps) {
        cert.observed_reach =
            std::max(cert.observed_reach, chebyshev_outside(s.target, target));
    }

    for (long p = target.lo; p <= target.hi; ++p) {
        for (long q = target.lo; q <= target.hi; ++q) {
            for (long r = target.lo; r <= target.hi; ++r) {
                if (known[at(p, q, r)]) continue;
                ++out.gaps.total;
                if (out.gaps.uncovered.size() < GapReport::kMaxListed) {
                    out.gaps.uncovered.push_back({p, q, r});
                }
            }
        }
    }
    return out;
}

bool replay_certificate(const Certificate& cert, std::string* why) {
    auto reject = [&](const std::string& reason) {
        if (why) *why = reason;
        return false;
    };
    const Box3 expected_work{cert.target_box.lo - cert.margin,
                             cert.target_box.hi + cert.margin};
    if (!(expected_work.lo == cert.work_box.lo && expected_work.hi == cert.work_box.hi)) {
        return reject("work box does not match target box plus margin");
    }

    std::set<Triple> have;
    for (const Triple& t : seed_triples(cert)) have.insert(t);

    long reach = 0;
    for (std::size_t i = 0; i < cert.steps.size(); ++i) {
        const DerivationStep& s = cert.steps[i];
        const std::string tag = "step " + std::to_string(i) + " (" + s.target.str() + ")";

        // Identify the instance base: A carries the unique largest p, B the
        // unique largest q, C the unique largest r.
        const Triple* tri[3] = {&s.target, &s.parent_a, &s.parent_b};
        const Triple* a = nullptr;
        const Triple* b = nullptr;
        const Triple* c = nullptr;
        for (const Triple* t : tri) {
            if ((a == nullptr || t->p > a->p)) a = t;
        }
        for (const Triple* t : tri) {
            if (t != a && (b == nullptr || t->q > b->q)) b = t;
        }
        for (const Triple* t : tri) {
            if (t != a && t != b) c = t;
        }
        const Triple base{a->p - 1, b->q - 1, c->r - 1};
        const bool shape_ok = *a == Triple{base.p + 1, base.q, base.r} &&
                              *b == Triple{base.p, base.q + 1, base.r} &&
                              *c == Triple{base.p, base.q, base.r + 1};
        if (!shape_ok) return reject(tag + ": not a descent instance");
        if (!cert.work_box.contains(s.target)) {
            return reject(tag + ": target outside the work box");
        }
        if (have.count(s.target)) return reject(tag + ": target already known");
        if (!have.count(s.parent_a) || !have.count(s.parent_b)) {
            return reject(tag + ": parent not yet known");
        }
        have.insert(s.target);
        reach = std::max(reach, chebyshev_outside(s.target, cert.target_box));
    }

    if (reach != cert.observed_reach) {
        return reject("observed reach disagrees with the replayed steps");
    }

    for (long p = cert.target_box.lo; p <= cert.target_box.hi; ++p) {
        for (long q = cert.target_box.lo; q <= cert.target_box.hi; ++q) {
            for (long r = cert.target_box.lo; r <= cert.target_box.hi; ++r) {
                if (!have.count(Triple{p, q, r})) {
                    return reject("target box not covered at " + Triple{p, q, r}.str());
                }
            }
        }
    }
    if (why) why->clear();
    return true;
}

Check check_seed_planes(const VertexCoalgebra& V, const Certificate& cert, int jobs) {
    const std::vector<Triple> seeds = seed_triples(cert);
    auto parts = grid_map<Check>(
        seeds.size(),
        [&](std::size_t i) { return check_cb(V, seeds[i].p, seeds[i].q, seeds[i].r); },
        jobs);
    Check out{"seed-planes", 0, 0, {}};
    for (const auto& part : parts) out.merge(part);
    return out;
}

Check cross_validate(const VertexCoalgebra& V, const Certificate& cert, int jobs) {
    auto parts = grid_map<Check>(
        cert.steps.size(),
        [&](std::size_t i) {
            const Triple& t = cert.steps[i].target;
            return check_cb(V, t.p, t.q, t.r);
        },
        jobs);
    Check out{"cross-validate", 0, 0, {}};
    for (const auto& part : parts) out.merge(part);
    return out;
}

Check check_shift_recurrence(const VertexCoalgebra& V, const Box3& box, int jobs) {
    require(box.lo <= box.hi, "recurrence box must be nonempty");
    std::vector<Triple> bases;
    bases.reserve(static_cast<std::size_t>(box.side() * box.side() * box.side()));
    for (long p = box.lo; p <= box.hi; ++p) {
        for (long q = box.lo; q <= box.hi; ++q) {
            for (long r = box.lo; r <= box.hi; ++r) bases.push_back({p, q, r});
        }
    }
    auto parts = grid_map<Check>(
        bases.size(),
        [&](std::size_t i) {
            const Triple& t = bases[i];
            Check chk{"", 0, 0, {}};
            for (int j = 1; j <= 3; ++j) {
                chk.count_case();
                TriMap lhs = cb_term(V, j, t.p + 1, t.q, t.r);
                TriMap rhs = cb_term(V, j, t.p, t.q + 1, t.r);
                rhs += cb_term(V, j, t.p, t.q, t.r + 1);
                if (!(lhs == rhs)) {
                    chk.fail_case("base=" + t.str() + " term=" + std::to_string(j),
                                  "descent instance does not balance");
                }
            }
            return chk;
        },
        jobs);
    Check out{"shift-recurrence", 0, 0, {}};
    for (const auto& part : parts) out.merge(part);
    return out;
}

}  // namespace covertex
