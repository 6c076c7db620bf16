#include "covertex/checks.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "covertex/binomial.hpp"
#include "covertex/grid.hpp"

namespace covertex {

namespace {

bool odd(long v) { return (v % 2) != 0; }

std::string triple_str(long p, long q, long r) {
    std::ostringstream os;
    os << "(p,q,r)=(" << p << "," << q << "," << r << ")";
    return os.str();
}

std::string pair_str(const char* an, long a, const char* bn, long b) {
    std::ostringstream os;
    os << an << "=" << a << " " << bn << "=" << b;
    return os.str();
}

// One summand family: coeff(i) * (Delta_{outer(i)} in `slot`) Delta_{inner(i)},
// optionally flipped in the first two slots. The i-range is clipped so both
// degrees land in the support; everything outside contributes zero.
struct Summand {
    long outer_base;  // outer degree = outer_base + i
    int slot;
    long inner_base;  // inner degree = inner_base - i
    long binom_top;   // coefficient = sign(i) * binom(binom_top, i)
    bool alternating; // sign(i) = (-1)^i when set
    bool extra_flip;  // multiply by (-1)^binom_top (term 3's global sign)
    bool transpose;
};

Summand summand_for(int j, long p, long q, long r) {
    switch (j) {
        case 1:
            return Summand{r, 1, p + q, p, false, false, false};
        case 2:
            return Summand{q, 2, p + r, r, true, false, false};
        case 3:
            return Summand{p, 2, q + r, r, true, true, true};
        default:
            contract_fail("cb term index must be 1, 2, or 3");
    }
}

TriMap eval_summand(const VertexCoalgebra& V, const Summand& t) {
    TriMap acc(V.dim);
    const DegreeSupport s = V.support();
    if (s.empty()) return acc;
    const long lo = std::max({0L, s.lo - t.outer_base, t.inner_base - s.hi});
    const long hi = std::min(s.hi - t.outer_base, t.inner_base - s.lo);
    for (long i = lo; i <= hi; ++i) {
        Rational coeff = binom(t.binom_top, i);
        if (coeff.is_zero()) continue;
        if ((t.alternating && odd(i)) != (t.extra_flip && odd(t.binom_top))) {
            coeff = -coeff;
        }
        const LinMap2& outer = V.family.at(t.outer_base + i);
        const LinMap2& inner = V.family.at(t.inner_base - i);
        if (outer.zero() || inner.zero()) continue;
        for (const auto& [col, mid] : inner.columns()) {
            Tensor3 piece = slot_apply(outer, t.slot, mid);
            if (t.transpose) piece = transpose12(piece);
            piece *= coeff;
            acc.cols[static_cast<std::size_t>(col)] += piece;
        }
    }
    return acc;
}

void witness_columns(Check& chk, const std::string& where, const TriMap& lhs,
                     const TriMap& rhs) {
    for (int s = 0; s < lhs.dim(); ++s) {
        const auto su = static_cast<std::size_t>(s);
        if (lhs.cols[su] == rhs.cols[su]) continue;
        chk.fail_case(where + " basis=" + std::to_string(s),
                      "lhs=" + lhs.cols[su].str() + " rhs=" + rhs.cols[su].str());
        return;
    }
    chk.fail_case(where, "columns disagree");
}

Check merge_grid(std::string id, std::vector<Check> parts) {
    Check out{std::move(id), 0, 0, {}};
    for (const auto& part : parts) out.merge(part);
    return out;
}

}  // namespace

TriMap cb_term(const VertexCoalgebra& V, int j, long p, long q, long r) {
    return eval_summand(V, summand_for(j, p, q, r));
}

Check check_cb(const VertexCoalgebra& V, long p, long q, long r) {
    Check chk{"cb-identity", 0, 0, {}};
    chk.count_case();
    TriMap lhs = cb_term(V, 1, p, q, r);
    TriMap rhs = cb_term(V, 2, p, q, r);
    rhs -= cb_term(V, 3, p, q, r);
    if (!(lhs == rhs)) witness_columns(chk, triple_str(p, q, r), lhs, rhs);
    return chk;
}

bool ActivityWindow::term_active(int j, long p, long q, long r) const {
    if (support.empty()) return false;
    const long total = p + q + r;
    if (total < 2 * support.lo || total > 2 * support.hi) return false;
    switch (j) {
        case 1:
            return p + q >= support.lo && r <= support.hi;
        case 2:
            return p + r >= support.lo && q <= support.hi;
        case 3:
            return q + r >= support.lo && p <= support.hi;
        default:
            contract_fail("cb term index must be 1, 2, or 3");
    }
}

std::vector<std::array<long, 3>> ActivityWindow::cube() const {
    std::vector<std::array<long, 3>> out;
    if (support.empty()) return out;
    const long n = cube_hi - cube_lo + 1;
    out.reserve(static_cast<std::size_t>(n * n * n));
    for (long p = cube_lo; p <= cube_hi; ++p) {
        for (long q = cube_lo; q <= cube_hi; ++q) {
            for (long r = cube_lo; r <= cube_hi; ++r) out.push_back({p, q, r});
        }
    }
    return out;
}

std::vector<std::array<long, 2>> ActivityWindow::plane() const {
    std::vector<std::array<long, 2>> out;
    if (support.empty()) return out;
    const long n = cube_hi - cube_lo + 1;
    out.reserve(static_cast<std::size_t>(n * n));
    for (long a = cube_lo; a <= cube_hi; ++a) {
        for (long b = cube_lo; b <= cube_hi; ++b) out.push_back({a, b});
    }
    return out;
}

ActivityWindow effective_window(const VertexCoalgebra& V) {
    ActivityWindow w;
    w.support = V.support();
    if (!w.support.empty()) {
        w.cube_lo = 2 * w.support.lo - w.support.hi - 1;
        w.cube_hi = std::max(0L, w.support.hi) + 1;
    }
    return w;
}

Check check_cb_box(const VertexCoalgebra& V, const ActivityWindow& w, int jobs) {
    const auto cube = w.cube();
    auto parts = grid_map<Check>(
        cube.size(),
        [&](std::size_t i) {
            const auto& t = cube[i];
            return check_cb(V, t[0], t[1], t[2]);
        },
        jobs);
    return merge_grid("cb-grid", std::move(parts));
}

Check check_left_counit(const VertexCoalgebra& V) {
    Check chk{"counit-left", 0, 0, {}};
    std::vector<long> degrees;
    for (const auto& [n, m] : V.family.maps()) degrees.push_back(n);
    if (!V.family.has(-1)) degrees.push_back(-1);
    std::sort(degrees.begin(), degrees.end());
    for (long n : degrees) {
        chk.count_case();
        const LinMap2& d = V.family.at(n);
        for (int s = 0; s < V.dim; ++s) {
            Vector lhs = contract(d.column(s), 1, V.counit);
            Vector rhs(V.dim);
            if (n == -1) rhs = basis_vector(V.dim, s);
            if (!(lhs == rhs)) {
                chk.fail_case("n=" + std::to_string(n) + " basis=" + std::to_string(s),
                              "lhs=" + lhs.str() + " rhs=" + rhs.str());
                break;
            }
        }
    }
    return chk;
}

Check check_weak_cocreation(const VertexCoalgebra& V) {
    Check chk{"cocreation-weak", 0, 0, {}};
    std::vector<long> degrees;
    for (const auto& [n, m] : V.family.maps()) {
        if (n >= 0) degrees.push_back(n);
    }
    degrees.push_back(-1);
    std::sort(degrees.begin(), degrees.end());
    for (long n : degrees) {
        chk.count_case();
        const LinMap2& d = V.family.at(n);
        for (int s = 0; s < V.dim; ++s) {
            Vector lhs = contract(d.column(s), 2, V.counit);
            Vector rhs(V.dim);
            if (n == -1) rhs = basis_vector(V.dim, s);
            if (!(lhs == rhs)) {
                chk.fail_case("n=" + std::to_string(n) + " basis=" + std::to_string(s),
                              "lhs=" + lhs.str() + " rhs=" + rhs.str());
                break;
            }
        }
    }
    return chk;
}

Check check_truncation_structural(const VertexCoalgebra& V) {
    Check chk{"truncation-structural", 0, 0, {}};
    chk.count_case();
    if (V.counit.dim() != V.dim || V.family.dim() != V.dim) {
        chk.fail_case("dimensions", "counit or family dim differs from coalgebra dim");
    }
    for (const auto& [n, m] : V.family.maps()) {
        chk.count_case();
        if (m.dim() != V.dim) {
            chk.fail_case("n=" + std::to_string(n), "component dim mismatch");
            continue;
        }
        if (m.zero()) {
            chk.fail_case("n=" + std::to_string(n), "stored component is zero");
            continue;
        }
        for (const auto& [col, t] : m.columns()) {
            if (t.zero()) {
                chk.fail_case("n=" + std::to_string(n) + " basis=" + std::to_string(col),
                              "stored zero column");
                break;
            }
        }
    }
    const DegreeSupport s = V.support();
    chk.count_case();
    if (!s.empty() && static_cast<long>(V.family.maps().size()) > s.width()) {
        chk.fail_case("support", "more stored components than the degree range holds");
    }
    return chk;
}

TriMap cocommutator_defect(const VertexCoalgebra& V, long p, long q) {
    TriMap defect(V.dim);
    const DegreeSupport s = V.support();
    if (s.empty()) return defect;
    const LinMap2& dp = V.family.at(p);
    const LinMap2& dq = V.family.at(q);
    for (int b = 0; b < V.dim; ++b) {
        Tensor3 acc = slot_apply(dq, 2, dp.column(b));
        acc -= transpose12(slot_apply(dp, 2, dq.column(b)));
        defect.cols[static_cast<std::size_t>(b)] = std::move(acc);
    }
    const long lo = std::max({0L, s.lo, p + q - s.hi});
    const long hi = std::min(s.hi, p + q - s.lo);
    for (long i = lo; i <= hi; ++i) {
        const Rational coeff = binom(p, i);
        if (coeff.is_zero()) continue;
        const LinMap2& outer = V.family.at(i);
        const LinMap2& inner = V.family.at(p + q - i);
        for (const auto& [col, mid] : inner.columns()) {
            Tensor3 piece = slot_apply(outer, 1, mid);
            piece *= coeff;
            defect.cols[static_cast<std::size_t>(col)] -= piece;
        }
    }
    return defect;
}

TriMap coassociator_defect(const VertexCoalgebra& V, long q, long r) {
    TriMap defect(V.dim);
    const DegreeSupport s = V.support();
    if (s.empty()) return defect;
    const LinMap2& dq = V.family.at(q);
    const LinMap2& dr = V.family.at(r);
    for (int b = 0; b < V.dim; ++b) {
        defect.cols[static_cast<std::size_t>(b)] = slot_apply(dr, 1, dq.column(b));
    }
    {
        const long lo = std::max({0L, s.lo - q, r - s.hi});
        const long hi = std::min(s.hi - q, r - s.lo);
        for (long i = lo; i <= hi; ++i) {
            Rational coeff = binom(r, i);
            if (coeff.is_zero()) continue;
            if (odd(i)) coeff = -coeff;
            const LinMap2& outer = V.family.at(q + i);
            const LinMap2& inner = V.family.at(r - i);
            for (const auto& [col, mid] : inner.columns()) {
                Tensor3 piece = slot_apply(outer, 2, mid);
                piece *= coeff;
                defect.cols[static_cast<std::size_t>(col)] -= piece;
            }
        }
    }
    {
        const long lo = std::max({0L, s.lo, q + r - s.hi});
        const long hi = std::min(s.hi, q + r - s.lo);
        for (long i = lo; i <= hi; ++i) {
            Rational coeff = binom(r, i);
            if (coeff.is_zero()) continue;
            if (odd(i + r)) coeff = -coeff;
            const LinMap2& outer = V.family.at(i);
            const LinMap2& inner = V.family.at(q + r - i);
            for (const auto& [col, mid] : inner.columns()) {
                Tensor3 piece = transpose12(slot_apply(outer, 2, mid));
                piece *= coeff;
                defect.cols[static_cast<std::size_t>(col)] += piece;
            }
        }
    }
    return defect;
}

Check check_cocommutator_plane(const VertexCoalgebra& V, const ActivityWindow& w,
                               int jobs) {
    const auto pts = w.plane();
    const TriMap zero(V.dim);
    auto parts = grid_map<Check>(
        pts.size(),
        [&](std::size_t i) {
            Check chk{"", 0, 0, {}};
            chk.count_case();
            const TriMap d = cocommutator_defect(V, pts[i][0], pts[i][1]);
            if (!d.zero()) {
                witness_columns(chk, pair_str("p", pts[i][0], "q", pts[i][1]), d, zero);
            }
            return chk;
        },
        jobs);
    return merge_grid("cocommutator-plane", std::move(parts));
}

Check check_coassociator_plane(const VertexCoalgebra& V, const ActivityWindow& w,
                               int jobs) {
    const auto pts = w.plane();
    const TriMap zero(V.dim);
    auto parts = grid_map<Check>(
        pts.size(),
        [&](std::size_t i) {
            Check chk{"", 0, 0, {}};
            chk.count_case();
            const TriMap d = coassociator_defect(V, pts[i][0], pts[i][1]);
            if (!d.zero()) {
                witness_columns(chk, pair_str("q", pts[i][0], "r", pts[i][1]), d, zero);
            }
            return chk;
        },
        jobs);
    return merge_grid("coassociator-plane", std::move(parts));
}

Check check_inactive_samples(const VertexCoalgebra& V, int count,
                             unsigned long seed, long radius) {
    require(count >= 0, "sample count must be >= 0");
    require(radius >= 1, "sample radius must be >= 1");
    Check chk{"cb-inactive-samples", 0, 0, {}};
    const ActivityWindow w = effective_window(V);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> coord(-radius, radius);
    for (int k = 0; k < count; ++k) {
        long p = 0, q = 0, r = 0;
        int guard = 0;
        do {
            require(++guard <= 10000, "activity region saturates the sample space");
            p = coord(rng);
            q = coord(rng);
            r = coord(rng);
        } while (w.any_active(p, q, r));
        chk.count_case();
        for (int j = 1; j <= 3; ++j) {
            const TriMap t = cb_term(V, j, p, q, r);
            if (!t.zero()) {
                chk.fail_case(triple_str(p, q, r) + " term=" + std::to_string(j),
                              "expected empty sum, got a nonzero map");
                break;
            }
        }
    }
    return chk;
}

}  // namespace covertex
