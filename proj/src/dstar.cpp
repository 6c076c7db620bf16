#include "covertex/dstar.hpp"

#include <algorithm>
#include <sstream>

#include "covertex/binomial.hpp"
#include "covertex/series.hpp"

namespace covertex {

namespace {

bool odd(long v) { return (v % 2) != 0; }

std::string nk_str(const char* an, long a, const char* bn, long b) {
    std::ostringstream os;
    os << an << "=" << a << " " << bn << "=" << b;
    return os.str();
}

void witness_tensor(Check& chk, const std::string& where, const Tensor2& lhs,
                    const Tensor2& rhs) {
    chk.fail_case(where, "lhs=" + lhs.str() + " rhs=" + rhs.str());
}

// (Id (x) c) Delta_n as a matrix.
Matrix contract_second(const VertexCoalgebra& V, long n) {
    Matrix m(V.dim);
    const LinMap2& d = V.family.at(n);
    for (const auto& [col, t] : d.columns()) {
        Vector v = contract(t, 2, V.counit);
        for (const auto& [row, val] : v.entries()) m.add(row, col, val);
    }
    return m;
}

}  // namespace

DStarData dstar_data(const VertexCoalgebra& V) {
    DStarData d;
    const DegreeSupport s = V.support();
    d.cap = std::max({static_cast<long>(V.dim), s.empty() ? 0L : -1 - s.lo, 1L}) + 1;
    d.divided.reserve(static_cast<std::size_t>(d.cap) + 1);
    for (long k = 0; k <= d.cap; ++k) d.divided.push_back(contract_second(V, -1 - k));
    d.dstar = d.divided[1];
    d.power_div.reserve(static_cast<std::size_t>(d.cap) + 1);
    d.power_div.push_back(Matrix::identity(V.dim));
    for (long k = 1; k <= d.cap; ++k) {
        Matrix next = d.power_div.back().compose(d.dstar);
        next *= Rational(1, k);
        d.power_div.push_back(std::move(next));
    }
    d.nilpotency = d.dstar.nilpotency_index();
    return d;
}

Check check_dstar_left(const VertexCoalgebra& V, const DStarData& d) {
    Check chk{"dstar-left-shift", 0, 0, {}};
    const DegreeSupport s = V.support();
    if (s.empty()) return chk;
    for (long q = s.lo; q <= s.hi + 1; ++q) {
        chk.count_case();
        const LinMap2& dq = V.family.at(q);
        const LinMap2& dq1 = V.family.at(q - 1);
        for (int b = 0; b < V.dim; ++b) {
            Tensor2 lhs = slot_apply(d.dstar, 1, dq.column(b));
            Tensor2 rhs = dq1.column(b);
            rhs *= Rational(-q);
            if (!(lhs == rhs)) {
                witness_tensor(chk, nk_str("q", q, "basis", b), lhs, rhs);
                break;
            }
        }
    }
    return chk;
}

Check check_divided_shift(const VertexCoalgebra& V, const DStarData& d) {
    Check chk{"dstar-divided-shift", 0, 0, {}};
    const DegreeSupport s = V.support();
    if (s.empty()) return chk;
    for (long n = s.lo; n <= s.hi; ++n) {
        const LinMap2& dn = V.family.at(n);
        for (long k = 0; k <= d.cap; ++k) {
            chk.count_case();
            Rational coeff = binom(n, k);
            if (odd(k)) coeff = -coeff;
            const LinMap2& dnk = V.family.at(n - k);
            const Matrix& pk = d.power_div[static_cast<std::size_t>(k)];
            for (int b = 0; b < V.dim; ++b) {
                Tensor2 lhs = slot_apply(pk, 1, dn.column(b));
                Tensor2 rhs = dnk.column(b);
                rhs *= coeff;
                if (!(lhs == rhs)) {
                    witness_tensor(chk, nk_str("n", n, "k", k) + " basis=" + std::to_string(b),
                                   lhs, rhs);
                    break;
                }
            }
        }
    }
    return chk;
}

Check check_shift_series(const VertexCoalgebra& V, const DStarData& d) {
    Check chk{"dstar-shift-series", 0, 0, {}};
    const DegreeSupport s = V.support();
    if (s.empty()) return chk;
    const std::vector<std::string> base_vars{"x"};
    const long a_lo = -s.hi - 1;
    const long a_hi = -s.lo - 1;
    for (int b = 0; b < V.dim; ++b) {
        chk.count_case();
        // Structure series of e_b: coefficient of x^a is Delta_{-a-1} e_b.
        Series<Tensor2> structure(base_vars, Tensor2(V.dim));
        structure.set_support(0, ExpInterval::window(a_lo, a_hi));
        for (long a = a_lo; a <= a_hi; ++a) {
            structure.add_coeff({a}, V.family.at(-a - 1).column(b));
        }
        Series<Tensor2> lhs = taylor_shift(structure, "x", "z", d.cap);

        Series<Tensor2> rhs({"x", "z"}, Tensor2(V.dim));
        rhs.set_trust(1, ExpInterval::at_most(d.cap));
        rhs.set_support(0, ExpInterval::window(a_lo - d.cap, a_hi));
        rhs.set_support(1, ExpInterval::window(0, d.cap));
        for (long a = a_lo; a <= a_hi; ++a) {
            const Tensor2& col = V.family.at(-a - 1).column(b);
            for (long k = 0; k <= d.cap; ++k) {
                rhs.add_coeff({a, k},
                              slot_apply(d.power_div[static_cast<std::size_t>(k)], 1, col));
            }
        }
        SeriesComparison cmp = compare(lhs, rhs);
        if (cmp.vacuous) {
            chk.fail_case("basis=" + std::to_string(b), "comparison region is empty");
        } else if (!cmp.equal) {
            chk.fail_case("basis=" + std::to_string(b), cmp.witness);
        }
    }
    return chk;
}

Check check_strong_cocreation(const VertexCoalgebra& V, const DStarData& d) {
    Check chk{"cocreation-strong", 0, 0, {}};
    for (const auto& [n, m] : V.family.maps()) {
        if (n < 0) continue;
        chk.count_case();
        Matrix c = contract_second(V, n);
        if (!c.zero()) {
            chk.fail_case("n=" + std::to_string(n), "lhs=" + c.str() + " rhs=0");
        }
    }
    for (long k = 0; k <= d.cap; ++k) {
        chk.count_case();
        const auto ks = static_cast<std::size_t>(k);
        if (!(d.divided[ks] == d.power_div[ks])) {
            chk.fail_case("k=" + std::to_string(k),
                          "lhs=" + d.divided[ks].str() + " rhs=" + d.power_div[ks].str());
        }
    }
    return chk;
}

Check check_coskew(const VertexCoalgebra& V, const DStarData& d) {
    Check chk{"coskew", 0, 0, {}};
    const DegreeSupport s = V.support();
    if (s.empty()) return chk;
    if (!d.nilpotency) {
        chk.count_case();
        chk.fail_case("dstar", "not nilpotent; the alternating ladder need not terminate");
        return chk;
    }
    const long nu = *d.nilpotency;
    for (long r = s.lo - d.cap; r <= s.hi + 1; ++r) {
        chk.count_case();
        const LinMap2& dr = V.family.at(r);
        for (int b = 0; b < V.dim; ++b) {
            Tensor2 lhs = transpose12(dr.column(b));
            Tensor2 rhs(V.dim);
            const long ilo = std::max(0L, s.lo - r);
            const long ihi = std::min(nu - 1, s.hi - r);
            for (long i = ilo; i <= ihi; ++i) {
                Vector u = d.power_div[static_cast<std::size_t>(i)].apply(
                    basis_vector(V.dim, b));
                Tensor2 term = V.family.at(r + i).apply(u);
                if (odd(r + 1 + i)) term *= Rational(-1);
                rhs += term;
            }
            if (!(lhs == rhs)) {
                witness_tensor(chk, nk_str("r", r, "basis", b), lhs, rhs);
                break;
            }
        }
    }
    return chk;
}

Check check_dstar_commutator(const VertexCoalgebra& V, const DStarData& d) {
    Check chk{"dstar-commutator", 0, 0, {}};
    const DegreeSupport s = V.support();
    if (s.empty()) return chk;
    for (long q = s.lo; q <= s.hi + 1; ++q) {
        chk.count_case();
        const LinMap2& dq = V.family.at(q);
        const LinMap2& dq1 = V.family.at(q - 1);
        for (int b = 0; b < V.dim; ++b) {
            Tensor2 lhs = dq1.column(b);
            lhs *= Rational(-q);
            Tensor2 rhs = dq.apply(d.dstar.apply(basis_vector(V.dim, b)));
            rhs -= slot_apply(d.dstar, 2, dq.column(b));
            if (!(lhs == rhs)) {
                witness_tensor(chk, nk_str("q", q, "basis", b), lhs, rhs);
                break;
            }
        }
    }
    return chk;
}

Check check_dstar_exchange(const VertexCoalgebra& V, const DStarData& d) {
    Check chk{"dstar-exchange", 0, 0, {}};
    const DegreeSupport s = V.support();
    if (s.empty()) return chk;
    if (!d.nilpotency) {
        chk.count_case();
        chk.fail_case("dstar", "not nilpotent; the exchange sum need not terminate");
        return chk;
    }
    const long nu = *d.nilpotency;
    for (long n = s.lo; n <= s.hi; ++n) {
        const LinMap2& dn = V.family.at(n);
        for (long k = 0; k <= 2 * d.cap; ++k) {
            chk.count_case();
            Rational coeff = binom(n, k);
            if (odd(k)) coeff = -coeff;
            const LinMap2& dnk = V.family.at(n - k);
            for (int b = 0; b < V.dim; ++b) {
                Tensor2 lhs(V.dim);
                const long a_lo = std::max(0L, k - (nu - 1));
                const long a_hi = std::min(k, nu - 1);
                for (long a = a_lo; a <= a_hi; ++a) {
                    const long bb = k - a;
                    Vector u = d.power_div[static_cast<std::size_t>(bb)].apply(
                        basis_vector(V.dim, b));
                    Tensor2 term = slot_apply(d.power_div[static_cast<std::size_t>(a)], 2,
                                              dn.apply(u));
                    if (odd(a)) term *= Rational(-1);
                    lhs += term;
                }
                Tensor2 rhs = dnk.column(b);
                rhs *= coeff;
                if (!(lhs == rhs)) {
                    witness_tensor(chk, nk_str("n", n, "k", k) + " basis=" + std::to_string(b),
                                   lhs, rhs);
                    break;
                }
            }
        }
    }
    return chk;
}

std::vector<Check> check_translation_suite(const VertexCoalgebra& V,
                                           const DStarData& d) {
    std::vector<Check> out;
    out.push_back(check_dstar_left(V, d));
    out.push_back(check_divided_shift(V, d));
    out.push_back(check_shift_series(V, d));
    out.push_back(check_strong_cocreation(V, d));
    out.push_back(check_coskew(V, d));
    out.push_back(check_dstar_commutator(V, d));
    out.push_back(check_dstar_exchange(V, d));
    return out;
}

}  // namespace covertex
