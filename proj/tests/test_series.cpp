#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "covertex/selftest.hpp"
#include "covertex/series.hpp"

using namespace covertex;

namespace {
const std::vector<std::string> kXY{"x", "y"};
const std::vector<std::string> kXYZ{"x", "y", "z"};
}  // namespace

TEST_CASE("interval: sentinels, intersection, hull, saturation") {
    const auto all = ExpInterval::all();
    CHECK(all.contains(1000000));
    CHECK(all.is_all());
    CHECK(ExpInterval::none().empty());

    const auto w = ExpInterval::window(-3, 5);
    CHECK(intersect(all, w) == w);
    CHECK(hull(ExpInterval::none(), w) == w);
    CHECK(hull(ExpInterval::window(-3, 0), ExpInterval::window(2, 5)) == w);

    CHECK(sat_add_lo(ExpInterval::kNegInf, 7) == ExpInterval::kNegInf);
    CHECK(sat_add_hi(ExpInterval::kPosInf, -7) == ExpInterval::kPosInf);
    CHECK(sat_sub(3, ExpInterval::kPosInf) == ExpInterval::kNegInf);
    CHECK(interval_sum(ExpInterval::at_most(2), ExpInterval::window(1, 1)) ==
          ExpInterval::at_most(3));
}

TEST_CASE("series: stored keys stay inside trust, zeros are never stored") {
    ScalarSeries s(kXY, Rational(0));
    s.set_trust(0, ExpInterval::window(-2, 2));
    s.add_coeff({0, 0}, Rational(1));
    s.add_coeff({0, 0}, Rational(-1));
    CHECK(s.coeffs().empty());
    CHECK_THROWS_AS(s.add_coeff({3, 0}, Rational(1)), ContractViolation);

    s.add_coeff({2, 1}, Rational(5));
    s.set_trust(0, ExpInterval::window(-1, 1));  // shrinking prunes
    CHECK(s.coeffs().empty());
}

TEST_CASE("series: addition intersects trust and accumulates") {
    ScalarSeries a(kXY, Rational(0));
    a.set_trust(0, ExpInterval::window(-5, 5));
    a.add_coeff({1, 0}, Rational(2));
    ScalarSeries b(kXY, Rational(0));
    b.set_trust(0, ExpInterval::window(0, 9));
    b.add_coeff({1, 0}, Rational(3));
    b.add_coeff({7, 0}, Rational(1));

    ScalarSeries c = a + b;
    CHECK(c.trust(0) == ExpInterval::window(0, 5));
    CHECK(c.at({1, 0}) == Rational(5));
    CHECK(c.at({7, 0}).is_zero());  // pruned with the trust intersection
}

TEST_CASE("delta: defining coefficients and window boundaries") {
    const auto w = cube_window(2, -6, 6);
    const ScalarSeries d = delta_series(kXY, "x", "y", w);
    CHECK(d.at({0, -1}) == Rational(1));
    CHECK(d.at({-6, 5}) == Rational(1));
    CHECK(d.at({5, -6}) == Rational(1));
    CHECK(d.at({6, -7}).is_zero());  // -7 outside the window, so not materialized
    CHECK(d.coeffs().size() == 12);
    CHECK(d.trust(0) == ExpInterval::window(-6, 6));
    CHECK(d.support(0).is_all());
}

TEST_CASE("expand_power: exact when the window holds the whole expansion") {
    const auto w = cube_window(2, -6, 6);
    const ScalarSeries p = expand_power(kXY, "x", +1, "y", -1, 3, w);
    CHECK(p.exact());
    CHECK(p.at({3, 0}) == Rational(1));
    CHECK(p.at({2, 1}) == Rational(-3));
    CHECK(p.at({1, 2}) == Rational(3));
    CHECK(p.at({0, 3}) == Rational(-1));
    CHECK(p.coeffs().size() == 4);

    const ScalarSeries q = expand_power(kXY, "x", +1, "y", +1, -1, w);
    CHECK_FALSE(q.exact());
    // (x+y)^-1 = x^-1 - x^-2 y + x^-3 y^2 - ...
    CHECK(q.at({-1, 0}) == Rational(1));
    CHECK(q.at({-2, 1}) == Rational(-1));
    CHECK(q.at({-3, 2}) == Rational(1));
    CHECK(q.support(0) == ExpInterval::at_most(-1));
    CHECK(q.support(1) == ExpInterval::at_least(0));
}

TEST_CASE("mul: erosion keeps only coefficients with complete contributions") {
    const auto w = cube_window(2, -4, 4);
    const ScalarSeries geo = expand_power(kXY, "x", +1, "y", -1, -1, w);  // (x-y)^-1
    ScalarSeries factor = monomial(kXY, {1, 0}, Rational(1));
    factor += monomial(kXY, {0, 1}, Rational(-1));  // x - y

    const ScalarSeries prod = mul(factor, geo);  // should be 1 on the trusted region
    ScalarSeries one = monomial(kXY, {0, 0}, Rational(1));
    const auto cmp = compare(prod, one);
    CHECK(cmp.equal);
    CHECK_FALSE(cmp.vacuous);
    // Fences appear only where a factor's support leaves its trust: the
    // window bottom in x (geo reaches down forever) eroded by the factor's
    // x-reach, and the window top in y eroded by the factor's y-floor.
    CHECK(cmp.region[0] == ExpInterval::at_least(-3));
    CHECK(cmp.region[1] == ExpInterval::at_most(4));
    CHECK(prod.at({0, 0}) == Rational(1));
}

TEST_CASE("mul: zero-support factor forces an exactly zero product") {
    ScalarSeries z(kXY, Rational(0));
    z.set_support(0, ExpInterval::none());
    const ScalarSeries d = delta_series(kXY, "x", "y", cube_window(2, -4, 4));
    const ScalarSeries prod = mul(z, d);
    CHECK(prod.exact());
    CHECK(prod.coeffs().empty());
}

TEST_CASE("residue and derivative bookkeeping") {
    const auto w = cube_window(2, -5, 5);
    const ScalarSeries d = delta_series(kXY, "x", "y", w);
    const auto r = residue(d, "x");
    CHECK(r.vars() == std::vector<std::string>{"y"});
    CHECK(r.at({0}) == Rational(1));  // delta has x^-1 y^0
    CHECK(r.coeffs().size() == 1);

    const auto dd = derivative(d, "x");
    CHECK(dd.at({-2, 0}) == Rational(-1));  // d/dx x^-1 = -x^-2
    CHECK(dd.trust(0) == ExpInterval::window(-6, 4));

    ScalarSeries untrusted(kXY, Rational(0));
    untrusted.set_trust(0, ExpInterval::window(0, 3));
    CHECK_THROWS_AS(residue(untrusted, "x"), ContractViolation);
}

TEST_CASE("substitute_zero and negate_var") {
    ScalarSeries p = monomial(kXY, {2, 1}, Rational(4));
    p += monomial(kXY, {0, 3}, Rational(-1));
    const auto at0 = substitute_zero(p, "x");
    CHECK(at0.vars() == std::vector<std::string>{"y"});
    CHECK(at0.at({3}) == Rational(-1));
    CHECK(at0.coeffs().size() == 1);

    const auto neg = negate_var(p, "y");
    CHECK(neg.at({2, 1}) == Rational(-4));
    CHECK(neg.at({0, 3}) == Rational(1));

    const ScalarSeries laurent = expand_power(kXY, "x", +1, "y", +1, -1, cube_window(2, -4, 4));
    CHECK_THROWS_AS(substitute_zero(laurent, "x"), ContractViolation);
}

TEST_CASE("identify_vars folds a polynomial onto the diagonal") {
    ScalarSeries p = monomial(kXY, {2, 1}, Rational(1));
    p += monomial(kXY, {1, 0}, Rational(7));
    const auto diag = identify_vars(p, "x", "y");
    CHECK(diag.vars() == std::vector<std::string>{"y"});
    CHECK(diag.at({3}) == Rational(1));
    CHECK(diag.at({1}) == Rational(7));

    const ScalarSeries d = delta_series(kXY, "x", "y", cube_window(2, -4, 4));
    CHECK_THROWS_AS(identify_vars(d, "x", "y"), ContractViolation);
}

TEST_CASE("taylor_shift: trust bookkeeping on windowed input") {
    const auto w = cube_window(1, -6, 6);
    ScalarSeries f(std::vector<std::string>{"x"}, Rational(0));
    f.set_trust(0, ExpInterval::window(-6, 6));
    f.set_support(0, ExpInterval::all());
    for (long n = -6; n <= 6; ++n) f.add_coeff({n}, Rational(1));

    const auto g = taylor_shift(f, "x", "z", 3);
    CHECK(g.vars() == std::vector<std::string>{"x", "z"});
    CHECK(g.trust(0) == ExpInterval::window(-6, 3));
    CHECK(g.trust(1) == ExpInterval::at_most(3));
    // coefficient of x^a z^b is binom(a+b, b) * f_(a+b)
    CHECK(g.at({1, 2}) == Rational(3));
    CHECK(g.at({-3, 2}) == Rational(1));  // binom(-1, 2) = 1
}

TEST_CASE("comparison: vacuous regions are flagged, not silently equal") {
    ScalarSeries a(kXY, Rational(0));
    a.set_trust(0, ExpInterval::window(0, 1));
    ScalarSeries b(kXY, Rational(0));
    b.set_trust(0, ExpInterval::window(5, 9));
    const auto cmp = compare(a, b);
    CHECK(cmp.vacuous);
    CHECK_FALSE(static_cast<bool>(cmp));
}

TEST_CASE("fault injection: corrupted coefficient yields a located witness") {
    const auto w = cube_window(3, -5, 5);
    ScalarSeries lhs = delta_shift(kXYZ, +1, "x", -1, "y", "z", w);
    const ScalarSeries rhs = delta_shift(kXYZ, +1, "z", +1, "y", "x", w);
    lhs.add_coeff({1, 1, -3}, Rational(1, 7));  // sabotage one coefficient

    const auto cmp = compare(lhs, rhs);
    CHECK_FALSE(cmp.equal);
    CHECK(cmp.witness_key == std::vector<long>{1, 1, -3});
    // clean coefficient is -2; sabotage shifts the lhs to -13/7
    CHECK(cmp.witness.find("lhs=-13/7") != std::string::npos);
    CHECK(cmp.witness.find("rhs=-2") != std::string::npos);
}

TEST_CASE("selftest: full battery passes at order 6") {
    const CheckSet cs = delta_selftest(6);
    for (const auto& c : cs.checks) {
        CAPTURE(c.id);
        CAPTURE(c.witnesses.empty() ? std::string("-") : c.witnesses.front().detail);
        CHECK(c.passed());
        CHECK(c.cases > 0);
    }
    CHECK(cs.passed());
    CHECK(cs.checks.size() == 7);
    CHECK_THROWS_AS(delta_selftest(3), ContractViolation);
}

TEST_CASE("opposite powers of the same binomial multiply to one") {
    const auto w = cube_window(2, -10, 10);
    const ScalarSeries one = monomial(kXY, {0, 0}, Rational(1));
    for (long n = -6; n <= 6; ++n) {
        const ScalarSeries pos = expand_power(kXY, "x", +1, "y", -1, n, w);
        const ScalarSeries neg = expand_power(kXY, "x", +1, "y", -1, -n, w);
        const auto cmp = compare(mul(pos, neg), one);
        CAPTURE(n);
        CAPTURE(cmp.witness);
        CHECK(cmp.equal);
        CHECK_FALSE(cmp.vacuous);
    }
}

TEST_CASE("taylor_shift round trip: substituting zero undoes the shift") {
    const std::vector<std::string> kX{"x"};
    ScalarSeries p = monomial(kX, {2}, Rational(3));
    p += monomial(kX, {1}, Rational(-1));
    p += monomial(kX, {0}, Rational(4));

    const ScalarSeries shifted = taylor_shift(p, "x", "y", 8);
    CHECK(shifted.at({1, 1}) == Rational(6));  // cross term of 3(x+y)^2

    const auto cmp = compare(substitute_zero(shifted, "y"), p);
    CAPTURE(cmp.witness);
    CHECK(cmp.equal);
    CHECK_FALSE(cmp.vacuous);
}
