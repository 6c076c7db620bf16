#include "covertex/selftest.hpp"

#include <sstream>

#include "covertex/binomial.hpp"
#include "covertex/contract.hpp"

namespace covertex {

namespace {

std::string region_str(const std::vector<ExpInterval>& region,
                       const std::vector<std::string>& vars) {
    std::ostringstream os;
    for (std::size_t i = 0; i < region.size(); ++i) {
        os << (i ? ", " : "") << vars[i] << " in " << region[i].str();
    }
    return os.str();
}

void record_comparison(Check& check, const std::string& location, const SeriesComparison& cmp,
                       const std::vector<std::string>& vars) {
    check.count_case();
    if (cmp.vacuous) {
        check.fail_case(location, "jointly trusted region is empty");
        return;
    }
    if (!cmp.equal) {
        check.fail_case(location,
                        cmp.witness + " (region " + region_str(cmp.region, vars) + ")");
    }
}

Check check_delta_coefficients(long N) {
    Check c;
    c.id = "delta-coefficients";
    const std::vector<std::string> vars{"x", "y"};
    const auto w = cube_window(2, -N, N);
    const ScalarSeries d = delta_series(vars, "x", "y", w);
    for (long n = -N; n <= N; ++n) {
        const long ye = -n - 1;
        if (ye < -N || ye > N) continue;
        c.count_case();
        if (!(d.at({n, ye}) == Rational(1))) {
            c.fail_case("n=" + std::to_string(n), "diagonal coefficient is not 1");
        }
    }
    c.count_case();
    if (d.coeffs().size() != static_cast<std::size_t>(2 * N)) {
        c.fail_case("term-count", "expected exactly " + std::to_string(2 * N) + " stored terms, got " +
                                      std::to_string(d.coeffs().size()));
    }
    for (const auto& [k, v] : d.coeffs()) {
        c.count_case();
        if (k[1] != -k[0] - 1 || !(v == Rational(1))) {
            c.fail_case(d.key_str(k), "off-diagonal coefficient stored");
        }
    }
    return c;
}

Check check_shift_symmetry(long N) {
    Check c;
    c.id = "shift-symmetry";
    const std::vector<std::string> vars{"x", "y", "z"};
    const auto w = cube_window(3, -N, N);
    const ScalarSeries lhs = delta_shift(vars, +1, "x", -1, "y", "z", w);
    const ScalarSeries rhs = delta_shift(vars, +1, "z", +1, "y", "x", w);
    record_comparison(c, "window order " + std::to_string(N), compare(lhs, rhs), vars);
    return c;
}

Check check_three_term(long N) {
    Check c;
    c.id = "three-term";
    const std::vector<std::string> vars{"x", "y", "z"};
    const auto w = cube_window(3, -N, N);
    ScalarSeries lhs = delta_shift(vars, +1, "x", -1, "y", "z", w);
    lhs -= delta_shift(vars, -1, "y", +1, "x", "z", w);
    const ScalarSeries rhs = delta_shift(vars, +1, "x", -1, "z", "y", w);
    record_comparison(c, "window order " + std::to_string(N), compare(lhs, rhs), vars);
    return c;
}

// Monomial battery plus one mixed polynomial; degrees stay below the window
// so the eroded trust still contains a usable region.
std::vector<std::pair<std::string, ScalarSeries>> polynomial_battery(
    const std::vector<std::string>& vars) {
    std::vector<std::pair<std::string, ScalarSeries>> out;
    for (long a = 0; a <= 3; ++a) {
        for (long b = 0; b <= 3; ++b) {
            std::ostringstream name;
            name << "x^" << a << " y^" << b;
            out.emplace_back(name.str(), monomial(vars, {a, b}, Rational(1)));
        }
    }
    ScalarSeries mixed = monomial(vars, {2, 0}, Rational(3));
    mixed += monomial(vars, {1, 1}, Rational(-2));
    mixed += monomial(vars, {0, 0}, Rational(1, 2));
    out.emplace_back("3x^2 - 2xy + 1/2", std::move(mixed));
    return out;
}

Check check_residue_limit(long N) {
    Check c;
    c.id = "residue-limit";
    const std::vector<std::string> vars{"x", "y"};
    const auto w = cube_window(2, -N, N);
    const ScalarSeries d = delta_series(vars, "x", "y", w);
    for (auto& [name, poly] : polynomial_battery(vars)) {
        const ScalarSeries prod = mul(poly, d);
        const Series<Rational> lhs = residue(prod, "x");
        const Series<Rational> rhs = identify_vars(poly, "x", "y");
        record_comparison(c, name, compare(lhs, rhs), {"y"});
    }
    return c;
}

Check check_derivative_residue(long N) {
    Check c;
    c.id = "derivative-residue";
    const std::vector<std::string> vars{"x", "y"};
    const auto w = cube_window(2, -N, N);
    const ScalarSeries d = delta_series(vars, "x", "y", w);
    for (auto& [name, poly] : polynomial_battery(vars)) {
        const ScalarSeries der = derivative(mul(poly, d), "x");
        const Series<Rational> lhs = residue(der, "x");
        Series<Rational> zero({"y"}, Rational(0));
        zero.set_support(0, ExpInterval::none());
        record_comparison(c, name, compare(lhs, zero), {"y"});
    }
    return c;
}

Check check_product_erosion(long N) {
    Check c;
    c.id = "product-erosion";
    const std::vector<std::string> vars{"x", "y"};
    const auto w = cube_window(2, -N, N);
    ScalarSeries step = monomial(vars, {1, 0}, Rational(1));
    step += monomial(vars, {0, 1}, Rational(1));
    for (long n : {-N, -3L, -1L, 0L, 1L, 2L}) {
        const ScalarSeries a = expand_power(vars, "x", +1, "y", +1, n, w);
        const ScalarSeries lhs = mul(step, a);
        const ScalarSeries rhs = expand_power(vars, "x", +1, "y", +1, n + 1, w);
        std::ostringstream loc;
        loc << "n=" << n;
        const auto cmp = compare(lhs, rhs);
        record_comparison(c, loc.str(), cmp, vars);
        if (n < -1 && !cmp.vacuous) {
            // Each window edge erodes by exactly the polynomial factor's
            // reach on that side: x loses one row at the bottom (the factor
            // reaches x^1), y loses nothing below (the factor reaches y^0)
            // and both lose nothing where the expansion is bounded anyway.
            c.count_case();
            const ExpInterval expect_x{-N + 1, N};
            const ExpInterval expect_y{-N, N};
            if (!(cmp.region[0] == expect_x && cmp.region[1] == expect_y)) {
                c.fail_case(loc.str() + " region",
                            "unexpected eroded region: " + region_str(cmp.region, vars));
            }
        }
    }
    return c;
}

Check check_shift_vs_expansion(long N) {
    Check c;
    c.id = "shift-vs-expansion";
    const std::vector<std::string> xz{"x", "z"};
    for (long n : {-3L, -2L, -1L, 0L, 1L, 3L}) {
        const ScalarSeries f = monomial({"x"}, {n}, Rational(1));
        const Series<Rational> shifted = taylor_shift(f, "x", "z", N);
        std::vector<ExpInterval> w(2);
        w[0] = ExpInterval::window(n - N, std::max(n, 0L));
        w[1] = ExpInterval::window(0, N);
        const ScalarSeries direct = expand_power(xz, "x", +1, "z", +1, n, w);
        std::ostringstream loc;
        loc << "n=" << n;
        record_comparison(c, loc.str(), compare(shifted, direct), xz);
    }
    return c;
}

}  // namespace

CheckSet delta_selftest(long order) {
    require(order >= 4, "delta_selftest: order must be >= 4");
    CheckSet out;
    out.subject = "delta-calculus order " + std::to_string(order);
    out.checks.push_back(check_delta_coefficients(order));
    out.checks.push_back(check_shift_symmetry(order));
    out.checks.push_back(check_three_term(order));
    out.checks.push_back(check_residue_limit(order));
    out.checks.push_back(check_derivative_residue(order));
    out.checks.push_back(check_product_erosion(order));
    out.checks.push_back(check_shift_vs_expansion(order));
    return out;
}

CheckSet binomial_selftest(long bound) {
    require(bound >= 1, "binomial_selftest: bound must be >= 1");
    CheckSet out;
    out.subject = "binomial-identities bound " + std::to_string(bound);

    Check pascal{"pascal", 0, 0, {}};
    Check absorption{"absorption", 0, 0, {}};
    Check negation{"negation", 0, 0, {}};
    for (long n = -bound; n <= bound; ++n) {
        for (long k = 0; k <= bound; ++k) {
            const std::string at = "n=" + std::to_string(n) + " k=" + std::to_string(k);
            const Rational c = binom(n, k);

            negation.count_case();
            const Rational sign = (k % 2 == 0) ? Rational(1) : Rational(-1);
            if (c != sign * binom(k - n - 1, k)) {
                negation.fail_case(at, "upper negation disagrees");
            }
            if (k >= 1) {
                pascal.count_case();
                if (c != binom(n - 1, k) + binom(n - 1, k - 1)) {
                    pascal.fail_case(at, "Pascal recurrence disagrees");
                }
                absorption.count_case();
                if (Rational(k) * c != Rational(n) * binom(n - 1, k - 1)) {
                    absorption.fail_case(at, "absorption identity disagrees");
                }
            }
        }
    }
    out.checks.push_back(std::move(pascal));
    out.checks.push_back(std::move(absorption));
    out.checks.push_back(std::move(negation));
    return out;
}

}  // namespace covertex
