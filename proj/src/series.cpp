#include "covertex/series.hpp"

namespace covertex {

namespace {

Rational sign_power(int s, long e) {
    // s in {+1, -1}; s^e depends only on parity for s = -1.
    if (s == 1) return Rational(1);
    return (e % 2 == 0) ? Rational(1) : Rational(-1);
}

long clamp_lo(long a, long b) { return std::max(a, b); }
long clamp_hi(long a, long b) { return std::min(a, b); }

}  // namespace

ScalarSeries expand_power(const std::vector<std::string>& vars, const std::string& x, int sx,
                          const std::string& y, int sy, long n,
                          const std::vector<ExpInterval>& window) {
    require(sx == 1 || sx == -1, "expand_power: sx must be +-1");
    require(sy == 1 || sy == -1, "expand_power: sy must be +-1");
    require(window.size() == vars.size(), "expand_power: window arity mismatch");
    ScalarSeries out(vars, Rational(0));
    const int xi = out.var_index(x);
    const int yi = out.var_index(y);
    require(xi != yi, "expand_power: distinct variables required");
    const ExpInterval& wx = window[xi];
    const ExpInterval& wy = window[yi];

    const bool whole = n >= 0 && wx.contains(ExpInterval::window(0, n)) &&
                       wy.contains(ExpInterval::window(0, n));
    if (!whole) {
        out.set_trust(xi, wx);
        out.set_trust(yi, wy);
    }
    if (n >= 0) {
        out.set_support(xi, ExpInterval::window(0, n));
        out.set_support(yi, ExpInterval::window(0, n));
    } else {
        out.set_support(xi, ExpInterval::at_most(n));
        out.set_support(yi, ExpInterval::at_least(0));
    }
    series_detail::set_spectator_bounds(out, vars, {x, y});

    long klo = 0, khi = n >= 0 ? n : ExpInterval::kPosInf;
    klo = clamp_lo(klo, wy.lo);
    khi = clamp_hi(khi, wy.hi);
    // x exponent n-k inside wx
    klo = clamp_lo(klo, sat_sub(n, wx.hi));
    khi = clamp_hi(khi, sat_sub(n, wx.lo));

    std::vector<long> key(vars.size(), 0);
    for (long k = klo; k <= khi; ++k) {
        const Rational b = binom(n, k);
        if (b.is_zero()) continue;
        key[xi] = n - k;
        key[yi] = k;
        out.add_coeff(key, b * sign_power(sx, n - k) * sign_power(sy, k));
    }
    return out;
}

ScalarSeries delta_series(const std::vector<std::string>& vars, const std::string& x,
                          const std::string& y, const std::vector<ExpInterval>& window) {
    require(window.size() == vars.size(), "delta_series: window arity mismatch");
    ScalarSeries out(vars, Rational(0));
    const int xi = out.var_index(x);
    const int yi = out.var_index(y);
    require(xi != yi, "delta_series: distinct variables required");
    const ExpInterval& wx = window[xi];
    const ExpInterval& wy = window[yi];
    require(!wx.empty() && !wy.empty(), "delta_series: empty window");

    out.set_trust(xi, wx);
    out.set_trust(yi, wy);
    out.set_support(xi, ExpInterval::all());
    out.set_support(yi, ExpInterval::all());
    series_detail::set_spectator_bounds(out, vars, {x, y});

    const long nlo = clamp_lo(wx.lo, sat_sub(-1, wy.hi));
    const long nhi = clamp_hi(wx.hi, sat_sub(-1, wy.lo));
    std::vector<long> key(vars.size(), 0);
    for (long n = nlo; n <= nhi; ++n) {
        key[xi] = n;
        key[yi] = -n - 1;
        out.add_coeff(key, Rational(1));
    }
    return out;
}

ScalarSeries delta_shift(const std::vector<std::string>& vars, int s1, const std::string& v1,
                         int s2, const std::string& v2, const std::string& target,
                         const std::vector<ExpInterval>& window) {
    require(s1 == 1 || s1 == -1, "delta_shift: s1 must be +-1");
    require(s2 == 1 || s2 == -1, "delta_shift: s2 must be +-1");
    require(window.size() == vars.size(), "delta_shift: window arity mismatch");
    ScalarSeries out(vars, Rational(0));
    const int i1 = out.var_index(v1);
    const int i2 = out.var_index(v2);
    const int it = out.var_index(target);
    require(i1 != i2 && i1 != it && i2 != it, "delta_shift: distinct variables required");
    const ExpInterval& w1 = window[i1];
    const ExpInterval& w2 = window[i2];
    const ExpInterval& wt = window[it];
    require(!w1.empty() && !w2.empty() && !wt.empty(), "delta_shift: empty window");

    out.set_trust(i1, w1);
    out.set_trust(i2, w2);
    out.set_trust(it, wt);
    out.set_support(i1, ExpInterval::all());
    out.set_support(i2, ExpInterval::at_least(0));
    out.set_support(it, ExpInterval::all());
    series_detail::set_spectator_bounds(out, vars, {v1, v2, target});

    std::vector<long> key(vars.size(), 0);
    for (long n = sat_sub(-1, wt.hi); n <= sat_sub(-1, wt.lo); ++n) {
        long klo = clamp_lo(0L, w2.lo);
        long khi = n >= 0 ? n : ExpInterval::kPosInf;
        klo = clamp_lo(klo, sat_sub(n, w1.hi));
        khi = clamp_hi(khi, sat_sub(n, w1.lo));
        khi = clamp_hi(khi, w2.hi);
        for (long k = klo; k <= khi; ++k) {
            const Rational b = binom(n, k);
            if (b.is_zero()) continue;
            key[i1] = n - k;
            key[i2] = k;
            key[it] = -n - 1;
            out.add_coeff(key, b * sign_power(s1, n - k) * sign_power(s2, k));
        }
    }
    return out;
}

}  // namespace covertex
