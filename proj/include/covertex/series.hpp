#pragma once

#include <algorithm>
#include <limits>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "covertex/binomial.hpp"
#include "covertex/contract.hpp"
#include "covertex/rational.hpp"
#include "covertex/tensor.hpp"

namespace covertex {

// ---------------------------------------------------------------------------
// Exponent intervals with +-infinity sentinels and saturating arithmetic.
// ---------------------------------------------------------------------------

struct ExpInterval {
    static constexpr long kNegInf = std::numeric_limits<long>::min() / 4;
    static constexpr long kPosInf = std::numeric_limits<long>::max() / 4;

    long lo = kNegInf;
    long hi = kPosInf;

    static ExpInterval all() { return {}; }
    static ExpInterval window(long lo, long hi) { return {lo, hi}; }
    static ExpInterval at_most(long hi) { return {kNegInf, hi}; }
    static ExpInterval at_least(long lo) { return {lo, kPosInf}; }
    static ExpInterval none() { return {1, 0}; }

    bool empty() const { return lo > hi; }
    bool contains(long e) const { return lo <= e && e <= hi; }
    bool contains(const ExpInterval& o) const {
        return o.empty() || (lo <= o.lo && o.hi <= hi);
    }
    bool is_all() const { return lo <= kNegInf && hi >= kPosInf; }

    friend ExpInterval intersect(const ExpInterval& a, const ExpInterval& b) {
        return {std::max(a.lo, b.lo), std::min(a.hi, b.hi)};
    }
    friend ExpInterval hull(const ExpInterval& a, const ExpInterval& b) {
        if (a.empty()) return b;
        if (b.empty()) return a;
        return {std::min(a.lo, b.lo), std::max(a.hi, b.hi)};
    }

    friend bool operator==(const ExpInterval&, const ExpInterval&) = default;

    std::string str() const {
        std::ostringstream os;
        if (empty()) return "(empty)";
        os << (lo <= kNegInf ? std::string("(-inf") : "[" + std::to_string(lo));
        os << ",";
        os << (hi >= kPosInf ? std::string("inf)") : std::to_string(hi) + "]");
        return os.str();
    }
};

// Saturating sums biased toward the stated direction; mixed infinities must
// be resolved by the caller before reaching these.
inline long sat_add_lo(long a, long b) {
    if (a <= ExpInterval::kNegInf || b <= ExpInterval::kNegInf) return ExpInterval::kNegInf;
    if (a >= ExpInterval::kPosInf || b >= ExpInterval::kPosInf) return ExpInterval::kPosInf;
    return a + b;
}
inline long sat_add_hi(long a, long b) {
    if (a >= ExpInterval::kPosInf || b >= ExpInterval::kPosInf) return ExpInterval::kPosInf;
    if (a <= ExpInterval::kNegInf || b <= ExpInterval::kNegInf) return ExpInterval::kNegInf;
    return a + b;
}
inline long sat_sub(long a, long b) {
    if (a >= ExpInterval::kPosInf || b <= ExpInterval::kNegInf) return ExpInterval::kPosInf;
    if (a <= ExpInterval::kNegInf || b >= ExpInterval::kPosInf) return ExpInterval::kNegInf;
    return a - b;
}

inline ExpInterval interval_sum(const ExpInterval& a, const ExpInterval& b) {
    if (a.empty() || b.empty()) return ExpInterval::none();
    return {sat_add_lo(a.lo, b.lo), sat_add_hi(a.hi, b.hi)};
}

// Coefficient concept glue so Series works over scalars and sparse tensors.
inline bool coeff_zero(const Rational& c) { return c.is_zero(); }
template <class K>
bool coeff_zero(const Sparse<K>& c) { return c.zero(); }
inline std::string coeff_str(const Rational& c) { return c.str(); }
template <class K>
std::string coeff_str(const Sparse<K>& c) { return c.str(); }

// ---------------------------------------------------------------------------
// Series: finitely many stored coefficients plus per-variable bookkeeping.
//
//   support: interval certainly containing every exponent the ideal object
//            uses in that variable (often unbounded)
//   trust:   exponents where stored data is authoritative; inside trust an
//            absent key means the coefficient is exactly zero
//
// A series whose trust is all of Z in every variable is exact. Products
// erode trust at window edges using both factors' supports, which is what
// makes window-truncated delta arithmetic sound: no coefficient is ever
// reported inside a trusted region unless every contribution to it was
// available.
//
// Invariant: every stored key lies inside the trust box, and no stored
// coefficient is zero.
// ---------------------------------------------------------------------------

template <class C>
class Series {
public:
    using Key = std::vector<long>;

    Series(std::vector<std::string> vars, C proto)
        : vars_(std::move(vars)),
          proto_(std::move(proto)),
          trust_(vars_.size(), ExpInterval::all()),
          support_(vars_.size(), ExpInterval::all()) {
        require(!vars_.empty(), "series needs at least one variable");
        require(coeff_zero(proto_), "series prototype coefficient must be zero");
    }

    const std::vector<std::string>& vars() const { return vars_; }
    std::size_t arity() const { return vars_.size(); }

    int var_index(const std::string& v) const {
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            if (vars_[i] == v) return static_cast<int>(i);
        }
        contract_fail("series has no variable '" + v + "'");
    }

    const C& proto() const { return proto_; }

    const ExpInterval& trust(std::size_t vi) const { return trust_.at(vi); }
    const ExpInterval& support(std::size_t vi) const { return support_.at(vi); }
    const std::vector<ExpInterval>& trust_box() const { return trust_; }
    const std::vector<ExpInterval>& support_box() const { return support_; }

    void set_trust(std::size_t vi, ExpInterval w) {
        trust_.at(vi) = w;
        prune_outside_trust();
    }
    void set_support(std::size_t vi, ExpInterval w) { support_.at(vi) = w; }

    bool exact() const {
        return std::all_of(trust_.begin(), trust_.end(),
                           [](const ExpInterval& t) { return t.is_all(); });
    }

    bool trusted(const Key& e) const {
        for (std::size_t i = 0; i < trust_.size(); ++i) {
            if (!trust_[i].contains(e[i])) return false;
        }
        return true;
    }

    const std::map<Key, C>& coeffs() const { return c_; }

    const C& at(const Key& e) const {
        require(e.size() == vars_.size(), "exponent arity mismatch");
        auto it = c_.find(e);
        return it == c_.end() ? proto_ : it->second;
    }

    // Accumulates into the coefficient at e. Contract: e lies in trust.
    void add_coeff(const Key& e, const C& c) {
        require(e.size() == vars_.size(), "exponent arity mismatch");
        require(trusted(e), "coefficient outside trusted region");
        if (coeff_zero(c)) return;
        auto [it, fresh] = c_.try_emplace(e, c);
        if (!fresh) {
            it->second += c;
            if (coeff_zero(it->second)) c_.erase(it);
        }
    }

    Series& operator+=(const Series& o) { return combine(o, false); }
    Series& operator-=(const Series& o) { return combine(o, true); }
    friend Series operator+(Series a, const Series& b) { a += b; return a; }
    friend Series operator-(Series a, const Series& b) { a -= b; return a; }

    Series& negate() {
        for (auto& [k, v] : c_) v *= Rational(-1);
        return *this;
    }

    Series& scale(const Rational& s) {
        if (s.is_zero()) {
            c_.clear();
        } else {
            for (auto& [k, v] : c_) v *= s;
        }
        return *this;
    }

    void prune_outside_trust() {
        for (auto it = c_.begin(); it != c_.end();) {
            it = trusted(it->first) ? std::next(it) : c_.erase(it);
        }
    }

    std::string dump() const {
        std::ostringstream os;
        os << "series vars=[";
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            os << (i ? "," : "") << vars_[i];
        }
        os << "]\n";
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            os << "  " << vars_[i] << ": trust " << trust_[i].str() << ", support "
               << support_[i].str() << "\n";
        }
        for (const auto& [k, v] : c_) {
            os << "  " << key_str(k) << ": " << coeff_str(v) << "\n";
        }
        return os.str();
    }

    std::string key_str(const Key& e) const {
        std::ostringstream os;
        bool printed = false;
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            if (e[i] == 0) continue;
            if (printed) os << " ";
            os << vars_[i] << "^" << e[i];
            printed = true;
        }
        if (!printed) os << "1";
        return os.str();
    }

private:
    Series& combine(const Series& o, bool subtract) {
        require(vars_ == o.vars_, "series variable layout mismatch");
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            trust_[i] = intersect(trust_[i], o.trust_[i]);
            support_[i] = hull(support_[i], o.support_[i]);
        }
        prune_outside_trust();
        for (const auto& [k, v] : o.c_) {
            if (!trusted(k)) continue;
            if (subtract) {
                C neg = v;
                neg *= Rational(-1);
                add_coeff(k, neg);
            } else {
                add_coeff(k, v);
            }
        }
        return *this;
    }

    std::vector<std::string> vars_;
    C proto_;
    std::vector<ExpInterval> trust_;
    std::vector<ExpInterval> support_;
    std::map<Key, C> c_;
};

using ScalarSeries = Series<Rational>;

// ---------------------------------------------------------------------------
// Comparison on the jointly trusted region.
// ---------------------------------------------------------------------------

struct SeriesComparison {
    bool equal = true;
    bool vacuous = false;  // jointly trusted region is empty
    std::vector<ExpInterval> region;
    std::vector<long> witness_key;
    std::string witness;

    explicit operator bool() const { return equal && !vacuous; }
};

template <class C>
SeriesComparison compare(const Series<C>& a, const Series<C>& b) {
    require(a.vars() == b.vars(), "series variable layout mismatch");
    SeriesComparison out;
    out.region.reserve(a.arity());
    bool empty_region = false;
    for (std::size_t i = 0; i < a.arity(); ++i) {
        out.region.push_back(intersect(a.trust(i), b.trust(i)));
        empty_region = empty_region || out.region.back().empty();
    }
    out.vacuous = empty_region;
    if (empty_region) return out;

    auto in_region = [&](const std::vector<long>& e) {
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (!out.region[i].contains(e[i])) return false;
        }
        return true;
    };

    // Union of stored keys, in map order, keeps the first witness stable.
    auto scan = [&](const Series<C>& x, const Series<C>& y) {
        for (const auto& [k, v] : x.coeffs()) {
            if (!in_region(k)) continue;
            if (!(v == y.at(k))) {
                if (out.equal) {
                    out.equal = false;
                    out.witness_key = k;
                    out.witness = x.key_str(k) + ": lhs=" + coeff_str(a.at(k)) +
                                  " rhs=" + coeff_str(b.at(k));
                }
                return;
            }
        }
    };
    scan(a, b);
    if (out.equal) scan(b, a);
    return out;
}

// ---------------------------------------------------------------------------
// Constructors and operations.
// ---------------------------------------------------------------------------

inline std::vector<ExpInterval> cube_window(std::size_t arity, long lo, long hi) {
    return std::vector<ExpInterval>(arity, ExpInterval::window(lo, hi));
}

inline ScalarSeries monomial(const std::vector<std::string>& vars, std::vector<long> e,
                             const Rational& c) {
    ScalarSeries s(vars, Rational(0));
    require(e.size() == vars.size(), "exponent arity mismatch");
    for (std::size_t i = 0; i < vars.size(); ++i) {
        s.set_support(i, ExpInterval::window(e[i], e[i]));
    }
    s.add_coeff(e, c);
    return s;
}

namespace series_detail {

inline void set_spectator_bounds(ScalarSeries& s, const std::vector<std::string>& vars,
                                 std::initializer_list<std::string> active) {
    for (std::size_t i = 0; i < vars.size(); ++i) {
        bool is_active = false;
        for (const auto& a : active) {
            if (vars[i] == a) is_active = true;
        }
        if (!is_active) s.set_support(i, ExpInterval::window(0, 0));
    }
}

}  // namespace series_detail

// (sx*x + sy*y)^n expanded in nonnegative powers of y, materialized inside
// the window. Exact (fully trusted) when n >= 0 and the window contains the
// whole expansion; otherwise trusted exactly on the window.
ScalarSeries expand_power(const std::vector<std::string>& vars, const std::string& x, int sx,
                          const std::string& y, int sy, long n,
                          const std::vector<ExpInterval>& window);

// delta(x, y) = sum_n x^n y^(-n-1), materialized inside the window.
ScalarSeries delta_series(const std::vector<std::string>& vars, const std::string& x,
                          const std::string& y, const std::vector<ExpInterval>& window);

// delta(s1*v1 + s2*v2, target), first argument expanded in nonnegative
// powers of v2, materialized inside the window.
ScalarSeries delta_shift(const std::vector<std::string>& vars, int s1, const std::string& v1,
                         int s2, const std::string& v2, const std::string& target,
                         const std::vector<ExpInterval>& window);

template <class C>
Series<C> mul(const ScalarSeries& a, const Series<C>& b) {
    require(a.vars() == b.vars(), "series variable layout mismatch");
    Series<C> out(b.vars(), b.proto());

    // A factor that is certainly zero makes the product exactly zero.
    for (std::size_t i = 0; i < a.arity(); ++i) {
        if (a.support(i).empty() || b.support(i).empty()) {
            for (std::size_t v = 0; v < a.arity(); ++v) {
                out.set_support(v, ExpInterval::none());
            }
            return out;
        }
    }

    for (std::size_t i = 0; i < a.arity(); ++i) {
        const ExpInterval &ta = a.trust(i), &sa = a.support(i);
        const ExpInterval &tb = b.trust(i), &sb = b.support(i);
        // Trusted result exponents: every ideal contribution e = ea + eb has
        // ea inside a's trust and eb inside b's trust. A fence appears on a
        // side only where that factor's support sticks out of its trust.
        long lo = ExpInterval::kNegInf, hi = ExpInterval::kPosInf;
        if (sa.lo < ta.lo) {
            lo = std::max(lo, sat_add_hi(ta.lo, sb.hi));
        }
        if (sb.lo < tb.lo) {
            lo = std::max(lo, sat_add_hi(tb.lo, sa.hi));
        }
        if (sa.hi > ta.hi) {
            hi = std::min(hi, sat_add_lo(ta.hi, sb.lo));
        }
        if (sb.hi > tb.hi) {
            hi = std::min(hi, sat_add_lo(tb.hi, sa.lo));
        }
        out.set_trust(i, ExpInterval{lo, hi});
        out.set_support(i, interval_sum(sa, sb));
    }

    std::vector<long> key(a.arity());
    for (const auto& [ea, ca] : a.coeffs()) {
        for (const auto& [eb, cb] : b.coeffs()) {
            for (std::size_t i = 0; i < key.size(); ++i) key[i] = ea[i] + eb[i];
            if (!out.trusted(key)) continue;
            C term = cb;
            term *= ca;
            out.add_coeff(key, term);
        }
    }
    return out;
}

// d/dv. Exponents shift down by one; trust and support shift with them.
template <class C>
Series<C> derivative(const Series<C>& s, const std::string& v) {
    const int vi = s.var_index(v);
    Series<C> out(s.vars(), s.proto());
    for (std::size_t i = 0; i < s.arity(); ++i) {
        const ExpInterval &t = s.trust(i), &sp = s.support(i);
        if (static_cast<int>(i) == vi) {
            out.set_trust(i, ExpInterval{sat_sub(t.lo, 1), sat_sub(t.hi, 1)});
            out.set_support(i, ExpInterval{sat_sub(sp.lo, 1), sat_sub(sp.hi, 1)});
        } else {
            out.set_trust(i, t);
            out.set_support(i, sp);
        }
    }
    for (const auto& [e, c] : s.coeffs()) {
        if (e[vi] == 0) continue;
        auto key = e;
        key[vi] -= 1;
        C term = c;
        term *= Rational(e[vi]);
        out.add_coeff(key, term);
    }
    return out;
}

namespace series_detail {

template <class C>
Series<C> drop_var(const Series<C>& s, int vi) {
    std::vector<std::string> vars;
    for (std::size_t i = 0; i < s.arity(); ++i) {
        if (static_cast<int>(i) != vi) vars.push_back(s.vars()[i]);
    }
    require(!vars.empty(), "cannot drop the last series variable");
    return Series<C>(std::move(vars), s.proto());
}

template <class C>
void copy_bounds_without(const Series<C>& s, int vi, Series<C>& out) {
    std::size_t o = 0;
    for (std::size_t i = 0; i < s.arity(); ++i) {
        if (static_cast<int>(i) == vi) continue;
        out.set_trust(o, s.trust(i));
        out.set_support(o, s.support(i));
        ++o;
    }
}

inline std::vector<long> key_without(const std::vector<long>& e, int vi) {
    std::vector<long> k;
    k.reserve(e.size() - 1);
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (static_cast<int>(i) != vi) k.push_back(e[i]);
    }
    return k;
}

}  // namespace series_detail

// Coefficient of v^(-1), as a series in the remaining variables.
// Contract: -1 is a trusted exponent of v.
template <class C>
Series<C> residue(const Series<C>& s, const std::string& v) {
    const int vi = s.var_index(v);
    require(s.trust(vi).contains(-1), "residue: exponent -1 of the residue variable is untrusted");
    Series<C> out = series_detail::drop_var(s, vi);
    series_detail::copy_bounds_without(s, vi, out);
    for (const auto& [e, c] : s.coeffs()) {
        if (e[vi] != -1) continue;
        out.add_coeff(series_detail::key_without(e, vi), c);
    }
    return out;
}

// v -> 0. Contract: the object is a power series in v (support bounded below
// by 0) and exponent 0 of v is trusted.
template <class C>
Series<C> substitute_zero(const Series<C>& s, const std::string& v) {
    const int vi = s.var_index(v);
    require(s.support(vi).lo >= 0, "substitute_zero: object has negative powers of v");
    require(s.trust(vi).contains(0), "substitute_zero: exponent 0 of v is untrusted");
    Series<C> out = series_detail::drop_var(s, vi);
    series_detail::copy_bounds_without(s, vi, out);
    for (const auto& [e, c] : s.coeffs()) {
        if (e[vi] != 0) continue;
        out.add_coeff(series_detail::key_without(e, vi), c);
    }
    return out;
}

// v -> -v: flips the sign of every odd-exponent coefficient.
template <class C>
Series<C> negate_var(Series<C> s, const std::string& v) {
    const int vi = s.var_index(v);
    Series<C> out(s.vars(), s.proto());
    for (std::size_t i = 0; i < s.arity(); ++i) {
        out.set_trust(i, s.trust(i));
        out.set_support(i, s.support(i));
    }
    for (const auto& [e, c] : s.coeffs()) {
        C term = c;
        if (e[vi] % 2 != 0) term *= Rational(-1);
        out.add_coeff(e, term);
    }
    return out;
}

// Identify `from` with `to`: x^a to^b becomes to^(a+b). Contract: exact input
// (the polynomial case, which is all the residue-limit lemma needs).
template <class C>
Series<C> identify_vars(const Series<C>& s, const std::string& from, const std::string& to) {
    const int fi = s.var_index(from);
    const int ti = s.var_index(to);
    require(fi != ti, "identify_vars needs distinct variables");
    require(s.exact(), "identify_vars requires an exact series");
    Series<C> out = series_detail::drop_var(s, fi);
    const int to_out = out.var_index(to);
    std::size_t o = 0;
    for (std::size_t i = 0; i < s.arity(); ++i) {
        if (static_cast<int>(i) == fi) continue;
        if (static_cast<int>(i) == ti) {
            out.set_support(o, interval_sum(s.support(fi), s.support(ti)));
        } else {
            out.set_support(o, s.support(i));
        }
        ++o;
    }
    for (const auto& [e, c] : s.coeffs()) {
        auto key = series_detail::key_without(e, fi);
        key[to_out] += e[fi];
        out.add_coeff(key, c);
    }
    return out;
}

// v -> v + by for a fresh variable `by`; negative powers of v expand as
// binomial series in `by` up to by_order. Exact inputs stay exact in v.
template <class C>
Series<C> taylor_shift(const Series<C>& s, const std::string& v, const std::string& by,
                       long by_order) {
    require(by_order >= 0, "taylor_shift: by_order must be >= 0");
    for (const auto& name : s.vars()) {
        require(name != by, "taylor_shift: target variable must be fresh");
    }
    const int vi = s.var_index(v);

    std::vector<std::string> vars = s.vars();
    vars.push_back(by);
    Series<C> out(std::move(vars), s.proto());

    const std::size_t bi = s.arity();  // index of `by` in the output layout
    for (std::size_t i = 0; i < s.arity(); ++i) {
        const ExpInterval &t = s.trust(i), &sp = s.support(i);
        if (static_cast<int>(i) == vi) {
            if (t.is_all()) {
                out.set_trust(i, ExpInterval::all());
            } else {
                out.set_trust(i, ExpInterval{t.lo, sat_sub(t.hi, by_order)});
            }
            out.set_support(i, ExpInterval{sat_sub(sp.lo, by_order), sp.hi});
        } else {
            out.set_trust(i, t);
            out.set_support(i, sp);
        }
    }
    out.set_trust(bi, ExpInterval::at_most(by_order));
    const bool laurent = s.support(vi).lo < 0;
    out.set_support(bi, laurent ? ExpInterval::at_least(0)
                                : ExpInterval::window(0, std::max(0L, s.support(vi).hi)));

    std::vector<long> key(out.arity(), 0);
    for (const auto& [e, c] : s.coeffs()) {
        const long n = e[vi];
        const long kmax = n >= 0 ? std::min(n, by_order) : by_order;
        for (long k = 0; k <= kmax; ++k) {
            const Rational b = binom(n, k);
            if (b.is_zero()) continue;
            for (std::size_t i = 0; i < e.size(); ++i) key[i] = e[i];
            key[vi] = n - k;
            key[bi] = k;
            if (!out.trusted(key)) continue;
            C term = c;
            term *= b;
            out.add_coeff(key, term);
        }
    }
    return out;
}

}  // namespace covertex
