#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

namespace covertex {

// Exact rational scalar. Invariants: lowest terms, positive denominator.
// This is the only header that exposes GMP types; everything downstream
// treats Rational as an opaque exact field element.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}  // NOLINT: implicit by design, integers embed
    Rational(long num, long den);

    // Accepts "a" or "a/b" with a an optionally signed decimal integer and
    // b an unsigned nonzero decimal integer. Reduces to canonical form.
    static Rational parse(const std::string& text);

    // Canonical form: "a" when the value is an integer, else "a/b", b > 1.
    std::string str() const;

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }

    // Integer value as long. Contract: is_integer() and fits.
    long to_long() const;

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    Rational operator-() const;

    friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
    friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
    friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
    friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

    // Escape hatch for the binomial kernel; not part of the public contract.
    explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }
    const mpq_class& raw() const { return v_; }

private:
    mpq_class v_;
};

}  // namespace covertex
