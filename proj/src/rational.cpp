#include "covertex/rational.hpp"

#include <cctype>
#include <ostream>

#include "covertex/contract.hpp"

namespace covertex {

namespace {

// Optionally signed, nonempty, all decimal digits. No whitespace, no '+'.
bool integer_token(const std::string& s, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && !s.empty() && s[0] == '-') i = 1;
    if (i >= s.size()) return false;
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
}

}  // namespace

Rational::Rational(long num, long den) {
    require(den != 0, "rational with zero denominator");
    v_ = mpq_class(mpz_class(num), mpz_class(den));
    v_.canonicalize();
}

Rational Rational::parse(const std::string& text) {
    const auto slash = text.find('/');
    if (slash == std::string::npos) {
        if (!integer_token(text, true)) contract_fail("bad rational literal: '" + text + "'");
        return Rational(mpq_class(mpz_class(text, 10)));
    }
    const std::string num = text.substr(0, slash);
    const std::string den = text.substr(slash + 1);
    if (!integer_token(num, true) || !integer_token(den, false)) {
        contract_fail("bad rational literal: '" + text + "'");
    }
    mpz_class d(den, 10);
    if (d == 0) contract_fail("zero denominator in rational literal: '" + text + "'");
    mpq_class q(mpz_class(num, 10), d);
    q.canonicalize();
    return Rational(q);
}

std::string Rational::str() const {
    return v_.get_str();
}

long Rational::to_long() const {
    require(is_integer(), "to_long on non-integer rational");
    const mpz_class& n = v_.get_num();
    require(n.fits_slong_p() != 0, "to_long overflow");
    return n.get_si();
}

Rational& Rational::operator/=(const Rational& o) {
    require(!o.is_zero(), "division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::operator-() const {
    Rational r;
    r.v_ = -v_;
    return r;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

}  // namespace covertex
