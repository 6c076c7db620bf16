#include "covertex/binomial.hpp"

#include <gmpxx.h>

#include "covertex/contract.hpp"

namespace covertex {

Rational binom(long n, long k) {
    require(k >= 0, "binom: lower index must be >= 0");
    // Falling factorial with stepwise exact division: after step i the
    // accumulator equals C(n, i+1), so dividing by i+1 is always exact.
    mpz_class acc = 1;
    for (long i = 0; i < k; ++i) {
        acc *= n - i;
        if (acc == 0) return Rational(0);
        mpz_divexact_ui(acc.get_mpz_t(), acc.get_mpz_t(), static_cast<unsigned long>(i + 1));
    }
    return Rational(mpq_class(acc));
}

}  // namespace covertex
