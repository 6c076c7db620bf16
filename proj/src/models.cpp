#include "covertex/models.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

#include "covertex/binomial.hpp"

namespace covertex {

VertexCoalgebra trivial_coalgebra() {
    VertexCoalgebra V = make_coalgebra("trivial", 1);
    V.counit.set(0, Rational(1));
    V.family.add_term(-1, 0, Idx2{0, 0}, Rational(1));
    return V;
}

VertexCoalgebra dual_differential(long m) {
    require(m >= 1, "dual_differential needs m >= 1");
    std::ostringstream name;
    name << "dual-differential(m=" << m << ")";
    VertexCoalgebra V = make_coalgebra(name.str(), static_cast<int>(m));
    V.counit.set(0, Rational(1));
    for (long n = -m; n <= -1; ++n) {
        const long k = -n - 1;
        for (long s = 0; s < m; ++s) {
            const long total = s + n + 1;
            for (long j = std::max(0L, total - (m - 1)); j <= std::min(m - 1, total); ++j) {
                const long l = total - j;
                V.family.add_term(n, static_cast<int>(s),
                                  Idx2{static_cast<int>(j), static_cast<int>(l)},
                                  binom(j + k - 1, k));
            }
        }
    }
    return V;
}

namespace {

// Coefficient vectors for C[t]/(t^m); index = degree.
using Poly = std::vector<Rational>;

// D = t^2 d/dt, truncated at degree m.
Poly derive(const Poly& a) {
    Poly out(a.size());
    for (std::size_t j = 0; j + 1 < a.size(); ++j) {
        out[j + 1] = Rational(static_cast<long>(j)) * a[j];
    }
    return out;
}

Poly multiply(const Poly& a, const Poly& b) {
    Poly out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; i + j < b.size(); ++j) {
            out[i + j] += a[i] * b[j];
        }
    }
    return out;
}

}  // namespace

VertexCoalgebra dual_differential_from_pairing(long m) {
    require(m >= 1, "dual_differential_from_pairing needs m >= 1");
    std::ostringstream name;
    name << "dual-differential(m=" << m << ")/pairing";
    VertexCoalgebra V = make_coalgebra(name.str(), static_cast<int>(m));
    V.counit.set(0, Rational(1));
    // Divided derivative powers of every monomial, D^k(t^j)/k!. Degrees climb
    // by one per application, so k beyond m-1 is identically zero.
    std::vector<std::vector<Poly>> divided(static_cast<std::size_t>(m));
    for (long j = 0; j < m; ++j) {
        Poly base(static_cast<std::size_t>(m));
        base[static_cast<std::size_t>(j)] = Rational(1);
        auto& ladder = divided[static_cast<std::size_t>(j)];
        ladder.push_back(base);
        Rational factorial(1);
        Poly power = base;
        for (long k = 1; k < m; ++k) {
            power = derive(power);
            factorial *= Rational(k);
            Poly scaled = power;
            for (auto& c : scaled) c /= factorial;
            ladder.push_back(scaled);
        }
    }
    for (long n = -m; n <= -1; ++n) {
        const long k = -n - 1;
        if (k >= m) continue;
        for (long j = 0; j < m; ++j) {
            for (long l = 0; l < m; ++l) {
                Poly rb(static_cast<std::size_t>(m));
                rb[static_cast<std::size_t>(l)] = Rational(1);
                Poly prod = multiply(divided[static_cast<std::size_t>(j)]
                                            [static_cast<std::size_t>(k)],
                                     rb);
                for (long s = 0; s < m; ++s) {
                    V.family.add_term(n, static_cast<int>(s),
                                      Idx2{static_cast<int>(j), static_cast<int>(l)},
                                      prod[static_cast<std::size_t>(s)]);
                }
            }
        }
    }
    return V;
}

VertexCoalgebra mutate(VertexCoalgebra V, const MutationSpec& spec) {
    require(!spec.perturbation.is_zero(), "mutation must change a coefficient");
    std::ostringstream suffix;
    suffix << "/mutant(n=" << spec.n << ",basis=" << spec.basis << ",target=e"
           << spec.target.a << "(x)e" << spec.target.b << ",add=" << spec.perturbation.str()
           << ")";
    V.name += suffix.str();
    V.family.add_term(spec.n, spec.basis, spec.target, spec.perturbation);
    return V;
}

}  // namespace covertex
