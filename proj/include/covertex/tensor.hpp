#pragma once

#include <compare>
#include <map>
#include <sstream>
#include <string>

#include "covertex/contract.hpp"
#include "covertex/rational.hpp"

namespace covertex {

struct Idx2 {
    int a = 0, b = 0;
    friend auto operator<=>(const Idx2&, const Idx2&) = default;
};

struct Idx3 {
    int a = 0, b = 0, c = 0;
    friend auto operator<=>(const Idx3&, const Idx3&) = default;
};

namespace detail {

inline bool key_in_range(int k, int dim) { return 0 <= k && k < dim; }
inline bool key_in_range(Idx2 k, int dim) {
    return key_in_range(k.a, dim) && key_in_range(k.b, dim);
}
inline bool key_in_range(Idx3 k, int dim) {
    return key_in_range(k.a, dim) && key_in_range(k.b, dim) && key_in_range(k.c, dim);
}

inline std::string key_str(int k) { return "e" + std::to_string(k); }
inline std::string key_str(Idx2 k) { return key_str(k.a) + "(x)" + key_str(k.b); }
inline std::string key_str(Idx3 k) {
    return key_str(k.a) + "(x)" + key_str(k.b) + "(x)" + key_str(k.c);
}

}  // namespace detail

// Sparse exact tensor over a fixed basis 0..dim-1. Invariant: no stored
// zero coefficients, so equality is plain map equality.
template <class K>
class Sparse {
public:
    Sparse() = default;
    explicit Sparse(int dim) : dim_(dim) { require(dim >= 0, "tensor dim must be >= 0"); }

    int dim() const { return dim_; }
    bool zero() const { return c_.empty(); }
    std::size_t terms() const { return c_.size(); }
    const std::map<K, Rational>& entries() const { return c_; }

    const Rational& at(const K& k) const {
        require(detail::key_in_range(k, dim_), "tensor index out of range");
        auto it = c_.find(k);
        return it == c_.end() ? zero_scalar() : it->second;
    }

    void add(const K& k, const Rational& v) {
        require(detail::key_in_range(k, dim_), "tensor index out of range");
        if (v.is_zero()) return;
        auto [it, fresh] = c_.try_emplace(k, v);
        if (!fresh) {
            it->second += v;
            if (it->second.is_zero()) c_.erase(it);
        }
    }

    void set(const K& k, const Rational& v) {
        require(detail::key_in_range(k, dim_), "tensor index out of range");
        if (v.is_zero()) {
            c_.erase(k);
        } else {
            c_.insert_or_assign(k, v);
        }
    }

    Sparse& operator+=(const Sparse& o) {
        require(dim_ == o.dim_, "tensor dim mismatch");
        for (const auto& [k, v] : o.c_) add(k, v);
        return *this;
    }
    Sparse& operator-=(const Sparse& o) {
        require(dim_ == o.dim_, "tensor dim mismatch");
        for (const auto& [k, v] : o.c_) add(k, -v);
        return *this;
    }
    Sparse& operator*=(const Rational& s) {
        if (s.is_zero()) {
            c_.clear();
        } else {
            for (auto& [k, v] : c_) v *= s;
        }
        return *this;
    }

    friend Sparse operator+(Sparse a, const Sparse& b) { a += b; return a; }
    friend Sparse operator-(Sparse a, const Sparse& b) { a -= b; return a; }
    friend Sparse operator*(const Rational& s, Sparse t) { t *= s; return t; }

    friend bool operator==(const Sparse&, const Sparse&) = default;

    std::string str() const {
        if (c_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [k, v] : c_) {
            if (!first) os << " + ";
            first = false;
            if (v.is_one()) {
                os << detail::key_str(k);
            } else {
                os << v.str() << "*" << detail::key_str(k);
            }
        }
        return os.str();
    }

private:
    static const Rational& zero_scalar() {
        static const Rational z;
        return z;
    }

    int dim_ = 0;
    std::map<K, Rational> c_;
};

using Vector = Sparse<int>;
using Tensor2 = Sparse<Idx2>;
using Tensor3 = Sparse<Idx3>;

inline Vector basis_vector(int dim, int i) {
    Vector v(dim);
    v.set(i, Rational(1));
    return v;
}

// Swap of the first two slots (the flip on V(x)V, and flip(x)Id on triples).
inline Tensor2 transpose12(const Tensor2& t) {
    Tensor2 out(t.dim());
    for (const auto& [k, v] : t.entries()) out.add(Idx2{k.b, k.a}, v);
    return out;
}

inline Tensor3 transpose12(const Tensor3& t) {
    Tensor3 out(t.dim());
    for (const auto& [k, v] : t.entries()) out.add(Idx3{k.b, k.a, k.c}, v);
    return out;
}

inline Tensor2 tensor(const Vector& u, const Vector& v) {
    require(u.dim() == v.dim(), "tensor dim mismatch");
    Tensor2 out(u.dim());
    for (const auto& [i, a] : u.entries()) {
        for (const auto& [j, b] : v.entries()) out.add(Idx2{i, j}, a * b);
    }
    return out;
}

// Pair a functional (coefficients on the basis) against one slot.
inline Vector contract(const Tensor2& t, int slot, const Vector& functional) {
    require(t.dim() == functional.dim(), "contract dim mismatch");
    require(slot == 1 || slot == 2, "contract slot must be 1 or 2");
    Vector out(t.dim());
    for (const auto& [k, v] : t.entries()) {
        if (slot == 1) {
            out.add(k.b, functional.at(k.a) * v);
        } else {
            out.add(k.a, functional.at(k.b) * v);
        }
    }
    return out;
}

}  // namespace covertex
