#pragma once

#include <map>
#include <optional>
#include <string>

#include "covertex/contract.hpp"
#include "covertex/tensor.hpp"

namespace covertex {

// Linear map V -> V (x) V stored by basis column. Invariant: no stored zero
// columns, so the zero map has an empty column set and equality is map
// equality.
class LinMap2 {
public:
    LinMap2() = default;
    explicit LinMap2(int dim) : dim_(dim), zero_(dim) {
        require(dim >= 0, "map dim must be >= 0");
    }

    int dim() const { return dim_; }
    bool zero() const { return col_.empty(); }
    const std::map<int, Tensor2>& columns() const { return col_; }

    const Tensor2& column(int i) const {
        require(detail::key_in_range(i, dim_), "column index out of range");
        auto it = col_.find(i);
        return it == col_.end() ? zero_ : it->second;
    }

    void set_column(int i, Tensor2 t) {
        require(detail::key_in_range(i, dim_), "column index out of range");
        require(t.dim() == dim_, "column dim mismatch");
        if (t.zero()) {
            col_.erase(i);
        } else {
            col_.insert_or_assign(i, std::move(t));
        }
    }

    // Adds v * e_j (x) e_k to the image of e_i.
    void add_term(int i, Idx2 jk, const Rational& v) {
        require(detail::key_in_range(i, dim_), "column index out of range");
        if (v.is_zero()) return;
        auto it = col_.find(i);
        if (it == col_.end()) it = col_.emplace(i, Tensor2(dim_)).first;
        it->second.add(jk, v);
        if (it->second.zero()) col_.erase(it);
    }

    Tensor2 apply(const Vector& v) const {
        require(v.dim() == dim_, "apply dim mismatch");
        Tensor2 out(dim_);
        for (const auto& [i, c] : v.entries()) {
            auto it = col_.find(i);
            if (it == col_.end()) continue;
            Tensor2 scaled = it->second;
            scaled *= c;
            out += scaled;
        }
        return out;
    }

    friend bool operator==(const LinMap2& x, const LinMap2& y) {
        return x.dim_ == y.dim_ && x.col_ == y.col_;
    }

private:
    int dim_ = 0;
    std::map<int, Tensor2> col_;
    Tensor2 zero_;
};

// Square matrix acting on V, stored sparsely by (row, col).
class Matrix {
public:
    Matrix() = default;
    explicit Matrix(int dim) : dim_(dim) { require(dim >= 0, "matrix dim must be >= 0"); }

    static Matrix identity(int dim) {
        Matrix m(dim);
        for (int i = 0; i < dim; ++i) m.add(i, i, Rational(1));
        return m;
    }

    int dim() const { return dim_; }
    bool zero() const { return c_.empty(); }
    const std::map<Idx2, Rational>& entries() const { return c_; }

    const Rational& at(int row, int col) const {
        require(detail::key_in_range(Idx2{row, col}, dim_), "matrix index out of range");
        static const Rational z;
        auto it = c_.find(Idx2{row, col});
        return it == c_.end() ? z : it->second;
    }

    void add(int row, int col, const Rational& v) {
        require(detail::key_in_range(Idx2{row, col}, dim_), "matrix index out of range");
        if (v.is_zero()) return;
        auto key = Idx2{row, col};
        auto [it, fresh] = c_.try_emplace(key, v);
        if (!fresh) {
            it->second += v;
            if (it->second.is_zero()) c_.erase(it);
        }
    }

    Vector apply(const Vector& v) const {
        require(v.dim() == dim_, "matrix apply dim mismatch");
        Vector out(dim_);
        for (const auto& [k, m] : c_) {
            const Rational& x = v.at(k.b);
            if (!x.is_zero()) out.add(k.a, m * x);
        }
        return out;
    }

    // this after o: (this.compose(o))(v) == this(o(v)).
    Matrix compose(const Matrix& o) const {
        require(dim_ == o.dim_, "compose dim mismatch");
        Matrix out(dim_);
        for (const auto& [ka, va] : c_) {
            for (const auto& [kb, vb] : o.c_) {
                if (ka.b == kb.a) out.add(ka.a, kb.b, va * vb);
            }
        }
        return out;
    }

    Matrix& operator+=(const Matrix& o) {
        require(dim_ == o.dim_, "matrix dim mismatch");
        for (const auto& [k, v] : o.c_) add(k.a, k.b, v);
        return *this;
    }
    Matrix& operator-=(const Matrix& o) {
        require(dim_ == o.dim_, "matrix dim mismatch");
        for (const auto& [k, v] : o.c_) add(k.a, k.b, -v);
        return *this;
    }
    Matrix& operator*=(const Rational& s) {
        if (s.is_zero()) {
            c_.clear();
        } else {
            for (auto& [k, v] : c_) v *= s;
        }
        return *this;
    }
    friend Matrix operator-(Matrix a, const Matrix& b) { a -= b; return a; }
    friend Matrix operator+(Matrix a, const Matrix& b) { a += b; return a; }
    friend Matrix operator*(const Rational& s, Matrix m) { m *= s; return m; }

    friend bool operator==(const Matrix& x, const Matrix& y) {
        return x.dim_ == y.dim_ && x.c_ == y.c_;
    }

    // Smallest k >= 0 with this^k == 0, or nullopt if none exists
    // (checking powers up to dim suffices for a genuine nilpotent).
    std::optional<int> nilpotency_index() const {
        Matrix p = identity(dim_);
        for (int k = 0; k <= dim_; ++k) {
            if (p.zero()) return k;
            p = p.compose(*this);
        }
        return std::nullopt;
    }

    std::string str() const {
        if (c_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [k, v] : c_) {
            if (!first) os << " + ";
            first = false;
            os << v.str() << "*E[" << k.a << "," << k.b << "]";
        }
        return os.str();
    }

private:
    int dim_ = 0;
    std::map<Idx2, Rational> c_;
};

// f applied to one slot of a pure or mixed tensor, identity elsewhere.

inline Tensor3 slot_apply(const LinMap2& f, int slot, const Tensor2& t) {
    require(f.dim() == t.dim(), "slot_apply dim mismatch");
    require(slot == 1 || slot == 2, "slot_apply slot must be 1 or 2");
    Tensor3 out(t.dim());
    for (const auto& [k, v] : t.entries()) {
        const int target = slot == 1 ? k.a : k.b;
        auto it = f.columns().find(target);
        if (it == f.columns().end()) continue;
        for (const auto& [jk, w] : it->second.entries()) {
            if (slot == 1) {
                out.add(Idx3{jk.a, jk.b, k.b}, v * w);
            } else {
                out.add(Idx3{k.a, jk.a, jk.b}, v * w);
            }
        }
    }
    return out;
}

inline Tensor2 slot_apply(const Matrix& m, int slot, const Tensor2& t) {
    require(m.dim() == t.dim(), "slot_apply dim mismatch");
    require(slot == 1 || slot == 2, "slot_apply slot must be 1 or 2");
    Tensor2 out(t.dim());
    for (const auto& [k, v] : t.entries()) {
        for (const auto& [mk, mv] : m.entries()) {
            if (slot == 1 && mk.b == k.a) out.add(Idx2{mk.a, k.b}, mv * v);
            if (slot == 2 && mk.b == k.b) out.add(Idx2{k.a, mk.a}, mv * v);
        }
    }
    return out;
}

}  // namespace covertex
