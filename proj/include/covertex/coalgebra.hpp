#pragma once

#include <map>
#include <string>

#include "covertex/linmap.hpp"

namespace covertex {

// Degree range of the nonzero coproduct components; empty when lo > hi.
struct DegreeSupport {
    long lo = 0;
    long hi = -1;

    bool empty() const { return lo > hi; }
    long width() const { return empty() ? 0 : hi - lo + 1; }
    bool contains(long n) const { return lo <= n && n <= hi; }

    std::string str() const {
        if (empty()) return "(empty)";
        return "[" + std::to_string(lo) + "," + std::to_string(hi) + "]";
    }
};

// The coproduct family n -> Delta_n. Invariant: only nonzero maps are
// stored, so the degree support is exactly the stored key range and the
// truncation axiom (vanishing for low enough n) is structural.
class CoproductFamily {
public:
    CoproductFamily() = default;
    explicit CoproductFamily(int dim) : dim_(dim), zero_(dim) {
        require(dim >= 0, "family dim must be >= 0");
    }

    int dim() const { return dim_; }

    DegreeSupport support() const {
        if (maps_.empty()) return {};
        return {maps_.begin()->first, maps_.rbegin()->first};
    }

    bool has(long n) const { return maps_.count(n) != 0; }

    const LinMap2& at(long n) const {
        auto it = maps_.find(n);
        return it == maps_.end() ? zero_ : it->second;
    }

    void set(long n, LinMap2 m) {
        require(m.dim() == dim_, "component dim mismatch");
        if (m.zero()) {
            maps_.erase(n);
        } else {
            maps_.insert_or_assign(n, std::move(m));
        }
    }

    // Accumulates v * e_j (x) e_k into Delta_n(e_i).
    void add_term(long n, int i, Idx2 jk, const Rational& v) {
        if (v.is_zero()) return;
        auto it = maps_.find(n);
        if (it == maps_.end()) it = maps_.emplace(n, LinMap2(dim_)).first;
        it->second.add_term(i, jk, v);
        if (it->second.zero()) maps_.erase(it);
    }

    const std::map<long, LinMap2>& maps() const { return maps_; }

    friend bool operator==(const CoproductFamily& a, const CoproductFamily& b) {
        return a.dim_ == b.dim_ && a.maps_ == b.maps_;
    }

private:
    int dim_ = 0;
    std::map<long, LinMap2> maps_;
    LinMap2 zero_;
};

struct VertexCoalgebra {
    std::string name;
    int dim = 0;
    Vector counit;  // the covacuum functional's values on the basis
    CoproductFamily family;

    DegreeSupport support() const { return family.support(); }
};

inline VertexCoalgebra make_coalgebra(std::string name, int dim) {
    require(dim >= 1, "coalgebra dim must be >= 1");
    return VertexCoalgebra{std::move(name), dim, Vector(dim), CoproductFamily(dim)};
}

}  // namespace covertex
