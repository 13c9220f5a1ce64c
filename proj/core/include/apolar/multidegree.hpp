#pragma once

#include <string>
#include <vector>

#include "apolar/error.hpp"

namespace apolar {

// Tuple of per-factor degrees of a multihomogeneous form.
struct Multidegree {
    std::vector<int> deg;

    Multidegree() = default;
    explicit Multidegree(std::vector<int> d) : deg(std::move(d)) {}
    Multidegree(std::initializer_list<int> d) : deg(d) {}

    std::size_t size() const { return deg.size(); }
    int operator[](std::size_t i) const { return deg[i]; }
    int& operator[](std::size_t i) { return deg[i]; }
    int total() const {
        int t = 0;
        for (int d : deg) t += d;
        return t;
    }

    bool operator==(const Multidegree& o) const { return deg == o.deg; }
    bool operator!=(const Multidegree& o) const { return deg != o.deg; }

    // Componentwise order; a >= b must hold before forming a - b.
    bool geq(const Multidegree& o) const {
        if (deg.size() != o.deg.size()) return false;
        for (std::size_t i = 0; i < deg.size(); ++i)
            if (deg[i] < o.deg[i]) return false;
        return true;
    }

    Multidegree operator+(const Multidegree& o) const {
        if (deg.size() != o.deg.size())
            throw dimension_error("multidegree arity mismatch in +");
        Multidegree r = *this;
        for (std::size_t i = 0; i < deg.size(); ++i) r.deg[i] += o.deg[i];
        return r;
    }
    Multidegree operator-(const Multidegree& o) const {
        if (!geq(o)) throw order_error("multidegree subtraction would go negative");
        Multidegree r = *this;
        for (std::size_t i = 0; i < deg.size(); ++i) r.deg[i] -= o.deg[i];
        return r;
    }
    Multidegree scaled(int k) const {
        Multidegree r = *this;
        for (auto& d : r.deg) d *= k;
        return r;
    }

    std::string to_string() const {
        std::string s = "(";
        for (std::size_t i = 0; i < deg.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(deg[i]);
        }
        return s + ")";
    }
};

}  // namespace apolar
