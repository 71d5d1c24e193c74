#pragma once

#include <map>
#include <string>
#include <vector>

#include "prelie/rational.hpp"

namespace prelie {

/// Sparse element of A^{⊗k} in a fixed basis: map from k-tuples of basis
/// indices to nonzero rational coefficients. Zero coefficients are erased
/// eagerly, so structural equality is mathematical equality.
class Tensor {
public:
    using Key = std::vector<int>;
    using Map = std::map<Key, Rational>;

    explicit Tensor(int arity) : arity_(arity) {
        if (arity < 1) throw std::invalid_argument("Tensor: arity must be >= 1");
    }

    /// Basis vector e_i as an arity-1 tensor.
    static Tensor unit(int i) {
        Tensor t(1);
        t.add({i}, Rational(1));
        return t;
    }
    /// Arity-1 tensor with the given coordinates.
    static Tensor from_coords(const std::vector<Rational>& coords) {
        Tensor t(1);
        for (int i = 0; i < static_cast<int>(coords.size()); ++i) t.add({i}, coords[i]);
        return t;
    }

    int arity() const { return arity_; }
    bool is_zero() const { return coeffs_.empty(); }
    const Map& terms() const { return coeffs_; }

    Rational coeff(const Key& k) const {
        auto it = coeffs_.find(k);
        return it == coeffs_.end() ? Rational(0) : it->second;
    }

    void add(const Key& k, const Rational& c) {
        if (static_cast<int>(k.size()) != arity_)
            throw std::invalid_argument("Tensor::add: key arity mismatch");
        if (c.is_zero()) return;
        auto [it, fresh] = coeffs_.emplace(k, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) coeffs_.erase(it);
        }
    }

    Tensor& operator+=(const Tensor& o);
    Tensor& operator-=(const Tensor& o);
    Tensor& operator*=(const Rational& c);
    friend Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
    friend Tensor operator-(Tensor a, const Tensor& b) { return a -= b; }
    friend Tensor operator*(const Rational& c, Tensor t) { return t *= c; }

    friend bool operator==(const Tensor& a, const Tensor& b) {
        return a.arity_ == b.arity_ && a.coeffs_ == b.coeffs_;
    }

    /// t ⊗ u, arities add.
    friend Tensor tensor_product(const Tensor& t, const Tensor& u);

    /// Flip of tensor slots (s, s+1), 1-based.
    Tensor swap_slots(int s) const;

    /// Coordinates of an arity-1 tensor in a dim-d space.
    std::vector<Rational> coords(int dim) const;

    std::string str(const std::vector<std::string>& names) const;

private:
    int arity_;
    Map coeffs_;
};

}  // namespace prelie
