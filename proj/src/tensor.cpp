#include "prelie/tensor.hpp"

#include <sstream>
#include <stdexcept>

namespace prelie {

Tensor& Tensor::operator+=(const Tensor& o) {
    if (arity_ != o.arity_) throw std::invalid_argument("Tensor: arity mismatch in +");
    for (const auto& [k, c] : o.coeffs_) add(k, c);
    return *this;
}

Tensor& Tensor::operator-=(const Tensor& o) {
    if (arity_ != o.arity_) throw std::invalid_argument("Tensor: arity mismatch in -");
    for (const auto& [k, c] : o.coeffs_) add(k, -c);
    return *this;
}

Tensor& Tensor::operator*=(const Rational& c) {
    if (c.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    for (auto& [k, v] : coeffs_) v *= c;
    return *this;
}

Tensor tensor_product(const Tensor& t, const Tensor& u) {
    Tensor out(t.arity_ + u.arity_);
    for (const auto& [kt, ct] : t.coeffs_)
        for (const auto& [ku, cu] : u.coeffs_) {
            Tensor::Key k = kt;
            k.insert(k.end(), ku.begin(), ku.end());
            out.add(k, ct * cu);
        }
    return out;
}

Tensor Tensor::swap_slots(int s) const {
    if (s < 1 || s >= arity_) throw std::invalid_argument("Tensor::swap_slots: slot out of range");
    Tensor out(arity_);
    for (const auto& [k, c] : coeffs_) {
        Key kk = k;
        std::swap(kk[s - 1], kk[s]);
        out.add(kk, c);
    }
    return out;
}

std::vector<Rational> Tensor::coords(int dim) const {
    if (arity_ != 1) throw std::invalid_argument("Tensor::coords: arity must be 1");
    std::vector<Rational> out(dim, Rational(0));
    for (const auto& [k, c] : coeffs_) out.at(k[0]) = c;
    return out;
}

std::string Tensor::str(const std::vector<std::string>& names) const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : coeffs_) {
        if (!first) os << " + ";
        first = false;
        if (!(c == Rational(1))) os << c << "*";
        for (size_t i = 0; i < k.size(); ++i) {
            if (i) os << (char)0xE2 << (char)0x8A << (char)0x97;  // ⊗
            os << names.at(k[i]);
        }
    }
    return os.str();
}

}  // namespace prelie
