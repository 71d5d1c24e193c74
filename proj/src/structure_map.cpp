#include "prelie/structure_map.hpp"

#include <stdexcept>

#include "prelie/linalg.hpp"

namespace prelie {

namespace {
const Tensor kZero2(2);
}

StructureMap StructureMap::flip(Basis basis) {
    StructureMap m(std::move(basis));
    int d = m.dim();
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) m.add_entry(i, j, j, i, Rational(1));
    return m;
}

StructureMap StructureMap::identity(Basis basis) {
    StructureMap m(std::move(basis));
    int d = m.dim();
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) m.add_entry(i, j, i, j, Rational(1));
    return m;
}

void StructureMap::set_entry(int i, int j, Tensor image) {
    if (image.arity() != 2) throw std::invalid_argument("StructureMap: entry must have arity 2");
    if (image.is_zero())
        entries_.erase({i, j});
    else
        entries_.insert_or_assign({i, j}, std::move(image));
}

void StructureMap::add_entry(int i, int j, int k, int l, const Rational& c) {
    auto it = entries_.find({i, j});
    if (it == entries_.end()) it = entries_.emplace(std::make_pair(i, j), Tensor(2)).first;
    it->second.add({k, l}, c);
    if (it->second.is_zero()) entries_.erase(it);
}

const Tensor& StructureMap::entry(int i, int j) const {
    auto it = entries_.find({i, j});
    return it == entries_.end() ? kZero2 : it->second;
}

Tensor StructureMap::apply(const Tensor& t) const {
    if (t.arity() != 2) throw std::invalid_argument("StructureMap::apply: arity must be 2");
    Tensor out(2);
    for (const auto& [k, c] : t.terms()) {
        const Tensor& img = entry(k[0], k[1]);
        for (const auto& [ki, ci] : img.terms()) out.add(ki, c * ci);
    }
    return out;
}

StructureMap StructureMap::dualize() const {
    StructureMap out(basis_);
    for (const auto& [in, img] : entries_)
        for (const auto& [outk, c] : img.terms())
            out.add_entry(outk[0], outk[1], in.first, in.second, c);
    return out;
}

std::vector<std::vector<Rational>> StructureMap::matrix() const {
    int d = dim(), n = d * d;
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n, Rational(0)));
    for (const auto& [in, img] : entries_)
        for (const auto& [outk, c] : img.terms())
            m[outk[0] * d + outk[1]][in.first * d + in.second] = c;
    return m;
}

Tensor apply_at(const StructureMap& phi, int slot, const Tensor& t) {
    int k = t.arity();
    if (slot < 1 || slot > k - 1) throw std::invalid_argument("apply_at: slot out of range");
    Tensor out(k);
    for (const auto& [key, c] : t.terms()) {
        const Tensor& img = phi.entry(key[slot - 1], key[slot]);
        for (const auto& [ik, ic] : img.terms()) {
            Tensor::Key kk = key;
            kk[slot - 1] = ik[0];
            kk[slot] = ik[1];
            out.add(kk, c * ic);
        }
    }
    return out;
}

Tensor cascade_graft(const StructureMap& phi, const Tensor& a, const std::vector<Tensor>& path) {
    if (a.arity() != 1) throw std::invalid_argument("cascade_graft: a must have arity 1");
    Tensor t = a;
    for (const auto& p : path) t = tensor_product(t, p);
    int k = static_cast<int>(path.size());
    // a sits in slot 1 and is threaded upward through a_1 .. a_k; after the
    // s-th application the running factor occupies slot s+1.
    for (int s = 1; s <= k; ++s) t = apply_at(phi, s, t);
    return t;
}

Tensor cascade_contract(const StructureMap& phi, const std::vector<Tensor>& path, const Tensor& a) {
    if (a.arity() != 1) throw std::invalid_argument("cascade_contract: a must have arity 1");
    Tensor t(1);
    int k = static_cast<int>(path.size());
    if (k == 0) return a;
    t = path[0];
    for (int i = 1; i < k; ++i) t = tensor_product(t, path[i]);
    t = tensor_product(t, a);
    // a sits in slot k+1 and is threaded downward through a_k .. a_1.
    for (int s = k; s >= 1; --s) t = apply_at(phi, s, t);
    return t;
}

namespace {
std::vector<Tensor> units_of(const std::vector<int>& types) {
    std::vector<Tensor> v;
    v.reserve(types.size());
    for (int i : types) v.push_back(Tensor::unit(i));
    return v;
}
}  // namespace

Tensor cascade_graft(const StructureMap& phi, const Tensor& a, const std::vector<int>& path_types) {
    return cascade_graft(phi, a, units_of(path_types));
}

Tensor cascade_contract(const StructureMap& phi, const std::vector<int>& path_types, const Tensor& a) {
    return cascade_contract(phi, units_of(path_types), a);
}

bool verify_special(const StructureMap& phi, const Tensor& a, const Rational& lambda) {
    Tensor aa = tensor_product(a, a);
    return phi.apply(aa) == lambda * aa;
}

bool verify_weak_special(const StructureMap& phi, const Tensor& a) {
    Tensor aa = tensor_product(a, a);
    Tensor img = phi.apply(aa);
    return img + img.swap_slots(1) == aa;
}

bool StructureMap::is_bijective() const {
    return rank(matrix()) == dim() * dim();
}

}  // namespace prelie
