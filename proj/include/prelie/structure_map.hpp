#pragma once

#include <map>
#include <utility>
#include <vector>

#include "prelie/basis.hpp"
#include "prelie/tensor.hpp"

namespace prelie {

/// A linear map Φ : A⊗A → A⊗A in a named finite basis, stored sparsely as
/// the images of basis pairs. A missing entry is the zero image; the map
/// extends bilinearly. Houses Φ, the flip τ, Φ*, Φ⁻¹ and the Sweedler
/// symbols a′→b′ (first output slot) and a″▷b″ (second output slot).
class StructureMap {
public:
    explicit StructureMap(Basis basis) : basis_(std::move(basis)) {}

    const Basis& basis() const { return basis_; }
    int dim() const { return basis_.dim(); }

    /// The canonical flip τ(e_i⊗e_j) = e_j⊗e_i.
    static StructureMap flip(Basis basis);
    /// The zero map.
    static StructureMap zero(Basis basis) { return StructureMap(std::move(basis)); }
    /// The identity on A⊗A.
    static StructureMap identity(Basis basis);

    void set_entry(int i, int j, Tensor image);
    void add_entry(int i, int j, int k, int l, const Rational& c);

    /// Φ(e_i⊗e_j) as an arity-2 tensor.
    const Tensor& entry(int i, int j) const;

    /// Φ applied to an arity-2 tensor.
    Tensor apply(const Tensor& t) const;

    /// Transpose Φ* on the dual basis; an involution.
    StructureMap dualize() const;

    /// Matrix of Φ in the basis (e_i⊗e_j), row = output pair, column = input
    /// pair, pairs ordered by i*d+j.
    std::vector<std::vector<Rational>> matrix() const;

    bool is_bijective() const;

    friend bool operator==(const StructureMap& a, const StructureMap& b) {
        return a.basis_ == b.basis_ && a.entries_ == b.entries_;
    }

private:
    Basis basis_;
    std::map<std::pair<int, int>, Tensor> entries_;
};

/// Id^{⊗(slot−1)} ⊗ Φ ⊗ Id^{⊗(k−slot−1)} applied to an arity-k tensor;
/// Φ acts on tensor slots (slot, slot+1), 1-based. Requires 1 ≤ slot ≤ k−1.
Tensor apply_at(const StructureMap& phi, int slot, const Tensor& t);

/// Grafting cascade of the ◇ product:
///   (Id^{⊗(k−1)}⊗Φ) ∘ (Id^{⊗(k−2)}⊗Φ⊗Id) ∘ … ∘ (Φ⊗Id^{⊗(k−1)}) (a⊗a₁⊗…⊗a_k).
/// path[0] is the edge nearest the root. Output slots 1..k are the new types
/// of the path edges e₁..e_k and slot k+1 is the new type of the grafting
/// edge. k = 0 returns a unchanged.
Tensor cascade_graft(const StructureMap& phi, const Tensor& a, const std::vector<Tensor>& path);

/// Contraction cascade of extraction–contraction and admissible cuts:
///   (Φ⊗Id^{⊗(k−1)}) ∘ (Id⊗Φ⊗Id^{⊗(k−2)}) ∘ … ∘ (Id^{⊗(k−1)}⊗Φ) (a₁⊗…⊗a_k⊗a).
/// path[0] is the edge nearest the root. Output slot 1 is the new type of
/// the surviving/cut edge e and slots 2..k+1 are the new types of e₁..e_k.
Tensor cascade_contract(const StructureMap& phi, const std::vector<Tensor>& path, const Tensor& a);

/// Basis-index forms used by the tree machinery.
Tensor cascade_graft(const StructureMap& phi, const Tensor& a, const std::vector<int>& path_types);
Tensor cascade_contract(const StructureMap& phi, const std::vector<int>& path_types, const Tensor& a);

/// Whether Φ(a⊗a) = λ·a⊗a.
bool verify_special(const StructureMap& phi, const Tensor& a, const Rational& lambda);

/// Whether Φ(a⊗a) + τ∘Φ(a⊗a) = a⊗a.
bool verify_weak_special(const StructureMap& phi, const Tensor& a);

}  // namespace prelie
