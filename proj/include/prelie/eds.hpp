#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "prelie/structure_map.hpp"

namespace prelie {

enum class DiscreteKind { EAS, CEDS, DualCEDS };
enum class LinearKind { LEAS, LCEDS, DualLCEDS };

std::string kind_name(DiscreteKind k);
std::string kind_name(LinearKind k);
std::optional<DiscreteKind> parse_discrete_kind(const std::string& s);
std::optional<LinearKind> parse_linear_kind(const std::string& s);

/// Finite set Ω with the two operation tables → and ▷, both total.
struct DiscreteEDS {
    std::vector<std::string> elements;
    std::vector<std::vector<int>> arrow;  // arrow[i][j] = i → j
    std::vector<std::vector<int>> tri;    // tri[i][j]   = i ▷ j

    int size() const { return static_cast<int>(elements.size()); }
    void validate() const;  // tables total, entries in range, names unique
};

/// Per-axiom verdicts. For each failing axiom, one witness (a triple of
/// element or basis indices) and the two unequal sides, printed verbatim.
struct AxiomReport {
    struct Entry {
        std::string axiom;
        bool pass = true;
        std::vector<int> witness;  // empty when pass
        std::string lhs, rhs;      // evaluated sides at the witness
    };
    std::vector<Entry> entries;

    bool pass() const {
        for (const auto& e : entries)
            if (!e.pass) return false;
        return true;
    }
    const Entry* first_failure() const {
        for (const auto& e : entries)
            if (!e.pass) return &e;
        return nullptr;
    }
    std::string summary() const;
};

/// Exhaustive check of the table axioms over all |Ω|³ triples:
/// EAS = Eqs. 5–7, CEDS = Eqs. 1–4, dual CEDS = Eqs. 11, 6, 7, 12, 13.
AxiomReport check_discrete(const DiscreteEDS& s, DiscreteKind kind);

/// Independent route: the same properties phrased through the set map
/// φ(α,β) = (α→β, α▷β), checked pointwise on Ω³:
/// EAS = Eq. 8, CEDS = Eqs. 8–9, dual CEDS = Eqs. 8 and 10.
AxiomReport check_discrete_phi(const DiscreteEDS& s, DiscreteKind kind);

/// The map (α,β) ↦ (α→β, α▷β), flattened as pair index α·|Ω|+β.
std::vector<int> phi_of(const DiscreteEDS& s);
bool is_nondegenerate(const DiscreteEDS& s);

/// Tables of φ⁻¹ (the ↷ and ◀ operations). Kind swaps CEDS ↔ dual CEDS and
/// preserves EAS. Throws if degenerate.
DiscreteEDS invert_phi(const DiscreteEDS& s);

struct LinearEDS {
    StructureMap phi;
    std::set<LinearKind> verified;  // only filled by a passing checker

    bool has(LinearKind k) const { return verified.count(k) > 0; }
};

/// Φ(e_α⊗e_β) = e_{α→β}⊗e_{α▷β}; verified kinds propagate from the
/// discrete checks.
LinearEDS linearize(const DiscreteEDS& s);

/// Compares both sides of Eq. 14 (always), plus Eq. 15 (ℓCEDS) or Eq. 16
/// (dual ℓCEDS), evaluated on every basis triple through apply_at. The
/// witness is the first differing triple in lexicographic order.
AxiomReport check_linear(const StructureMap& phi, LinearKind kind);

/// Exhaustive grid search for special vectors of eigenvalue λ, or for weak
/// special vectors when λ is absent: all vectors with every coordinate in
/// {lo/den, …, hi/den}. Throws if the candidate count exceeds the budget
/// (default 10^7, PRELIE_FORGE_BUDGET overrides). A nonzero hit with
/// λ ∉ {0,1} is impossible and raises std::logic_error.
std::vector<Tensor> search_special(const StructureMap& phi, std::optional<Rational> lambda,
                                   long lo, long hi, long den,
                                   std::optional<std::uint64_t> budget = std::nullopt);

std::uint64_t forge_budget();

}  // namespace prelie
