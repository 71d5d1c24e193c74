#pragma once

#include <string>
#include <vector>

#include "prelie/eds.hpp"

namespace prelie {

/// The example structures shipped with the engine.
namespace builtin {

/// α→β = β, α▷β = α on the given names ("matching"); linearizes to the flip.
DiscreteEDS eas_matching(const std::vector<std::string>& names);

/// Family structure on the cyclic group: α→β = α+β, α▷β = α (mod n).
DiscreteEDS eas_family_zn(int n);

/// Group structure EAS′(ℤ/n): α→β = β, α▷β = α−β (mod n).
DiscreteEDS eas_group_zn(int n);

/// EAS′(S₃): noncommutative control; a CEDS that is not a dual CEDS.
DiscreteEDS eas_group_s3();

/// τ on a d-dimensional basis x, y, z, …
StructureMap phi_flip(int d);
/// Linearization of eas_family_zn(2).
StructureMap phi_z2();
/// Linearization of eas_group_zn(2).
StructureMap phi_grp();
/// d = 1, Φ(e⊗e) = e⊗e (classical pre-Lie).
StructureMap phi_d1_prelie();
/// d = 1, Φ = 0 (NAP).
StructureMap phi_d1_nap();

/// Names for d ≤ 4 bases: x, y, z, w.
Basis letters(int d);

struct NamedMap {
    std::string name;
    StructureMap phi;
};
/// The d ≤ 2 panel used by the property suites.
std::vector<NamedMap> panel();

}  // namespace builtin
}  // namespace prelie
