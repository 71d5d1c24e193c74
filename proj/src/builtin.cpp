#include "prelie/builtin.hpp"

#include <stdexcept>

namespace prelie::builtin {

DiscreteEDS eas_matching(const std::vector<std::string>& names) {
    int n = static_cast<int>(names.size());
    DiscreteEDS s;
    s.elements = names;
    s.arrow.assign(n, std::vector<int>(n));
    s.tri.assign(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            s.arrow[a][b] = b;
            s.tri[a][b] = a;
        }
    return s;
}

namespace {
std::vector<std::string> zn_names(int n) {
    std::vector<std::string> v;
    for (int i = 0; i < n; ++i) v.push_back("g" + std::to_string(i));
    return v;
}
}  // namespace

DiscreteEDS eas_family_zn(int n) {
    DiscreteEDS s;
    s.elements = zn_names(n);
    s.arrow.assign(n, std::vector<int>(n));
    s.tri.assign(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            s.arrow[a][b] = (a + b) % n;
            s.tri[a][b] = a;
        }
    return s;
}

DiscreteEDS eas_group_zn(int n) {
    DiscreteEDS s;
    s.elements = zn_names(n);
    s.arrow.assign(n, std::vector<int>(n));
    s.tri.assign(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            s.arrow[a][b] = b;
            s.tri[a][b] = ((a - b) % n + n) % n;
        }
    return s;
}

DiscreteEDS eas_group_s3() {
    // Permutations of {0,1,2} in one-line notation, id first.
    const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    auto compose = [&](int p, int q) {  // (p∘q)(i) = p(q(i))
        int r[3];
        for (int i = 0; i < 3; ++i) r[i] = perms[p][perms[q][i]];
        for (int k = 0; k < 6; ++k)
            if (perms[k][0] == r[0] && perms[k][1] == r[1] && perms[k][2] == r[2]) return k;
        throw std::logic_error("eas_group_s3: composition fell outside the table");
    };
    auto inverse = [&](int p) {
        for (int k = 0; k < 6; ++k)
            if (compose(p, k) == 0) return k;
        throw std::logic_error("eas_group_s3: missing inverse");
    };
    DiscreteEDS s;
    s.elements = {"e", "t12", "t01", "c021", "c012", "t02"};
    s.arrow.assign(6, std::vector<int>(6));
    s.tri.assign(6, std::vector<int>(6));
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b) {
            s.arrow[a][b] = b;
            s.tri[a][b] = compose(a, inverse(b));
        }
    return s;
}

Basis letters(int d) {
    const std::vector<std::string> names = {"x", "y", "z", "w"};
    if (d < 1 || d > static_cast<int>(names.size()))
        throw std::invalid_argument("letters: supported dimensions are 1..4");
    return Basis(std::vector<std::string>(names.begin(), names.begin() + d));
}

StructureMap phi_flip(int d) { return StructureMap::flip(letters(d)); }

StructureMap phi_z2() { return linearize(eas_family_zn(2)).phi; }

StructureMap phi_grp() { return linearize(eas_group_zn(2)).phi; }

StructureMap phi_d1_prelie() { return StructureMap::identity(letters(1)); }

StructureMap phi_d1_nap() { return StructureMap::zero(letters(1)); }

std::vector<NamedMap> panel() {
    return {{"flip2", phi_flip(2)},
            {"z2", phi_z2()},
            {"grp", phi_grp()},
            {"d1-prelie", phi_d1_prelie()},
            {"d1-nap", phi_d1_nap()}};
}

}  // namespace prelie::builtin
