#include "prelie/eds.hpp"

#include <array>
#include <cstdlib>
#include <set>
#include <sstream>
#include <stdexcept>

namespace prelie {

std::string kind_name(DiscreteKind k) {
    switch (k) {
        case DiscreteKind::EAS: return "eas";
        case DiscreteKind::CEDS: return "ceds";
        case DiscreteKind::DualCEDS: return "dual-ceds";
    }
    return "?";
}

std::string kind_name(LinearKind k) {
    switch (k) {
        case LinearKind::LEAS: return "leas";
        case LinearKind::LCEDS: return "lceds";
        case LinearKind::DualLCEDS: return "dual-lceds";
    }
    return "?";
}

std::optional<DiscreteKind> parse_discrete_kind(const std::string& s) {
    if (s == "eas") return DiscreteKind::EAS;
    if (s == "ceds") return DiscreteKind::CEDS;
    if (s == "dual-ceds") return DiscreteKind::DualCEDS;
    return std::nullopt;
}

std::optional<LinearKind> parse_linear_kind(const std::string& s) {
    if (s == "leas") return LinearKind::LEAS;
    if (s == "lceds") return LinearKind::LCEDS;
    if (s == "dual-lceds") return LinearKind::DualLCEDS;
    return std::nullopt;
}

void DiscreteEDS::validate() const {
    int n = size();
    std::set<std::string> seen(elements.begin(), elements.end());
    if (static_cast<int>(seen.size()) != n)
        throw std::invalid_argument("DiscreteEDS: duplicate element names");
    for (const auto* table : {&arrow, &tri}) {
        if (static_cast<int>(table->size()) != n)
            throw std::invalid_argument("DiscreteEDS: table is not total");
        for (const auto& row : *table) {
            if (static_cast<int>(row.size()) != n)
                throw std::invalid_argument("DiscreteEDS: table row is not total");
            for (int v : row)
                if (v < 0 || v >= n) throw std::invalid_argument("DiscreteEDS: entry out of range");
        }
    }
}

std::string AxiomReport::summary() const {
    std::ostringstream os;
    for (const auto& e : entries) {
        os << e.axiom << ": " << (e.pass ? "pass" : "FAIL");
        if (!e.pass) {
            os << " at (";
            for (size_t i = 0; i < e.witness.size(); ++i) os << (i ? "," : "") << e.witness[i];
            os << ")  lhs = " << e.lhs << "  rhs = " << e.rhs;
        }
        os << "\n";
    }
    return os.str();
}

namespace {

using Table = std::vector<std::vector<int>>;

struct SideEval {
    std::string name;
    int (*lhs)(const Table&, const Table&, int, int, int);
    int (*rhs)(const Table&, const Table&, int, int, int);
};

// Table equations. ar = →, tr = ▷.
int eq1_l(const Table& ar, const Table&, int a, int b, int c) { return ar[a][ar[b][c]]; }
int eq1_r(const Table& ar, const Table&, int a, int b, int c) { return ar[ar[a][b]][c]; }
int eq1c_l(const Table& ar, const Table&, int a, int b, int c) { return ar[ar[a][b]][c]; }
int eq1c_r(const Table& ar, const Table&, int a, int b, int c) { return ar[ar[b][a]][c]; }
int eq2_l(const Table& ar, const Table& tr, int a, int b, int c) { return tr[a][ar[b][c]]; }
int eq2_r(const Table&, const Table& tr, int a, int, int c) { return tr[a][c]; }
int eq3_l(const Table& ar, const Table& tr, int a, int b, int c) { return ar[tr[a][c]][tr[b][c]]; }
int eq3_r(const Table& ar, const Table& tr, int a, int b, int c) { return tr[ar[a][b]][c]; }
int eq4_l(const Table& ar, const Table& tr, int a, int b, int c) { return tr[tr[a][c]][tr[b][c]]; }
int eq4_r(const Table&, const Table& tr, int a, int b, int) { return tr[a][b]; }
int eq6_l(const Table& ar, const Table& tr, int a, int b, int c) {
    return ar[tr[a][ar[b][c]]][tr[b][c]];
}
int eq6_r(const Table& ar, const Table& tr, int a, int b, int c) { return tr[ar[a][b]][c]; }
int eq7_l(const Table& ar, const Table& tr, int a, int b, int c) {
    return tr[tr[a][ar[b][c]]][tr[b][c]];
}
int eq7_r(const Table&, const Table& tr, int a, int b, int) { return tr[a][b]; }
int eq12_l(const Table& ar, const Table& tr, int a, int b, int c) { return ar[tr[a][b]][c]; }
int eq12_r(const Table& ar, const Table&, int a, int, int c) { return ar[a][c]; }
int eq13_l(const Table& ar, const Table& tr, int a, int b, int c) { return tr[tr[a][b]][c]; }
int eq13_r(const Table& ar, const Table& tr, int a, int b, int c) { return tr[tr[a][c]][b]; }

std::vector<SideEval> table_axioms(DiscreteKind kind) {
    switch (kind) {
        case DiscreteKind::CEDS:
            return {{"eq1", eq1_l, eq1_r},
                    {"eq1-commuted", eq1c_l, eq1c_r},
                    {"eq2", eq2_l, eq2_r},
                    {"eq3", eq3_l, eq3_r},
                    {"eq4", eq4_l, eq4_r}};
        case DiscreteKind::EAS:
            return {{"eq5", eq1_l, eq1_r}, {"eq6", eq6_l, eq6_r}, {"eq7", eq7_l, eq7_r}};
        case DiscreteKind::DualCEDS:
            return {{"eq11", eq1_l, eq1_r},
                    {"eq6", eq6_l, eq6_r},
                    {"eq7", eq7_l, eq7_r},
                    {"eq12", eq12_l, eq12_r},
                    {"eq13", eq13_l, eq13_r}};
    }
    return {};
}

using Triple = std::array<int, 3>;
using TripleMap = Triple (*)(const DiscreteEDS&, Triple);

Triple phi12(const DiscreteEDS& s, Triple t) { return {s.arrow[t[0]][t[1]], s.tri[t[0]][t[1]], t[2]}; }
Triple phi23(const DiscreteEDS& s, Triple t) { return {t[0], s.arrow[t[1]][t[2]], s.tri[t[1]][t[2]]}; }
Triple tau12(const DiscreteEDS&, Triple t) { return {t[1], t[0], t[2]}; }
Triple tau23(const DiscreteEDS&, Triple t) { return {t[0], t[2], t[1]}; }

// Compositions written right-to-left, applied left-to-right here.
Triple chain(const DiscreteEDS& s, Triple t, std::initializer_list<TripleMap> maps) {
    for (auto m : maps) t = m(s, t);
    return t;
}

struct PhiAxiom {
    std::string name;
    std::vector<TripleMap> lhs, rhs;  // in application order
};

std::vector<PhiAxiom> phi_axioms(DiscreteKind kind) {
    PhiAxiom eq8{"eq8", {phi23, phi12, phi23}, {phi12, tau23, phi12}};
    PhiAxiom eq9{"eq9", {phi12, tau12, tau23, phi23}, {tau23, phi23, phi12, tau12}};
    PhiAxiom eq10{"eq10", {phi23, tau23, tau12, phi12}, {tau12, phi12, phi23, tau23}};
    switch (kind) {
        case DiscreteKind::EAS: return {eq8};
        case DiscreteKind::CEDS: return {eq8, eq9};
        case DiscreteKind::DualCEDS: return {eq8, eq10};
    }
    return {};
}

std::string triple_str(const DiscreteEDS& s, Triple t) {
    return "(" + s.elements[t[0]] + "," + s.elements[t[1]] + "," + s.elements[t[2]] + ")";
}

}  // namespace

AxiomReport check_discrete(const DiscreteEDS& s, DiscreteKind kind) {
    s.validate();
    int n = s.size();
    AxiomReport rep;
    for (const auto& ax : table_axioms(kind)) {
        AxiomReport::Entry e{ax.name, true, {}, "", ""};
        for (int a = 0; a < n && e.pass; ++a)
            for (int b = 0; b < n && e.pass; ++b)
                for (int c = 0; c < n && e.pass; ++c) {
                    int l = ax.lhs(s.arrow, s.tri, a, b, c);
                    int r = ax.rhs(s.arrow, s.tri, a, b, c);
                    if (l != r) {
                        e.pass = false;
                        e.witness = {a, b, c};
                        e.lhs = s.elements[l];
                        e.rhs = s.elements[r];
                    }
                }
        rep.entries.push_back(std::move(e));
    }
    return rep;
}

AxiomReport check_discrete_phi(const DiscreteEDS& s, DiscreteKind kind) {
    s.validate();
    int n = s.size();
    AxiomReport rep;
    for (const auto& ax : phi_axioms(kind)) {
        AxiomReport::Entry e{ax.name, true, {}, "", ""};
        for (int a = 0; a < n && e.pass; ++a)
            for (int b = 0; b < n && e.pass; ++b)
                for (int c = 0; c < n && e.pass; ++c) {
                    Triple t{a, b, c};
                    Triple l = t, r = t;
                    for (auto m : ax.lhs) l = m(s, l);
                    for (auto m : ax.rhs) r = m(s, r);
                    if (l != r) {
                        e.pass = false;
                        e.witness = {a, b, c};
                        e.lhs = triple_str(s, l);
                        e.rhs = triple_str(s, r);
                    }
                }
        rep.entries.push_back(std::move(e));
    }
    return rep;
}

std::vector<int> phi_of(const DiscreteEDS& s) {
    int n = s.size();
    std::vector<int> out(n * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) out[a * n + b] = s.arrow[a][b] * n + s.tri[a][b];
    return out;
}

bool is_nondegenerate(const DiscreteEDS& s) {
    auto p = phi_of(s);
    std::set<int> image(p.begin(), p.end());
    return image.size() == p.size();
}

DiscreteEDS invert_phi(const DiscreteEDS& s) {
    if (!is_nondegenerate(s)) throw std::invalid_argument("invert_phi: structure is degenerate");
    int n = s.size();
    DiscreteEDS out;
    out.elements = s.elements;
    out.arrow.assign(n, std::vector<int>(n, 0));
    out.tri.assign(n, std::vector<int>(n, 0));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            int x = s.arrow[a][b], y = s.tri[a][b];
            out.arrow[x][y] = a;
            out.tri[x][y] = b;
        }
    return out;
}

LinearEDS linearize(const DiscreteEDS& s) {
    s.validate();
    StructureMap phi((Basis(s.elements)));
    int n = s.size();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) phi.add_entry(a, b, s.arrow[a][b], s.tri[a][b], Rational(1));
    LinearEDS out{std::move(phi), {}};
    if (check_discrete(s, DiscreteKind::EAS).pass()) out.verified.insert(LinearKind::LEAS);
    if (check_discrete(s, DiscreteKind::CEDS).pass()) out.verified.insert(LinearKind::LCEDS);
    if (check_discrete(s, DiscreteKind::DualCEDS).pass()) out.verified.insert(LinearKind::DualLCEDS);
    return out;
}

namespace {

// One side of Eqs. 14–16 as a chain of two-slot maps on arity-3 tensors,
// in application order (rightmost factor of the displayed composition first).
struct Step {
    bool is_phi;
    int slot;
};

Tensor run_chain(const StructureMap& phi, const std::vector<Step>& steps, Tensor t) {
    for (const auto& st : steps) t = st.is_phi ? apply_at(phi, st.slot, t) : t.swap_slots(st.slot);
    return t;
}

struct LinearAxiom {
    std::string name;
    std::vector<Step> lhs, rhs;
};

std::vector<LinearAxiom> linear_axioms(LinearKind kind) {
    LinearAxiom eq14{"eq14",
                     {{true, 2}, {true, 1}, {true, 2}},
                     {{true, 1}, {false, 2}, {true, 1}}};
    LinearAxiom eq15{"eq15",
                     {{true, 1}, {false, 1}, {false, 2}, {true, 2}},
                     {{false, 2}, {true, 2}, {true, 1}, {false, 1}}};
    LinearAxiom eq16{"eq16",
                     {{true, 2}, {false, 2}, {false, 1}, {true, 1}},
                     {{false, 1}, {true, 1}, {true, 2}, {false, 2}}};
    switch (kind) {
        case LinearKind::LEAS: return {eq14};
        case LinearKind::LCEDS: return {eq14, eq15};
        case LinearKind::DualLCEDS: return {eq14, eq16};
    }
    return {};
}

}  // namespace

AxiomReport check_linear(const StructureMap& phi, LinearKind kind) {
    int d = phi.dim();
    AxiomReport rep;
    for (const auto& ax : linear_axioms(kind)) {
        AxiomReport::Entry e{ax.name, true, {}, "", ""};
        for (int i = 0; i < d && e.pass; ++i)
            for (int j = 0; j < d && e.pass; ++j)
                for (int k = 0; k < d && e.pass; ++k) {
                    Tensor t(3);
                    t.add({i, j, k}, Rational(1));
                    Tensor l = run_chain(phi, ax.lhs, t);
                    Tensor r = run_chain(phi, ax.rhs, t);
                    if (!(l == r)) {
                        e.pass = false;
                        e.witness = {i, j, k};
                        e.lhs = l.str(phi.basis().names());
                        e.rhs = r.str(phi.basis().names());
                    }
                }
        rep.entries.push_back(std::move(e));
    }
    return rep;
}

std::uint64_t forge_budget() {
    if (const char* env = std::getenv("PRELIE_FORGE_BUDGET")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return 10000000ull;
}

std::vector<Tensor> search_special(const StructureMap& phi, std::optional<Rational> lambda,
                                   long lo, long hi, long den,
                                   std::optional<std::uint64_t> budget) {
    if (den <= 0) throw std::invalid_argument("search_special: denominator must be positive");
    if (hi < lo) throw std::invalid_argument("search_special: empty grid");
    int d = phi.dim();
    std::uint64_t cap = budget.value_or(forge_budget());
    std::uint64_t values = static_cast<std::uint64_t>(hi - lo + 1), count = 1;
    for (int i = 0; i < d; ++i) {
        if (count > cap / values)
            throw std::runtime_error("search_special: grid exceeds budget; use a smaller grid");
        count *= values;
    }
    bool nontrivial_lambda = lambda && !(*lambda == Rational(0)) && !(*lambda == Rational(1));
    std::vector<Tensor> hits;
    std::vector<long> odo(d, lo);
    while (true) {
        Tensor a(1);
        bool zero = true;
        for (int i = 0; i < d; ++i) {
            if (odo[i] != 0) zero = false;
            a.add({i}, Rational(odo[i], den));
        }
        bool ok = lambda ? verify_special(phi, a, *lambda) : verify_weak_special(phi, a);
        if (ok) {
            if (nontrivial_lambda && !zero)
                throw std::logic_error(
                    "search_special: nonzero special vector with eigenvalue outside {0,1}");
            hits.push_back(a);
        }
        int pos = d - 1;
        while (pos >= 0 && odo[pos] == hi) odo[pos--] = lo;
        if (pos < 0) break;
        ++odo[pos];
    }
    return hits;
}

}  // namespace prelie
