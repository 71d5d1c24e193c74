#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "prelie/basis.hpp"
#include "prelie/decoration.hpp"
#include "prelie/rational.hpp"
#include "prelie/tensor.hpp"

namespace prelie {

/// Rooted tree with D-decorated vertices and basis-indexed edge types.
/// Canonical form: children sorted by (edge type, subtree); equality of
/// canonical forms is isomorphism of typed decorated trees. The raw struct
/// does not enforce canonicity — call canonical() after surgery.
struct TypedTree {
    int dec = 0;
    std::vector<std::pair<int, TypedTree>> children;

    int vertex_count() const {
        int n = 1;
        for (const auto& [t, c] : children) n += c.vertex_count();
        return n;
    }
    int edge_count() const { return vertex_count() - 1; }

    friend bool operator==(const TypedTree& a, const TypedTree& b) {
        return a.dec == b.dec && a.children == b.children;
    }
    friend bool operator<(const TypedTree& a, const TypedTree& b) {
        if (a.dec != b.dec) return a.dec < b.dec;
        return a.children < b.children;
    }
    friend bool operator>(const TypedTree& a, const TypedTree& b) { return b < a; }
    friend bool operator!=(const TypedTree& a, const TypedTree& b) { return !(a == b); }
};

/// Idempotent; two raw trees canonicalize equal iff they are isomorphic as
/// typed decorated rooted trees.
TypedTree canonical(const TypedTree& t);
bool is_canonical(const TypedTree& t);

TypedTree leaf(int dec);
/// Ladder with decorations bottom-up: decs[0] is the root; types[i] joins
/// decs[i] to decs[i+1].
TypedTree ladder(const std::vector<int>& decs, const std::vector<int>& types);

/// Depth-first positional path to a vertex: the child indices taken from the
/// root. The root is {}. Valid against one concrete (usually canonical)
/// layout; tree surgery that only appends children keeps paths stable.
using VertexPath = std::vector<int>;

/// Pre-order list of all vertex paths.
std::vector<VertexPath> vertices(const TypedTree& t);
const TypedTree& node_at(const TypedTree& t, const VertexPath& p);
TypedTree& node_at(TypedTree& t, const VertexPath& p);
/// Edge types from the root down to the vertex (empty for the root).
std::vector<int> path_types(const TypedTree& t, const VertexPath& p);

/// Canonical multiset of trees; the empty forest is the unit 1.
using Forest = std::vector<TypedTree>;
Forest make_forest(std::vector<TypedTree> trees);
Forest forest_union(const Forest& a, const Forest& b);
int forest_edges(const Forest& f);
int forest_vertices(const Forest& f);

/// Formal rational combinations with canonical keys and no zero terms.
using TreeSum = std::map<TypedTree, Rational>;
using ForestSum = std::map<Forest, Rational>;
/// Sum of k-fold forest tensors (k fixed per object by use).
using ForestTensorSum = std::map<std::vector<Forest>, Rational>;
/// Sum of forest⊗forest tensors.
using TensorSum = std::map<std::pair<Forest, Forest>, Rational>;

void add_term(TreeSum& s, const TypedTree& t, const Rational& c);
void add_term(ForestSum& s, const Forest& f, const Rational& c);
void add_term(TensorSum& s, const Forest& l, const Forest& r, const Rational& c);
void add_term(ForestTensorSum& s, const std::vector<Forest>& legs, const Rational& c);
TreeSum tree_sum_of(const TypedTree& t);
TreeSum scaled(const TreeSum& s, const Rational& c);
TreeSum sum_add(const TreeSum& a, const TreeSum& b);
bool is_zero(const TreeSum& s);

/// Grafting constructor: the tree with a new root decorated d and children
/// a_i T_i; multilinear in every type and subtree.
TreeSum b_d(int dec, const std::vector<std::pair<Tensor, TreeSum>>& args);

/// ⟨T_dual, T⟩: sum over rooted isomorphisms of the product of dual-type
/// evaluations and decoration deltas; computed recursively, automorphism
/// multiplicities via a permanent over matching children.
Rational pairing(const TypedTree& t_dual, const TypedTree& t);

/// All trees with vertex decorations {0..n-1} each used once and edges typed
/// by {0..d-1}. Exhaustive and duplicate-free; the count is n^{n-1}·d^{n-1}.
/// Throws when that count exceeds the budget.
std::vector<TypedTree> enumerate_labeled(int n, int d);

/// All decorated typed trees with `n` vertices over |D| decorations and d
/// edge types (test-suite generator).
std::vector<TypedTree> enumerate_trees(int n, int num_dec, int d);

std::string tree_str(const TypedTree& t, const DecorationSet& dec, const Basis& basis);
std::string forest_str(const Forest& f, const DecorationSet& dec, const Basis& basis);

}  // namespace prelie
