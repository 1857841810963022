#pragma once

// Black and white plane trees: the Goulden-Jackson correspondence with top
// factorizations of (1 2 .. k), colour propagation, enumeration, and the
// planted classes B_i, W_i, W^_i with their series recursions.

#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "charpoly/colours.hpp"
#include "charpoly/perm.hpp"
#include "charpoly/polyring.hpp"
#include "charpoly/series.hpp"

namespace charpoly {

enum class VertexClass { White, Black };

enum class RootKind {
    EdgeRooted,    ///< vertex 0 is white; the root edge joins it to its first child
    PlantedBlack,  ///< hangs from a colourless black planted vertex; vertex 0 is white
    PlantedWhite,  ///< hangs from a colourless white planted vertex; vertex 0 is black
};

struct TreeVertex {
    VertexClass cls = VertexClass::White;
    int label = 0;  ///< colour in 1..m, 0 when not yet coloured
    int parent = -1;
    std::vector<int> children;

    friend bool operator==(const TreeVertex&, const TreeVertex&) = default;
};

/// Vertices are stored in preorder with vertex 0 the root vertex. Around a
/// vertex the clockwise order of edges is (parent edge, children in order);
/// at the root of an edge-rooted tree it is the children in order, starting
/// with the root edge.
class PlaneTree {
public:
    /// Nested brackets, one pair per vertex, e.g. "[[][[]]]"; classes alternate from the root.
    static PlaneTree from_brackets(std::string_view text, RootKind kind = RootKind::EdgeRooted);

    RootKind kind() const noexcept { return kind_; }
    const std::vector<TreeVertex>& vertices() const noexcept { return vertices_; }
    const TreeVertex& vertex(int v) const { return vertices_.at(static_cast<std::size_t>(v)); }
    int vertex_count() const noexcept { return static_cast<int>(vertices_.size()); }
    int edge_count() const noexcept { return vertex_count() - 1; }
    /// Vertex ids of the given class, in preorder.
    std::vector<int> vertices_of(VertexClass cls) const;
    std::string to_brackets() const;
    /// Brackets with class and label, e.g. "W1[B2[W2] B1]".
    std::string to_string() const;

    void set_label(int v, int label);
    /// Throws std::invalid_argument describing the first violated invariant:
    /// alternating classes, labels in 1..m, black labels given by the max
    /// rule, and the root rules of the planted kind.
    void validate(int m) const;

    friend bool operator==(const PlaneTree&, const PlaneTree&) = default;

private:
    friend class TreeBuilder;
    RootKind kind_ = RootKind::EdgeRooted;
    std::vector<TreeVertex> vertices_;
};

/// Labels the edges 1..k by walking the single face with the tree on the
/// right, starting along the root edge, labelling on each white-to-black
/// step. Returns (alpha, beta): clockwise edge labels around white and black
/// vertices; alpha beta = (1 2 .. k). Throws std::invalid_argument unless
/// edge-rooted with at least one edge.
std::pair<Permutation, Permutation> tree_to_factorization(const PlaneTree& t);

/// Edge labels in the order of the vertex below each edge (index v-1 for vertex v).
std::vector<int> edge_labels(const PlaneTree& t);

/// Inverse of tree_to_factorization. Throws std::invalid_argument
/// ("not a top factorization") unless ab = (1 2 .. k) and kappa(a) + kappa(b) = k + 1.
PlaneTree factorization_to_tree(const Permutation& a, const Permutation& b);

/// Sets the white labels (in preorder of white vertices) and derives black
/// labels by the max rule. The root of a white-planted tree keeps its label.
PlaneTree propagate_colours(const PlaneTree& t, const std::vector<int>& white_labels);

/// White labels taken from (alpha, psi): a white vertex gets the colour of
/// the alpha-cycle of its edge labels. Requires alpha = tree_to_factorization(t).first.
PlaneTree propagate_colours(const PlaneTree& t, const ColouredPermutation& alpha_psi);

/// (p-weight, q-weight) exponent vectors in pq_ring(m): labels of white and black vertices.
std::pair<Exponents, Exponents> tree_weight(const PlaneTree& t, int m);
MultiPoly tree_monomial(const PlaneTree& t, int m);

/// Uncoloured edge-rooted trees with k edges, in lexicographic bracket order.
void for_each_tree_shape(int k, const std::function<void(const PlaneTree&)>& visit);

/// Every coloured edge-rooted tree with k edges: shapes in bracket order,
/// white labellings lexicographic in preorder.
void for_each_tree(int k, int m, const std::function<void(const PlaneTree&)>& visit);
std::vector<PlaneTree> enumerate_trees(int k, int m);

/// Order N; [x^v] sums the weights of coloured edge-rooted trees with v vertices.
PowerSeries t_series_enumerated(int m, int order);

/// Graphviz export; whites are circles, blacks filled boxes, labels are colours.
std::string to_dot(const PlaneTree& t);

struct PlantedSeries {
    std::vector<PowerSeries> b;      ///< B_1..B_m
    std::vector<PowerSeries> w;      ///< W_1..W_m
    std::vector<PowerSeries> w_hat;  ///< W^_1..W^_m
};

/// Fixed point of the planted-class recursions to order N, iterated from B_i = p_i x.
PlantedSeries planted_series(int m, int order);

/// B_i and W_i summed over enumerated planted trees with up to N non-planted vertices.
PlantedSeries planted_series_enumerated(int m, int order);

/// B_i (I - 1 - (p_{i+1}+..+p_m) x + q_i x) - p_i x (B_1 + .. + B_i - 1), I = B_1 + .. + B_m.
PowerSeries verify_lemma1(int i, int m, int order);

/// B_1+..+B_i - 1 - (I-1) prod_{j>i} (I-1-(p_j+..+p_m)x+q_j x)/(I-1-(p_{j+1}+..+p_m)x+q_j x).
PowerSeries verify_lemma2(int i, int m, int order);

}  // namespace charpoly
