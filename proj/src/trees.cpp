#include "charpoly/trees.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace charpoly {

namespace {

VertexClass other(VertexClass c) { return c == VertexClass::White ? VertexClass::Black : VertexClass::White; }

VertexClass root_class(RootKind kind) {
    return kind == RootKind::PlantedWhite ? VertexClass::Black : VertexClass::White;
}

}  // namespace

// Renumbers a rooted ordered tree, given as child lists over arbitrary ids,
// into preorder.
class TreeBuilder {
public:
    static PlaneTree build(RootKind kind, int root, const std::vector<std::vector<int>>& children) {
        PlaneTree t;
        t.kind_ = kind;
        std::vector<int> new_id(children.size(), -1);
        std::vector<std::pair<int, int>> stack{{root, -1}};  // (old id, new parent)
        while (!stack.empty()) {
            const auto [old, parent] = stack.back();
            stack.pop_back();
            if (new_id[static_cast<std::size_t>(old)] >= 0) throw std::invalid_argument("vertex reached twice");
            const int id = static_cast<int>(t.vertices_.size());
            new_id[static_cast<std::size_t>(old)] = id;
            TreeVertex v;
            v.parent = parent;
            v.cls = parent < 0 ? root_class(kind) : other(t.vertices_[static_cast<std::size_t>(parent)].cls);
            t.vertices_.push_back(v);
            if (parent >= 0) t.vertices_[static_cast<std::size_t>(parent)].children.push_back(id);
            const auto& kids = children[static_cast<std::size_t>(old)];
            for (auto it = kids.rbegin(); it != kids.rend(); ++it) stack.emplace_back(*it, id);
        }
        return t;
    }
};

// ---------------------------------------------------------------- PlaneTree

PlaneTree PlaneTree::from_brackets(std::string_view text, RootKind kind) {
    std::vector<std::vector<int>> children;
    std::vector<int> open;
    int root = -1;
    for (char ch : text) {
        if (ch == '[') {
            const int id = static_cast<int>(children.size());
            children.emplace_back();
            if (open.empty()) {
                if (root >= 0) throw std::invalid_argument("brackets: more than one root");
                root = id;
            } else {
                children[static_cast<std::size_t>(open.back())].push_back(id);
            }
            open.push_back(id);
        } else if (ch == ']') {
            if (open.empty()) throw std::invalid_argument("brackets: unbalanced ']'");
            open.pop_back();
        } else if (!std::isspace(static_cast<unsigned char>(ch))) {
            throw std::invalid_argument("brackets: unexpected character");
        }
    }
    if (root < 0 || !open.empty()) throw std::invalid_argument("brackets: unbalanced or empty");
    return TreeBuilder::build(kind, root, children);
}

std::vector<int> PlaneTree::vertices_of(VertexClass cls) const {
    std::vector<int> out;
    for (int v = 0; v < vertex_count(); ++v) {
        if (vertices_[static_cast<std::size_t>(v)].cls == cls) out.push_back(v);
    }
    return out;
}

namespace {

// Preorder is stored, so the closing brackets follow from the parent links.
template <typename Open, typename Close>
void walk_brackets(const std::vector<TreeVertex>& vs, Open&& open, Close&& close) {
    std::vector<int> path;
    for (int v = 0; v < static_cast<int>(vs.size()); ++v) {
        while (!path.empty() && path.back() != vs[static_cast<std::size_t>(v)].parent) {
            close(path.back());
            path.pop_back();
        }
        open(v, !path.empty() && vs[static_cast<std::size_t>(path.back())].children.front() != v);
        path.push_back(v);
    }
    while (!path.empty()) {
        close(path.back());
        path.pop_back();
    }
}

}  // namespace

std::string PlaneTree::to_brackets() const {
    std::string out;
    walk_brackets(vertices_, [&](int, bool) { out += '['; }, [&](int) { out += ']'; });
    return out;
}

std::string PlaneTree::to_string() const {
    std::string out;
    walk_brackets(
        vertices_,
        [&](int v, bool sibling) {
            const auto& vx = vertices_[static_cast<std::size_t>(v)];
            if (sibling) out += ' ';
            out += vx.cls == VertexClass::White ? 'W' : 'B';
            if (vx.label) out += std::to_string(vx.label);
            if (!vx.children.empty()) out += '[';
        },
        [&](int v) {
            if (!vertices_[static_cast<std::size_t>(v)].children.empty()) out += ']';
        });
    return out;
}

void PlaneTree::set_label(int v, int label) { vertices_.at(static_cast<std::size_t>(v)).label = label; }

void PlaneTree::validate(int m) const {
    if (vertices_.empty()) throw std::invalid_argument("tree has no vertices");
    if (vertices_[0].parent != -1 || vertices_[0].cls != root_class(kind_)) {
        throw std::invalid_argument("root vertex has the wrong class or a parent");
    }
    for (int v = 0; v < vertex_count(); ++v) {
        const auto& vx = vertices_[static_cast<std::size_t>(v)];
        if (vx.label < 1 || vx.label > m) {
            throw std::invalid_argument("vertex " + std::to_string(v) + " has label outside 1..m");
        }
        int child_max = 0;
        for (int c : vx.children) {
            const auto& cx = vertices_.at(static_cast<std::size_t>(c));
            if (cx.parent != v) throw std::invalid_argument("inconsistent parent link");
            if (cx.cls == vx.cls) throw std::invalid_argument("adjacent vertices share a colour class");
            child_max = std::max(child_max, cx.label);
        }
        if (vx.cls != VertexClass::Black) continue;
        if (v == 0 && kind_ == RootKind::PlantedWhite) {
            if (child_max > vx.label) throw std::invalid_argument("planted black root below a larger white child");
            continue;
        }
        const int parent_label = vx.parent >= 0 ? vertices_[static_cast<std::size_t>(vx.parent)].label : 0;
        if (vx.label != std::max(child_max, parent_label)) {
            throw std::invalid_argument("black vertex " + std::to_string(v) + " breaks the max rule");
        }
    }
}

// ------------------------------------------------------- Goulden-Jackson map

namespace {

// Clockwise edges around each vertex; edge v joins vertex v to its parent.
std::vector<std::vector<int>> rotations(const PlaneTree& t) {
    std::vector<std::vector<int>> rot(static_cast<std::size_t>(t.vertex_count()));
    for (int v = 0; v < t.vertex_count(); ++v) {
        auto& r = rot[static_cast<std::size_t>(v)];
        if (t.vertex(v).parent >= 0) r.push_back(v);
        for (int c : t.vertex(v).children) r.push_back(c);
    }
    return rot;
}

void require_edge_rooted(const PlaneTree& t) {
    if (t.kind() != RootKind::EdgeRooted) throw std::invalid_argument("tree is not edge-rooted");
    if (t.edge_count() < 1) throw std::invalid_argument("edge-rooted tree needs at least one edge");
}

}  // namespace

std::vector<int> edge_labels(const PlaneTree& t) {
    require_edge_rooted(t);
    const auto rot = rotations(t);
    const int k = t.edge_count();
    // position of edge e in the rotation of each endpoint
    std::vector<int> pos_child(static_cast<std::size_t>(t.vertex_count()), 0);
    std::vector<int> pos_parent(static_cast<std::size_t>(t.vertex_count()), 0);
    for (int v = 0; v < t.vertex_count(); ++v) {
        const auto& r = rot[static_cast<std::size_t>(v)];
        for (std::size_t i = 0; i < r.size(); ++i) {
            if (r[i] == v) {
                pos_child[static_cast<std::size_t>(v)] = static_cast<int>(i);
            } else {
                pos_parent[static_cast<std::size_t>(r[i])] = static_cast<int>(i);
            }
        }
    }
    std::vector<int> labels(static_cast<std::size_t>(k), 0);
    int next = 1;
    int at = 0;
    int edge = t.vertex(0).children.front();
    for (int step = 0; step < 2 * k; ++step) {
        const bool down = edge != at;  // edge e leads down from its parent
        const int to = down ? edge : t.vertex(edge).parent;
        if (t.vertex(at).cls == VertexClass::White) {
            auto& slot = labels[static_cast<std::size_t>(edge - 1)];
            if (slot != 0) throw std::logic_error("edge labelled twice in face walk");
            slot = next++;
        }
        // leave `to` by the clockwise successor of the edge we came in on
        const auto& r = rot[static_cast<std::size_t>(to)];
        const int pos = down ? pos_child[static_cast<std::size_t>(edge)] : pos_parent[static_cast<std::size_t>(edge)];
        at = to;
        edge = r[static_cast<std::size_t>(pos + 1) % r.size()];
    }
    if (next != k + 1) throw std::logic_error("face walk did not label every edge");
    return labels;
}

std::pair<Permutation, Permutation> tree_to_factorization(const PlaneTree& t) {
    const auto labels = edge_labels(t);
    const auto rot = rotations(t);
    const int k = t.edge_count();
    std::vector<Cycle> white;
    std::vector<Cycle> black;
    for (int v = 0; v < t.vertex_count(); ++v) {
        Cycle c;
        for (int e : rot[static_cast<std::size_t>(v)]) c.push_back(labels[static_cast<std::size_t>(e - 1)]);
        (t.vertex(v).cls == VertexClass::White ? white : black).push_back(std::move(c));
    }
    return {Permutation::from_cycles(k, white), Permutation::from_cycles(k, black)};
}

PlaneTree factorization_to_tree(const Permutation& a, const Permutation& b) {
    const int k = a.size();
    if (k < 1 || b.size() != k || compose(a, b) != full_cycle(k) || a.kappa() + b.kappa() != k + 1) {
        throw std::invalid_argument("not a top factorization of (1 2 .. k)");
    }
    // Vertex ids: white cycles 0..wa-1, black cycles wa..; edge label e joins both.
    const auto a_cycles = a.cycles();
    const auto b_cycles = b.cycles();
    const int wa = static_cast<int>(a_cycles.size());
    std::vector<int> white_of(static_cast<std::size_t>(k));
    std::vector<int> black_of(static_cast<std::size_t>(k));
    for (int i = 0; i < wa; ++i) {
        for (int x : a_cycles[static_cast<std::size_t>(i)]) white_of[static_cast<std::size_t>(x - 1)] = i;
    }
    for (std::size_t j = 0; j < b_cycles.size(); ++j) {
        for (int x : b_cycles[j]) black_of[static_cast<std::size_t>(x - 1)] = wa + static_cast<int>(j);
    }
    std::vector<std::vector<int>> children(static_cast<std::size_t>(wa) + b_cycles.size());
    std::vector<bool> seen(children.size(), false);
    // (vertex, edge it hangs from; 0 for the root)
    std::vector<std::pair<int, int>> todo{{white_of[0], 0}};
    seen[static_cast<std::size_t>(white_of[0])] = true;
    while (!todo.empty()) {
        const auto [v, in] = todo.back();
        todo.pop_back();
        const bool white = v < wa;
        const Permutation& rot = white ? a : b;
        // The root visits its whole rotation from edge 1; others stop at their parent edge.
        const int stop = in == 0 ? 1 : in;
        int e = in == 0 ? 1 : rot(in);
        if (in != 0 && e == stop) continue;  // leaf
        do {
            const int child = white ? black_of[static_cast<std::size_t>(e - 1)] : white_of[static_cast<std::size_t>(e - 1)];
            if (seen[static_cast<std::size_t>(child)]) throw std::invalid_argument("not a top factorization: cycle in graph");
            seen[static_cast<std::size_t>(child)] = true;
            children[static_cast<std::size_t>(v)].push_back(child);
            todo.emplace_back(child, e);
            e = rot(e);
        } while (e != stop);
    }
    return TreeBuilder::build(RootKind::EdgeRooted, white_of[0], children);
}

// ---------------------------------------------------------------- colouring

PlaneTree propagate_colours(const PlaneTree& t, const std::vector<int>& white_labels) {
    PlaneTree out = t;
    const auto whites = t.vertices_of(VertexClass::White);
    if (whites.size() != white_labels.size()) throw std::invalid_argument("one label per white vertex required");
    for (std::size_t i = 0; i < whites.size(); ++i) out.set_label(whites[i], white_labels[i]);
    for (int v : t.vertices_of(VertexClass::Black)) {
        if (v == 0 && t.kind() == RootKind::PlantedWhite) continue;
        const auto& vx = out.vertex(v);
        int label = vx.parent >= 0 ? out.vertex(vx.parent).label : 0;
        for (int c : vx.children) label = std::max(label, out.vertex(c).label);
        out.set_label(v, label);
    }
    return out;
}

PlaneTree propagate_colours(const PlaneTree& t, const ColouredPermutation& alpha_psi) {
    const auto labels = edge_labels(t);
    if (alpha_psi.perm().size() != t.edge_count()) throw std::invalid_argument("colouring has the wrong size");
    std::vector<int> white_labels;
    for (int v : t.vertices_of(VertexClass::White)) {
        const auto& vx = t.vertex(v);
        const int edge = vx.parent >= 0 ? v : vx.children.front();
        white_labels.push_back(alpha_psi.colour_of_symbol(labels[static_cast<std::size_t>(edge - 1)]));
    }
    return propagate_colours(t, white_labels);
}

std::pair<Exponents, Exponents> tree_weight(const PlaneTree& t, int m) {
    Exponents p(static_cast<std::size_t>(2 * m));
    Exponents q(static_cast<std::size_t>(2 * m));
    for (const auto& vx : t.vertices()) {
        if (vx.label < 1 || vx.label > m) throw std::invalid_argument("tree_weight: vertex label outside 1..m");
        if (vx.cls == VertexClass::White) {
            p.add(static_cast<std::size_t>(vx.label - 1), 1);
        } else {
            q.add(static_cast<std::size_t>(m + vx.label - 1), 1);
        }
    }
    return {p, q};
}

MultiPoly tree_monomial(const PlaneTree& t, int m) {
    const auto [p, q] = tree_weight(t, m);
    return MultiPoly::monomial(pq_ring(m), p + q);
}

// -------------------------------------------------------------- enumeration

namespace {

void dyck_words(int k, const std::function<void(const std::string&)>& visit) {
    std::string word;
    std::function<void(int, int)> grow = [&](int open, int close) {
        if (close == k) {
            visit(word);
            return;
        }
        if (open < k) {
            word.push_back('[');
            grow(open + 1, close);
            word.pop_back();
        }
        if (close < open) {
            word.push_back(']');
            grow(open, close + 1);
            word.pop_back();
        }
    };
    grow(0, 0);
}

// Every labelling of the whites of `shape` by 1..m (root label fixed when
// root_label > 0 and the root is white), blacks by the max rule.
void for_each_labelling(const PlaneTree& shape, int m, int root_label,
                        const std::function<void(const PlaneTree&)>& visit) {
    PlaneTree base = shape;
    if (root_label > 0) base.set_label(0, root_label);
    const auto whites = shape.vertices_of(VertexClass::White);
    const bool fixed = root_label > 0 && !whites.empty() && whites.front() == 0;
    std::vector<int> labels(whites.size(), 1);
    if (fixed) labels[0] = root_label;
    for (;;) {
        visit(propagate_colours(base, labels));
        std::size_t i = labels.size();
        const std::size_t lowest = fixed ? 1 : 0;
        while (i > lowest && labels[i - 1] == m) labels[--i] = 1;
        if (i == lowest) break;
        ++labels[i - 1];
    }
}

}  // namespace

void for_each_tree_shape(int k, const std::function<void(const PlaneTree&)>& visit) {
    if (k < 1) throw std::invalid_argument("edge-rooted trees need k >= 1");
    dyck_words(k, [&](const std::string& w) { visit(PlaneTree::from_brackets("[" + w + "]")); });
}

void for_each_tree(int k, int m, const std::function<void(const PlaneTree&)>& visit) {
    if (m < 1) throw std::invalid_argument("number of colours must be positive");
    for_each_tree_shape(k, [&](const PlaneTree& shape) { for_each_labelling(shape, m, 0, visit); });
}

std::vector<PlaneTree> enumerate_trees(int k, int m) {
    std::vector<PlaneTree> out;
    for_each_tree(k, m, [&](const PlaneTree& t) { out.push_back(t); });
    return out;
}

PowerSeries t_series_enumerated(int m, int order) {
    auto ring = pq_ring(m);
    PowerSeries out(ring, order);
    for (int v = 2; v <= order; ++v) {
        PolyAccumulator acc(ring);
        for_each_tree(v - 1, m, [&](const PlaneTree& t) {
            const auto [p, q] = tree_weight(t, m);
            acc.add_term(p + q, 1);
        });
        out.coeff(v) = acc.take();
    }
    return out;
}

std::string to_dot(const PlaneTree& t) {
    std::ostringstream os;
    os << "graph tree {\n";
    for (int v = 0; v < t.vertex_count(); ++v) {
        const auto& vx = t.vertex(v);
        os << "  v" << v;
        if (vx.cls == VertexClass::White) {
            os << " [shape=circle";
        } else {
            os << " [shape=box, style=filled, fillcolor=black, fontcolor=white";
        }
        os << ", label=\"" << (vx.label ? std::to_string(vx.label) : "") << "\"];\n";
    }
    const bool labelled = t.kind() == RootKind::EdgeRooted && t.edge_count() > 0;
    const auto labels = labelled ? edge_labels(t) : std::vector<int>{};
    for (int v = 1; v < t.vertex_count(); ++v) {
        os << "  v" << t.vertex(v).parent << " -- v" << v;
        if (labelled) {
            os << " [label=\"" << labels[static_cast<std::size_t>(v - 1)] << '"';
            if (v == t.vertex(0).children.front()) os << ", penwidth=3";
            os << ']';
        }
        os << ";\n";
    }
    os << "}\n";
    return os.str();
}

// ----------------------------------------------------------- planted series

namespace {

PowerSeries pad(const PowerSeries& s, int order) {
    PowerSeries out(s.ring(), order);
    for (int i = 0; i <= std::min(order, s.order()); ++i) out.coeff(i) = s[i];
    return out;
}

PowerSeries one(const RingPtr& ring, int order) {
    return PowerSeries::constant(ring, MultiPoly::constant(ring, 1), order);
}

PowerSeries x_times(const RingPtr& ring, const MultiPoly& c, int order) {
    return PowerSeries::monomial(ring, c, 1, order);
}

MultiPoly var(int m, std::size_t i) { return MultiPoly::variable(pq_ring(m), i); }

MultiPoly p_tail_poly(int m, int j) {
    MultiPoly sum(pq_ring(m));
    for (int i = std::max(j, 1); i <= m; ++i) sum += var(m, static_cast<std::size_t>(i - 1));
    return sum;
}

// W and W^ from B at the order of B.
void fill_white(PlantedSeries& s, int m) {
    auto ring = pq_ring(m);
    const int order = s.b.front().order();
    s.w.clear();
    s.w_hat.clear();
    PowerSeries partial(ring, order);  // S_{i-1}
    for (int i = 1; i <= m; ++i) {
        const MultiPoly qi = var(m, static_cast<std::size_t>(m + i - 1));
        PowerSeries hat = i == 1 ? PowerSeries(ring, order)
                                 : x_times(ring, qi, order) * partial * reciprocal(one(ring, order) - partial);
        partial += s.b[static_cast<std::size_t>(i - 1)];
        s.w.push_back(x_times(ring, qi, order) * reciprocal(one(ring, order) - partial) - hat);
        s.w_hat.push_back(std::move(hat));
    }
}

void step_black(PlantedSeries& s, int m) {
    auto ring = pq_ring(m);
    const int order = s.b.front().order();
    for (int i = 1; i <= m; ++i) {
        PowerSeries below = s.w[static_cast<std::size_t>(i - 1)] + s.w_hat[static_cast<std::size_t>(i - 1)];
        for (int j = i + 1; j <= m; ++j) {
            below += s.w[static_cast<std::size_t>(j - 1)] -
                     x_times(ring, var(m, static_cast<std::size_t>(m + j - 1)), order);
        }
        s.b[static_cast<std::size_t>(i - 1)] =
            x_times(ring, var(m, static_cast<std::size_t>(i - 1)), order) * reciprocal(one(ring, order) - below);
    }
}

}  // namespace

PlantedSeries planted_series(int m, int order) {
    if (m < 1) throw std::invalid_argument("number of colours must be positive");
    if (order < 1) throw std::invalid_argument("planted_series needs order >= 1");
    auto ring = pq_ring(m);
    PlantedSeries s;
    for (int i = 1; i <= m; ++i) s.b.push_back(x_times(ring, var(m, static_cast<std::size_t>(i - 1)), 1));
    // Each pass fixes one more power of x, so work at the order just reached.
    for (int o = 2; o <= order; ++o) {
        for (auto& b : s.b) b = pad(b, o);
        fill_white(s, m);
        step_black(s, m);
    }
    fill_white(s, m);
    return s;
}

PlantedSeries planted_series_enumerated(int m, int order) {
    if (m < 1) throw std::invalid_argument("number of colours must be positive");
    auto ring = pq_ring(m);
    PlantedSeries s;
    for (int i = 0; i < m; ++i) {
        s.b.emplace_back(ring, order);
        s.w.emplace_back(ring, order);
        s.w_hat.emplace_back(ring, order);
    }
    for (int v = 1; v <= order; ++v) {
        std::vector<std::string> shapes;
        if (v == 1) {
            shapes.emplace_back("[]");
        } else {
            dyck_words(v - 1, [&](const std::string& w) { shapes.push_back("[" + w + "]"); });
        }
        for (int i = 1; i <= m; ++i) {
            PolyAccumulator b(ring);
            PolyAccumulator w(ring);
            PolyAccumulator w_hat(ring);
            for (const auto& text : shapes) {
                for_each_labelling(PlaneTree::from_brackets(text, RootKind::PlantedBlack), m, i,
                                   [&](const PlaneTree& t) {
                                       const auto [p, q] = tree_weight(t, m);
                                       b.add_term(p + q, 1);
                                   });
                PlaneTree black_root = PlaneTree::from_brackets(text, RootKind::PlantedWhite);
                black_root.set_label(0, i);
                for_each_labelling(black_root, m, 0, [&](const PlaneTree& t) {
                    int child_max = 0;
                    for (int c : t.vertex(0).children) child_max = std::max(child_max, t.vertex(c).label);
                    if (child_max > i) return;
                    const auto [p, q] = tree_weight(t, m);
                    (child_max == i || child_max == 0 ? w : w_hat).add_term(p + q, 1);
                });
            }
            s.b[static_cast<std::size_t>(i - 1)].coeff(v) = b.take();
            s.w[static_cast<std::size_t>(i - 1)].coeff(v) = w.take();
            s.w_hat[static_cast<std::size_t>(i - 1)].coeff(v) = w_hat.take();
        }
    }
    return s;
}

namespace {

PowerSeries sum_b(const PlantedSeries& s, int upto, const RingPtr& ring, int order) {
    PowerSeries out(ring, order);
    for (int j = 1; j <= upto; ++j) out += s.b[static_cast<std::size_t>(j - 1)];
    return out;
}

}  // namespace

PowerSeries verify_lemma1(int i, int m, int order) {
    if (i < 1 || i > m) throw std::invalid_argument("verify_lemma1 needs 1 <= i <= m");
    auto ring = pq_ring(m);
    const PlantedSeries s = planted_series(m, order);
    const PowerSeries big_i = sum_b(s, m, ring, order);
    const MultiPoly qi = var(m, static_cast<std::size_t>(m + i - 1));
    const PowerSeries factor = big_i - one(ring, order) - x_times(ring, p_tail_poly(m, i + 1) - qi, order);
    const PowerSeries rhs =
        x_times(ring, var(m, static_cast<std::size_t>(i - 1)), order) * (sum_b(s, i, ring, order) - one(ring, order));
    return s.b[static_cast<std::size_t>(i - 1)] * factor - rhs;
}

PowerSeries verify_lemma2(int i, int m, int order) {
    if (i < 0 || i > m) throw std::invalid_argument("verify_lemma2 needs 0 <= i <= m");
    auto ring = pq_ring(m);
    const PlantedSeries s = planted_series(m, order);
    const PowerSeries h = sum_b(s, m, ring, order) - one(ring, order);
    PowerSeries prod = h;
    for (int j = i + 1; j <= m; ++j) {
        const MultiPoly qj = var(m, static_cast<std::size_t>(m + j - 1));
        prod = prod * (h - x_times(ring, p_tail_poly(m, j) - qj, order)) *
               reciprocal(h - x_times(ring, p_tail_poly(m, j + 1) - qj, order));
    }
    return sum_b(s, i, ring, order) - one(ring, order) - prod;
}

}  // namespace charpoly
