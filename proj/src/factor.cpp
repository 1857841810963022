#include "charpoly/factor.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace charpoly {

bool check_subadditivity(const Permutation& a, const Permutation& b) {
    const Permutation ab = compose(a, b);
    return a.kappa() + b.kappa() <= a.size() + ab.kappa();
}

bool is_top_product(const Permutation& a, const Permutation& b) {
    const Permutation ab = compose(a, b);
    return a.kappa() + b.kappa() == a.size() + ab.kappa();
}

namespace {

// Cycle index of every symbol (0-based symbols and indices).
std::vector<int> cycle_index(const Permutation& a, int& count) {
    std::vector<int> idx(static_cast<std::size_t>(a.size()), -1);
    const auto img = a.images0();
    count = 0;
    for (std::size_t s = 0; s < idx.size(); ++s) {
        if (idx[s] >= 0) continue;
        for (auto x = s; idx[x] < 0; x = static_cast<std::size_t>(img[x])) idx[x] = count;
        ++count;
    }
    return idx;
}

int find_root(std::vector<int>& parent, int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
        parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
        x = parent[static_cast<std::size_t>(x)];
    }
    return x;
}

// A connected piece: `alphas` alpha-cycles (local ids 0..alphas-1) and, per
// product cycle, the sorted local ids of the alpha-cycles it meets.
struct Piece {
    int alphas = 0;
    std::vector<std::vector<int>> products;
    friend auto operator<=>(const Piece&, const Piece&) = default;
};

MultiPoly piece_polynomial(const Piece& piece, int m) {
    auto ring = pq_ring(m);
    PolyAccumulator acc(ring);
    std::vector<int> colours(static_cast<std::size_t>(piece.alphas), 1);
    for (;;) {
        Exponents e(static_cast<std::size_t>(2 * m));
        for (int c : colours) e.add(static_cast<std::size_t>(c - 1), 1);
        for (const auto& meets : piece.products) {
            int top = 0;
            for (int a : meets) top = std::max(top, colours[static_cast<std::size_t>(a)]);
            e.add(static_cast<std::size_t>(m + top - 1), 1);
        }
        acc.add_term(e, 1);
        std::size_t i = colours.size();
        while (i > 0 && colours[i - 1] == m) colours[--i] = 1;
        if (i == 0) break;
        ++colours[i - 1];
    }
    return acc.take();
}

class FactoredSummer {
public:
    explicit FactoredSummer(int m) : m_(m) {}

    MultiPoly weight(const Permutation& alpha, const Permutation& gamma) {
        int na = 0;
        int ng = 0;
        const auto ai = cycle_index(alpha, na);
        const auto gi = cycle_index(gamma, ng);
        std::vector<int> parent(static_cast<std::size_t>(na));
        std::iota(parent.begin(), parent.end(), 0);
        std::vector<int> first_alpha(static_cast<std::size_t>(ng), -1);
        for (std::size_t s = 0; s < ai.size(); ++s) {
            int& f = first_alpha[static_cast<std::size_t>(gi[s])];
            if (f < 0) {
                f = ai[s];
            } else {
                parent[static_cast<std::size_t>(find_root(parent, ai[s]))] = find_root(parent, f);
            }
        }
        // Local ids in order of first appearance within each piece.
        std::map<int, Piece> pieces;
        std::vector<int> local(static_cast<std::size_t>(na), -1);
        for (int a = 0; a < na; ++a) {
            Piece& piece = pieces[find_root(parent, a)];
            local[static_cast<std::size_t>(a)] = piece.alphas++;
        }
        std::vector<std::vector<int>> meets(static_cast<std::size_t>(ng));
        for (std::size_t s = 0; s < ai.size(); ++s) meets[static_cast<std::size_t>(gi[s])].push_back(ai[s]);
        for (auto& list : meets) {
            std::sort(list.begin(), list.end());
            list.erase(std::unique(list.begin(), list.end()), list.end());
            Piece& piece = pieces[find_root(parent, list.front())];
            std::vector<int> ids;
            for (int a : list) ids.push_back(local[static_cast<std::size_t>(a)]);
            std::sort(ids.begin(), ids.end());
            piece.products.push_back(std::move(ids));
        }
        MultiPoly out = MultiPoly::constant(pq_ring(m_), 1);
        for (auto& [root, piece] : pieces) {
            std::sort(piece.products.begin(), piece.products.end());
            auto it = memo_.find(piece);
            if (it == memo_.end()) it = memo_.emplace(piece, piece_polynomial(piece, m_)).first;
            out *= it->second;
        }
        return out;
    }

private:
    int m_;
    std::map<Piece, MultiPoly> memo_;
};

}  // namespace

MultiPoly coloured_weight_sum(const Permutation& target, int m, Stratum stratum, SumStrategy strategy) {
    if (m < 1) throw std::invalid_argument("number of colours must be positive");
    const int k = target.size();
    const int top = k + target.kappa();
    auto ring = pq_ring(m);
    PolyAccumulator acc(ring);
    FactoredSummer summer(m);
    for_each_permutation(k, [&](const Permutation& alpha) {
        const Permutation gamma = compose(alpha, target);
        if (stratum == Stratum::Top && alpha.kappa() + gamma.kappa() != top) return;
        if (strategy == SumStrategy::Factored) {
            acc.add(summer.weight(alpha, gamma));
            return;
        }
        const auto cycles = alpha.cycles();
        std::vector<int> colours(cycles.size(), 1);
        for (;;) {
            const auto ap = ColouredPermutation::from_cycle_colours(alpha, colours, m);
            const auto prod = coloured_compose(ap, target);
            acc.add_term(weight_monomial(ap, VariableFamily::P) + weight_monomial(prod, VariableFamily::Q), 1);
            std::size_t i = colours.size();
            while (i > 0 && colours[i - 1] == m) colours[--i] = 1;
            if (i == 0) break;
            ++colours[i - 1];
        }
    });
    return acc.take();
}

MultiPoly topfact_mu(const Partition& mu, int m) {
    return coloured_weight_sum(canonical_class_rep(mu), m, Stratum::Top);
}

MultiPoly conjecture_sum(const Partition& mu, int m) {
    return coloured_weight_sum(canonical_class_rep(mu), m, Stratum::All);
}

PowerSeries topfact_series(int m, int max_k) {
    if (max_k < 1) throw std::invalid_argument("topfact_series needs K >= 1");
    PowerSeries out(pq_ring(m), max_k + 1);
    for (int k = 1; k <= max_k; ++k) {
        out.coeff(k + 1) = coloured_weight_sum(full_cycle(k), m, Stratum::Top);
    }
    return out;
}

std::vector<ProductComponent> decompose_product(const Permutation& a, const Permutation& b) {
    if (a.size() != b.size()) throw std::invalid_argument("decompose_product: sizes differ");
    if (!is_top_product(a, b)) throw std::invalid_argument("decompose_product: not a top product");
    const Permutation gamma = compose(a, b);
    int ng = 0;
    const auto gi = cycle_index(gamma, ng);
    const auto a_cycles = a.cycles();
    const auto b_cycles = b.cycles();
    std::vector<ProductComponent> out;
    for (const auto& g : gamma.cycles()) {
        ProductComponent comp;
        comp.gamma_cycle = g;
        comp.support = g;
        std::sort(comp.support.begin(), comp.support.end());
        const int here = gi[static_cast<std::size_t>(g.front() - 1)];
        auto collect = [&](const std::vector<Cycle>& cycles, std::vector<Cycle>& into, const char* name) {
            for (const auto& c : cycles) {
                const auto inside = std::count_if(c.begin(), c.end(), [&](int x) {
                    return gi[static_cast<std::size_t>(x - 1)] == here;
                });
                if (inside == 0) continue;
                if (inside != static_cast<std::ptrdiff_t>(c.size())) {
                    throw std::logic_error(std::string("decompose_product: a cycle of ") + name +
                                           " crosses product cycles");
                }
                into.push_back(c);
            }
        };
        collect(a_cycles, comp.alpha_cycles, "a");
        collect(b_cycles, comp.beta_cycles, "b");
        const int size = static_cast<int>(g.size());
        if (static_cast<int>(comp.alpha_cycles.size() + comp.beta_cycles.size()) != size + 1) {
            throw std::logic_error("decompose_product: component is not minimal");
        }
        // With both factors closed on the support, a_i b_i agrees with gamma there.
        out.push_back(std::move(comp));
    }
    return out;
}

}  // namespace charpoly
