#include "charpoly/stanley.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "charpoly/charlib.hpp"

namespace charpoly {

// -------------------------------------------------------------------- Shape

Shape::Shape(std::vector<int> p, std::vector<int> q) : p_(std::move(p)), q_(std::move(q)) {
    if (p_.empty() || p_.size() != q_.size()) throw std::invalid_argument("shape needs m >= 1 pairs (p_i, q_i)");
    for (std::size_t i = 0; i < p_.size(); ++i) {
        if (p_[i] < 1 || q_[i] < 1) throw std::invalid_argument("shape entries must be positive");
        if (i > 0 && q_[i] > q_[i - 1]) throw std::invalid_argument("shape needs q_1 >= q_2 >= ... >= q_m");
    }
}

int Shape::n() const noexcept {
    int n = 0;
    for (std::size_t i = 0; i < p_.size(); ++i) n += p_[i] * q_[i];
    return n;
}

Partition Shape::to_partition() const {
    std::vector<int> parts;
    for (std::size_t i = 0; i < p_.size(); ++i) parts.insert(parts.end(), static_cast<std::size_t>(p_[i]), q_[i]);
    return Partition(std::move(parts));
}

std::vector<mpq_class> Shape::point() const {
    std::vector<mpq_class> out;
    for (int v : p_) out.emplace_back(v);
    for (int v : q_) out.emplace_back(v);
    return out;
}

std::string Shape::to_string() const {
    std::ostringstream os;
    os << "p=(";
    for (std::size_t i = 0; i < p_.size(); ++i) os << (i ? "," : "") << p_[i];
    os << ") q=(";
    for (std::size_t i = 0; i < q_.size(); ++i) os << (i ? "," : "") << q_[i];
    os << ')';
    return os.str();
}

mpq_class evaluate(const MultiPoly& f, const Shape& shape) {
    const auto pt = shape.point();
    return f.eval(pt);
}

// ------------------------------------------------------------------ helpers

namespace {

MultiPoly p_var(int m, int i) { return MultiPoly::variable(pq_ring(m), static_cast<std::size_t>(i - 1)); }
MultiPoly q_var(int m, int i) { return MultiPoly::variable(pq_ring(m), static_cast<std::size_t>(m + i - 1)); }
MultiPoly constant(int m, const mpq_class& c) { return MultiPoly::constant(pq_ring(m), c); }

void check_km(int k, int m) {
    if (k < 1) throw std::invalid_argument("k must be at least 1");
    if (m < 1) throw std::invalid_argument("m must be at least 1");
}

}  // namespace

MultiPoly p_tail(int m, int j) {
    MultiPoly sum(pq_ring(m));
    for (int i = std::max(j, 1); i <= m; ++i) sum += p_var(m, i);
    return sum;
}

// ------------------------------------------------------------ residue route

MultiPoly f_k_residue(int k, int m) {
    check_km(k, m);
    auto ring = pq_ring(m);
    // (x)_k prod_j (x - A_j)_k / (x - B_j)_k with A_j = q_j + p_j + .. + p_m,
    // B_j = q_j + p_{j+1} + .. + p_m. It behaves like x^k at infinity, so
    // [x^{-1}] is [t^{k+1}] of the expansion in t = 1/x.
    std::vector<MultiPoly> numer;
    std::vector<MultiPoly> denom;
    for (int i = 1; i < k; ++i) numer.push_back(constant(m, i));
    for (int j = 1; j <= m; ++j) {
        const MultiPoly a = q_var(m, j) + p_tail(m, j);
        const MultiPoly b = q_var(m, j) + p_tail(m, j + 1);
        for (int i = 0; i < k; ++i) {
            numer.push_back(a + constant(m, i));
            denom.push_back(b + constant(m, i));
        }
    }
    const PowerSeries s = expand_at_infinity(ring, numer, denom, k + 2);
    return s[k + 1] * mpq_class(-1, k);
}

// ------------------------------------------------------ interpolation route

namespace {

// Lattice coordinates z in N^{2m}: p_i = 1 + z_i, q_m = base + z_{2m-1},
// q_j = q_{j+1} + z_{m+j-1}. Every lattice point is a valid shape.
Shape lattice_shape(const Exponents& z, int m, int base) {
    std::vector<int> p(static_cast<std::size_t>(m));
    std::vector<int> q(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) p[static_cast<std::size_t>(i)] = 1 + z[static_cast<std::size_t>(i)];
    int running = base;
    for (int j = m - 1; j >= 0; --j) {
        running += z[static_cast<std::size_t>(m + j)];
        q[static_cast<std::size_t>(j)] = running;
    }
    return Shape(std::move(p), std::move(q));
}

// The linear form giving coordinate i as a polynomial in p, q.
MultiPoly lattice_coordinate(int i, int m, int base) {
    if (i < m) return p_var(m, i + 1) - constant(m, 1);
    const int j = i - m + 1;  // q_j
    if (j == m) return q_var(m, m) - constant(m, base);
    return q_var(m, j) - q_var(m, j + 1);
}

void lattice_points(int dims, int degree, Exponents& z, int dim, std::vector<Exponents>& out) {
    if (dim == dims) {
        out.push_back(z);
        return;
    }
    const int used = z.total();
    for (int v = 0; used + v <= degree; ++v) {
        z.set(static_cast<std::size_t>(dim), v);
        lattice_points(dims, degree, z, dim + 1, out);
    }
    z.set(static_cast<std::size_t>(dim), 0);
}

}  // namespace

MultiPoly f_mu_interpolate(const Partition& mu, int m) {
    if (mu.empty()) throw std::invalid_argument("f_mu_interpolate needs a nonempty partition");
    check_km(mu.size(), m);
    const int k = mu.size();
    const int degree = k + mu.length();
    const int dims = 2 * m;
    const int base = (k + m - 1) / m;  // n >= m * base >= k on the lattice
    auto ring = pq_ring(m);

    std::vector<Exponents> points;
    Exponents z(static_cast<std::size_t>(dims));
    lattice_points(dims, degree, z, 0, points);

    std::unordered_map<Exponents, mpq_class, ExponentsHash> diff;
    diff.reserve(points.size());
    for (const auto& pt : points) {
        diff.emplace(pt, normalized_character(lattice_shape(pt, m, base).to_partition(), mu).value);
    }

    // In-place forward differences along each axis; afterwards diff[z] holds
    // Delta^z f at the lattice origin.
    for (int axis = 0; axis < dims; ++axis) {
        const auto a = static_cast<std::size_t>(axis);
        std::vector<const Exponents*> order;
        for (const auto& pt : points) {
            if (pt[a] > 0) order.push_back(&pt);
        }
        std::sort(order.begin(), order.end(), [a](const Exponents* x, const Exponents* y) { return (*x)[a] > (*y)[a]; });
        for (int r = 1; r <= degree; ++r) {
            for (const Exponents* pt : order) {
                if ((*pt)[a] < r) break;
                Exponents below = *pt;
                below.add(a, -1);
                diff[*pt] -= diff.at(below);
            }
        }
    }

    // binom[i][r] = C(L_i, r) for the coordinate forms L_i.
    std::vector<std::vector<MultiPoly>> binom(static_cast<std::size_t>(dims));
    for (int i = 0; i < dims; ++i) {
        const MultiPoly form = lattice_coordinate(i, m, base);
        auto& row = binom[static_cast<std::size_t>(i)];
        row.push_back(constant(m, 1));
        for (int r = 1; r <= degree; ++r) {
            row.push_back(row.back() * (form - constant(m, r - 1)) * mpq_class(1, r));
        }
    }

    // Sum diff[z] * prod_i C(L_i, z_i), sharing partial products along a trie of prefixes.
    PolyAccumulator acc(ring);
    std::function<void(int, const MultiPoly&, Exponents&)> expand = [&](int dim, const MultiPoly& partial,
                                                                       Exponents& prefix) {
        if (dim == dims) {
            const auto& c = diff.at(prefix);
            if (c != 0) acc.add_scaled(partial, c);
            return;
        }
        const int used = prefix.total();
        for (int v = 0; used + v <= degree; ++v) {
            prefix.set(static_cast<std::size_t>(dim), v);
            if (v == 0) {
                expand(dim + 1, partial, prefix);
            } else {
                expand(dim + 1, partial * binom[static_cast<std::size_t>(dim)][static_cast<std::size_t>(v)], prefix);
            }
        }
        prefix.set(static_cast<std::size_t>(dim), 0);
    };
    Exponents prefix(static_cast<std::size_t>(dims));
    expand(0, constant(m, 1), prefix);
    MultiPoly result = acc.take();

    // Off-lattice checks: points of coordinate sum degree + 1 and beyond.
    std::vector<Exponents> held_out;
    {
        Exponents h(static_cast<std::size_t>(dims));
        h.set(0, degree + 1);
        held_out.push_back(h);
        Exponents g(static_cast<std::size_t>(dims));
        for (int i = 0; i < dims; ++i) g.set(static_cast<std::size_t>(i), 1 + (i % 2));
        g.add(static_cast<std::size_t>(dims - 1), degree);
        held_out.push_back(g);
    }
    for (const auto& pt : held_out) {
        const Shape shape = lattice_shape(pt, m, base);
        const mpq_class expect = normalized_character(shape.to_partition(), mu).value;
        const mpq_class got = evaluate(result, shape);
        if (expect != got) {
            throw std::runtime_error("f_mu_interpolate: held-out check failed for mu=" + mu.to_string() +
                                     " m=" + std::to_string(m) + " at " + shape.to_string() + ": character " +
                                     expect.get_str() + ", interpolant " + got.get_str());
        }
    }
    return result;
}

MultiPoly signed_neg_q(const MultiPoly& f, int k) {
    MultiPoly out = f.substitute_neg_q();
    return k % 2 ? -out : out;
}

MultiPoly g_top(int k, int m) { return f_k_residue(k, m).top_degree_part(k + 1); }

// ------------------------------------------------------------------- series

PowerSeries stanley_inverse_argument(int m, int order) {
    if (m < 1) throw std::invalid_argument("m must be at least 1");
    auto ring = pq_ring(m);
    PowerSeries s = PowerSeries::monomial(ring, constant(m, 1), 1, order);
    for (int j = 1; j <= m; ++j) {
        s = s.times_one_minus(q_var(m, j) + p_tail(m, j + 1));
        s = s.over_one_minus(q_var(m, j) + p_tail(m, j));
    }
    return s;
}

PowerSeries g_series(int m, int order) {
    if (order < 2) throw std::invalid_argument("g_series needs order >= 2");
    const PowerSeries inv = compositional_inverse(stanley_inverse_argument(m, order + 1));
    // inv = x v(x) with v(0) = 1, so G = 1 / v
    PowerSeries v(inv.ring(), order);
    for (int i = 0; i <= order; ++i) v.coeff(i) = inv[i + 1];
    return reciprocal(v);
}

PowerSeries reflect(const PowerSeries& g) {
    return -g.map_coefficients([](const MultiPoly& c) { return c.substitute_neg_q(); }).compose_scale(-1);
}

PowerSeries check_functional_equation(const PowerSeries& g, int m, int order) {
    const int n = std::min(order, g.order());
    auto ring = pq_ring(m);
    const PowerSeries h = reflect(g.truncate(n));
    PowerSeries result = h;
    for (int j = 1; j <= m; ++j) {
        const PowerSeries num = h - PowerSeries::monomial(ring, p_tail(m, j) - q_var(m, j), 1, n);
        const PowerSeries den = h - PowerSeries::monomial(ring, p_tail(m, j + 1) - q_var(m, j), 1, n);
        result = result * num * reciprocal(den);
    }
    result.coeff(0) += constant(m, 1);
    return result;
}

MultiPoly top_product_formula(const Partition& mu, int m) {
    MultiPoly out = constant(m, 1);
    for (int part : mu.parts()) out *= signed_neg_q(g_top(part, m), part);
    return out;
}

}  // namespace charpoly
