#pragma once

// Stanley's character polynomials F_k, F_mu in p_1..p_m, q_1..q_m, their
// top-degree parts G_k and the generating series G(x).
//
// Sign convention: a polynomial evaluated at a shape p x q equals the
// normalized character of that shape. This makes F_1 = p_1 q_1 + ... + p_m q_m
// (the number of boxes).

#include <string>
#include <vector>

#include "charpoly/perm.hpp"
#include "charpoly/polyring.hpp"
#include "charpoly/series.hpp"

namespace charpoly {

/// p_i rows of length q_i for i = 1..m, with q_1 >= q_2 >= ... >= q_m.
class Shape {
public:
    Shape(std::vector<int> p, std::vector<int> q);

    int colours() const noexcept { return static_cast<int>(p_.size()); }
    const std::vector<int>& p() const noexcept { return p_; }
    const std::vector<int>& q() const noexcept { return q_; }
    int n() const noexcept;
    Partition to_partition() const;
    /// Evaluation point (p_1..p_m, q_1..q_m) for pq_ring(m).
    std::vector<mpq_class> point() const;
    std::string to_string() const;

private:
    std::vector<int> p_;
    std::vector<int> q_;
};

mpq_class evaluate(const MultiPoly& f, const Shape& shape);

/// p_j + p_{j+1} + ... + p_m (1-based j; zero when j > m).
MultiPoly p_tail(int m, int j);

/// F_k from the residue at infinity of the falling-factorial product.
MultiPoly f_k_residue(int k, int m);

/// F_mu recovered from normalized characters: Newton interpolation of total
/// degree k + l(mu) on a simplex lattice of shapes with n >= k, then checked
/// at shapes outside the lattice. Throws std::runtime_error on a failed check.
MultiPoly f_mu_interpolate(const Partition& mu, int m);

/// (-1)^k f(p; -q)
MultiPoly signed_neg_q(const MultiPoly& f, int k);

/// Degree k+1 part of F_k.
MultiPoly g_top(int k, int m);

/// x * prod_j (1 - (q_j + p_{j+1} + ... + p_m) x) / (1 - (q_j + p_j + ... + p_m) x)
PowerSeries stanley_inverse_argument(int m, int order);

/// G(x) = x / (compositional inverse of stanley_inverse_argument); G_{i-1} is [x^i].
PowerSeries g_series(int m, int order);

/// -G(p;-q)(-x) for a candidate G.
PowerSeries reflect(const PowerSeries& g);

/// H * prod_j (H - (p_j+..+p_m) x + q_j x) / (H - (p_{j+1}+..+p_m) x + q_j x) + 1
/// with H = reflect(g); zero for the true G.
PowerSeries check_functional_equation(const PowerSeries& g, int m, int order);

/// prod_i (-1)^{mu_i} G_{mu_i}(p; -q): the top-degree part of (-1)^k F_mu(p; -q).
MultiPoly top_product_formula(const Partition& mu, int m);

}  // namespace charpoly
