#pragma once

// Coloured factorizations of a target permutation: the weighted sums behind
// TopFact and the conjecture, the minimal-factorization inequality, and the
// splitting of a top product into one piece per cycle of the product.

#include <vector>

#include "charpoly/colours.hpp"
#include "charpoly/perm.hpp"
#include "charpoly/polyring.hpp"
#include "charpoly/series.hpp"

namespace charpoly {

/// kappa(a) + kappa(b) <= k + kappa(ab). Throws std::invalid_argument on a size mismatch.
bool check_subadditivity(const Permutation& a, const Permutation& b);

/// kappa(a) + kappa(b) == k + kappa(ab).
bool is_top_product(const Permutation& a, const Permutation& b);

enum class Stratum {
    Top,  ///< only alpha with kappa(alpha) + kappa(alpha target) = k + kappa(target)
    All,
};

enum class SumStrategy {
    /// Colourings summed independently over connected pieces of the
    /// alpha-cycle / product-cycle incidence graph.
    Factored,
    /// Every colouring pushed through coloured_compose.
    Direct,
};

/// Sum over (alpha, psi) in the stratum of p^{kappa_m(alpha, psi)} q^{kappa_m((alpha, psi) o target)}.
MultiPoly coloured_weight_sum(const Permutation& target, int m, Stratum stratum,
                              SumStrategy strategy = SumStrategy::Factored);

/// Top stratum for the canonical representative of mu.
MultiPoly topfact_mu(const Partition& mu, int m);

/// Full sum for the canonical representative of mu.
MultiPoly conjecture_sum(const Partition& mu, int m);

/// Order K+1; [x^{k+1}] is the top stratum for the full cycle (1 2 .. k), k = 1..K.
PowerSeries topfact_series(int m, int max_k);

struct ProductComponent {
    std::vector<int> support;  ///< sorted symbols of one cycle of ab
    std::vector<Cycle> alpha_cycles;
    std::vector<Cycle> beta_cycles;
    Cycle gamma_cycle;
};

/// Splits a top product ab into one component per cycle of ab (fixed points included).
/// Throws std::invalid_argument if ab is not a top product and std::logic_error if
/// a cycle of a or b leaves its component.
std::vector<ProductComponent> decompose_product(const Permutation& a, const Permutation& b);

}  // namespace charpoly
