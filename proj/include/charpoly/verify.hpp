#pragma once

// Verification runs behind `charpoly verify ...`. Each returns one check per
// compared quantity; a mismatch carries the nonzero difference as witness.

#include "charpoly/cache.hpp"
#include "charpoly/perm.hpp"
#include "charpoly/report.hpp"
#include "charpoly/series.hpp"

namespace charpoly {

/// F_k by the residue formula, through the cache.
MultiPoly cached_f_k(int k, int m, const PolyCache& cache);
/// F_mu by interpolation, through the cache.
MultiPoly cached_f_mu(const Partition& mu, int m, const PolyCache& cache);

/// First nonzero coefficient of a residual series as (power, coefficient); power -1 if zero.
std::pair<int, MultiPoly> first_nonzero(const PowerSeries& s);

/// Per k <= kmax: top part of (-1)^k F_k(p;-q) against the TopFact coefficient;
/// then -G(p;-q)(-x) against -1 + (p_1+..+p_m) x + TopFact(x) to order kmax+1.
Report verify_theorem1(int kmax, int m, const PolyCache& cache);

/// Per mu |- k: TopFact_mu against the product of signed G's and against
/// the top part of the full coloured sum.
Report verify_corollary(int k, int m);

/// Residuals of both planted-series lemmas for every i, to the given order.
Report verify_lemmas(int m, int order);

/// Per mu |- k: the full coloured sum against (-1)^k F_mu(p;-q), plus
/// coefficient signs of the latter. Settled for m = 1, reported as open for m >= 2.
Report verify_conjecture(int k, int m, const PolyCache& cache);

/// Per mu |- k: F_mu against normalized characters on every shape with
/// p_i <= grid, q_1 <= grid and n >= k; for mu = (k) also against the residue formula.
Report verify_characters(int k, int m, int grid, const PolyCache& cache);

}  // namespace charpoly
