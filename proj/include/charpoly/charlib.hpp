#pragma once

// Irreducible characters of S_n by the Murnaghan-Nakayama rule, and the
// normalized character (n)_k chi(mu 1^{n-k}) / chi(1^n).

#include <gmpxx.h>

#include "charpoly/perm.hpp"

namespace charpoly {

/// chi_omega(lam). Border strips are removed largest class part first and
/// results are memoized per thread on (remaining shape, remaining parts).
/// Once only unit parts remain the dimension is taken from the hook formula.
/// Throws std::invalid_argument if |omega| != |lam|.
mpz_class character(const Partition& omega, const Partition& lam);

/// Same value, border strips all the way down (no hook shortcut). Meant for
/// small n, where it serves as an independent check.
mpz_class character_mn(const Partition& omega, const Partition& lam);

/// chi_omega(1^n) by the hook-length formula.
mpz_class dimension(const Partition& omega);

/// n (n-1) ... (n-k+1); 1 when k == 0.
mpz_class falling_factorial(const mpz_class& n, int k);

struct NormalizedValue {
    mpq_class value;
    int n = 0;
    int k = 0;
};

/// (n)_k chi_omega(mu 1^{n-k}) / chi_omega(1^n) with n = |omega|, k = |mu|.
/// Throws std::invalid_argument if k > n.
NormalizedValue normalized_character(const Partition& omega, const Partition& mu);

}  // namespace charpoly
