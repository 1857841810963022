#pragma once

// Permutations whose cycles carry a colour in {1..m}, and the mixed product
// with plain permutations: each cycle of the product takes the largest colour
// among the coloured cycles it meets.

#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "charpoly/perm.hpp"
#include "charpoly/polyring.hpp"

namespace charpoly {

/// counts[i] = number of cycles coloured i+1.
using ColourVector = std::vector<int>;

class ColouredPermutation {
public:
    /// `colouring` maps the minimum element of each cycle to its colour.
    ColouredPermutation(Permutation perm, std::map<int, int> colouring, int m);

    static ColouredPermutation uniform(Permutation perm, int colour, int m);
    /// colours[i] belongs to perm.cycles()[i].
    static ColouredPermutation from_cycle_colours(Permutation perm, const std::vector<int>& colours, int m);
    /// "(1 6 8 9):2 (2 5):1 (3):1"; cycles of the permutation not listed are rejected.
    static ColouredPermutation parse(std::string_view text, int m, int k = 0);

    const Permutation& perm() const noexcept { return perm_; }
    int colours() const noexcept { return m_; }
    const std::map<int, int>& colouring() const noexcept { return colouring_; }
    int colour_of_cycle(int min_element) const { return colouring_.at(min_element); }
    /// Colour of the cycle containing symbol x.
    int colour_of_symbol(int x) const;
    /// Colour of each symbol 1..k, 0-based index.
    std::vector<int> symbol_colours() const;

    std::string to_string() const;
    friend bool operator==(const ColouredPermutation&, const ColouredPermutation&) = default;

private:
    Permutation perm_;
    std::map<int, int> colouring_;
    int m_ = 1;
};

/// (alpha, psi) o b = (alpha b, nu), nu(u) = max psi over alpha-cycles meeting u.
ColouredPermutation coloured_compose(const ColouredPermutation& ap, const Permutation& b);

ColourVector kappa_m(const ColouredPermutation& ap);

enum class VariableFamily { P, Q };

/// Monomial prod_i v_i^{counts[i]} in pq_ring(m), v = p or q.
Exponents weight_monomial(const ColouredPermutation& ap, VariableFamily family);
Exponents weight_monomial(const ColourVector& counts, VariableFamily family);

/// Every (alpha, psi) once: permutations in lexicographic order, colourings
/// lexicographic in cycle order. Total count is sum over alpha of m^kappa(alpha).
void for_each_coloured(int k, int m, const std::function<void(const ColouredPermutation&)>& visit);
std::vector<ColouredPermutation> enumerate_coloured(int k, int m);

}  // namespace charpoly
