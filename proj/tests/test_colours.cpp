#include "doctest.h"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "charpoly/colours.hpp"

using namespace charpoly;

namespace {

// Recomputes the product colouring by scanning every alpha-cycle against every product cycle.
std::map<int, int> slow_product_colours(const ColouredPermutation& ap, const Permutation& b) {
    const Permutation gamma = compose(ap.perm(), b);
    std::map<int, int> out;
    for (const auto& u : gamma.cycles()) {
        int colour = 0;
        for (const auto& c : ap.perm().cycles()) {
            const bool meets = std::any_of(c.begin(), c.end(), [&](int x) {
                return std::find(u.begin(), u.end(), x) != u.end();
            });
            if (meets) colour = std::max(colour, ap.colour_of_cycle(c.front()));
        }
        out[u.front()] = colour;
    }
    return out;
}

}  // namespace

TEST_CASE("single colour product is the plain product") {
    for_each_permutation(4, [](const Permutation& a) {
        for_each_permutation(4, [&](const Permutation& b) {
            const auto prod = coloured_compose(ColouredPermutation::uniform(a, 1, 1), b);
            CHECK(prod == ColouredPermutation::uniform(compose(a, b), 1, 1));
        });
    });
}

TEST_CASE("coloured identity times identity keeps colours") {
    const auto ap = ColouredPermutation::from_cycle_colours(Permutation::identity(3), {2, 1, 3}, 3);
    CHECK(coloured_compose(ap, Permutation::identity(3)) == ap);
}

TEST_CASE("max rule on the two-factor example") {
    const auto alpha = Permutation::parse("(1 6 8 9)(2 5)(3)(4)(7)(10)(11)");
    const auto beta = Permutation::parse("(1 5)(2 3 4)(6 7)(8)(9 10 11)");
    const auto ap = ColouredPermutation::parse("(1 6 8 9):2 (2 5):1 (3):1 (4):3 (7):1 (10):1 (11):1", 3);
    CHECK(ap.perm() == alpha);
    CHECK(kappa_m(ap) == ColourVector{5, 1, 1});

    // (alpha, psi) o beta: the product is the full cycle, which meets a colour-3 cycle.
    const auto prod = coloured_compose(ap, beta);
    CHECK(prod.perm() == full_cycle(11));
    CHECK(prod.colour_of_cycle(1) == 3);

    // Colours induced on the cycles of beta by the same max rule, via beta = alpha^-1 o (1 .. 11).
    const auto inv = ColouredPermutation::parse("(1 9 8 6):2 (2 5):1 (3):1 (4):3 (7):1 (10):1 (11):1", 3);
    CHECK(inv.perm() == alpha.inverse());
    const auto on_beta = coloured_compose(inv, full_cycle(11));
    CHECK(on_beta.perm() == beta);
    CHECK(on_beta.colouring() == std::map<int, int>{{1, 2}, {2, 3}, {6, 2}, {8, 2}, {9, 2}});
}

TEST_CASE("product colouring matches a slow recomputation") {
    for (int k = 1; k <= 5; ++k) {
        for (int m = 1; m <= (k <= 4 ? 3 : 2); ++m) {
            const auto all = enumerate_coloured(k, m);
            const auto targets = enumerate_permutations(k);
            for (std::size_t i = 0; i < all.size(); i += (k == 5 ? 7 : 1)) {
                const auto& ap = all[i];
                for (std::size_t j = 0; j < targets.size(); j += (k == 5 ? 11 : 1)) {
                    const auto& b = targets[j];
                    const auto prod = coloured_compose(ap, b);
                    CHECK(prod.perm() == compose(ap.perm(), b));
                    CHECK(prod.colouring() == slow_product_colours(ap, b));
                }
            }
        }
    }
}

TEST_CASE("kappa_m and weights") {
    const auto ap = ColouredPermutation::uniform(Permutation::parse("(1 2)(3)"), 1, 2);
    CHECK(kappa_m(ap) == ColourVector{2, 0});
    CHECK(weight_monomial(ColourVector{2, 1}, VariableFamily::P) == Exponents({2, 1, 0, 0}));
    CHECK(weight_monomial(ColourVector{2, 1}, VariableFamily::Q) == Exponents({0, 0, 2, 1}));
    CHECK(weight_monomial(ColourVector{0, 0}, VariableFamily::P).total() == 0);
    CHECK(weight_monomial(ColourVector{5, 1, 1}, VariableFamily::P) == Exponents({5, 1, 1, 0, 0, 0}));
    const ColouredPermutation empty(Permutation::identity(0), {}, 2);
    CHECK(kappa_m(empty) == ColourVector{0, 0});
}

TEST_CASE("enumeration sizes") {
    CHECK(enumerate_coloured(1, 2).size() == 2);
    CHECK(enumerate_coloured(2, 1).size() == 2);
    CHECK(enumerate_coloured(3, 2).size() == 24);
    for (int k = 1; k <= 4; ++k) {
        for (int m = 1; m <= 3; ++m) {
            long expected = 0;
            for_each_permutation(k, [&](const Permutation& a) {
                long w = 1;
                for (int i = 0; i < a.kappa(); ++i) w *= m;
                expected += w;
            });
            const auto all = enumerate_coloured(k, m);
            CHECK(static_cast<long>(all.size()) == expected);
            for (std::size_t i = 1; i < all.size(); ++i) CHECK(!(all[i] == all[i - 1]));
        }
    }
}

TEST_CASE("text form round-trips and rejects bad input") {
    const auto ap = ColouredPermutation::parse("(9 1 6 8):2 (5 2):1 (3):1 (4):2 (7):1", 2);
    CHECK(ap.to_string() == "(1 6 8 9):2 (2 5):1 (3):1 (4):2 (7):1");
    CHECK(ColouredPermutation::parse(ap.to_string(), 2) == ap);
    CHECK_THROWS(ColouredPermutation::parse("(1 6 8 9):2 (2 5):1 (3):1", 2));
    CHECK_THROWS(ColouredPermutation::parse("(1 2):3", 2));
    CHECK_THROWS(ColouredPermutation::parse("(1 2)", 2));
    CHECK_THROWS_AS(coloured_compose(ap, Permutation::identity(3)), std::invalid_argument);
}
