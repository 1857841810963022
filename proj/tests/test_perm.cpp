#include "doctest.h"

#include <random>
#include <set>
#include <stdexcept>

#include "charpoly/perm.hpp"

using namespace charpoly;

namespace {

// Independent partition count by the pentagonal-free recurrence p(n, largest part <= j).
long count_partitions(int n, int j) {
    if (n == 0) return 1;
    if (j == 0) return 0;
    return count_partitions(n, j - 1) + (n >= j ? count_partitions(n - j, j) : 0);
}

}  // namespace

TEST_CASE("compose applies the right factor first") {
    const auto a = Permutation::parse("(1 6 8 9)(2 5)(3)(4)(7)(10)(11)");
    const auto b = Permutation::parse("(1 5)(2 3 4)(6 7)(8)(9 10 11)");
    CHECK(compose(a, b) == full_cycle(11));
    CHECK(compose(a, b).to_string() == "(1 2 3 4 5 6 7 8 9 10 11)");

    const auto x = Permutation::parse("(1 2 3)");
    const auto y = Permutation::parse("(1 3 2)");
    CHECK(compose(x, y).is_identity());
    const auto b5 = Permutation::parse("(1 4)(2 5 3)");
    CHECK(compose(Permutation::identity(5), b5) == b5);

    // (1 2)(2 3): 3 -> 2 -> 1, so the product is (1 2 3) under right-to-left
    CHECK(compose(Permutation::parse("(1 2)", 3), Permutation::parse("(2 3)", 3)) == Permutation::parse("(1 2 3)"));
    CHECK_THROWS_AS(compose(Permutation::identity(2), Permutation::identity(3)), std::invalid_argument);
}

TEST_CASE("cycle decomposition is canonical and round-trips") {
    CHECK(full_cycle(11).cycles().size() == 1);
    CHECK(Permutation::identity(4).to_string() == "(1)(2)(3)(4)");
    const auto alpha = Permutation::parse("(1 6 8 9)(2 5)(3)(4)(7)(10)(11)");
    const auto cycles = alpha.cycles();
    REQUIRE(cycles.size() == 7);
    CHECK(cycles[0] == Cycle{1, 6, 8, 9});
    CHECK(cycles[1] == Cycle{2, 5});
    CHECK(alpha.kappa() == 7);
    CHECK(Permutation::parse("(1 5)(2 3 4)(6 7)(8)(9 10 11)").kappa() == 5);
    CHECK(Permutation::identity(6).kappa() == 6);
    // non-canonical input text normalizes
    CHECK(Permutation::parse("(5 2)(9 1 6 8)", 11) == alpha);

    for_each_permutation(5, [](const Permutation& p) {
        CHECK(Permutation::from_cycles(5, p.cycles()) == p);
        CHECK(Permutation::parse(p.to_string()) == p);
        int prev_min = 0;
        for (const auto& c : p.cycles()) {
            CHECK(c.front() == *std::min_element(c.begin(), c.end()));
            CHECK(c.front() > prev_min);
            prev_min = c.front();
        }
        CHECK(p.kappa() == p.cycle_type().length());
    });
}

TEST_CASE("class representatives use consecutive blocks") {
    CHECK(full_cycle(3).to_string() == "(1 2 3)");
    CHECK(canonical_class_rep(Partition({2, 1})).to_string() == "(1 2)(3)");
    CHECK(canonical_class_rep(Partition({3, 2})).to_string() == "(1 2 3)(4 5)");
    for (int k = 1; k <= 6; ++k) {
        for (const auto& mu : partitions_of(k)) CHECK(canonical_class_rep(mu).cycle_type() == mu);
    }
}

TEST_CASE("enumeration counts and order") {
    CHECK(enumerate_permutations(3).size() == 6);
    const auto perms = enumerate_permutations(4);
    CHECK(perms.size() == 24);
    CHECK(std::is_sorted(perms.begin(), perms.end()));
    CHECK(std::set<Permutation>(perms.begin(), perms.end()).size() == 24);
    CHECK(partitions_of(0).size() == 1);
    CHECK(partitions_of(0).front().empty());
    for (int d = 1; d <= 12; ++d) {
        const auto parts = partitions_of(d);
        CHECK(static_cast<long>(parts.size()) == count_partitions(d, d));
        CHECK(std::set<Partition>(parts.begin(), parts.end()).size() == parts.size());
        for (const auto& p : parts) CHECK(p.size() == d);
    }
    CHECK(partitions_of(5).size() == 7);
}

TEST_CASE("group laws on small symmetric groups") {
    for_each_permutation(6, [](const Permutation& a) { CHECK(compose(a, a.inverse()).is_identity()); });
    std::mt19937 rng(7);
    auto all = enumerate_permutations(6);
    std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
    for (int trial = 0; trial < 300; ++trial) {
        const auto& a = all[pick(rng)];
        const auto& g = all[pick(rng)];
        CHECK(compose(g, compose(a, g.inverse())).cycle_type() == a.cycle_type());
    }
}

TEST_CASE("partitions validate and parse") {
    CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({2, 0}), std::invalid_argument);
    CHECK(Partition::parse("3,2,1") == Partition({3, 2, 1}));
    CHECK(Partition::from_unsorted({1, 3, 2}) == Partition({3, 2, 1}));
    CHECK(Partition({3, 1}).conjugate() == Partition({2, 1, 1}));
    CHECK(Partition({2}).padded_to(4) == Partition({2, 1, 1}));
    CHECK(Partition({2, 1}).to_string() == "(2,1)");
}

TEST_CASE("malformed permutations are rejected") {
    CHECK_THROWS_AS(Permutation({1, 1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Permutation::parse("(1 2)(2 3)"), std::invalid_argument);
    CHECK_THROWS_AS(Permutation::parse("(1 4)", 3), std::invalid_argument);
}
