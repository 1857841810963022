#include "doctest.h"

#include <random>
#include <stdexcept>

#include "charpoly/polyring.hpp"
#include "charpoly/series.hpp"

using namespace charpoly;

namespace {

MultiPoly var(int m, const char* name) { return MultiPoly::variable(pq_ring(m), name); }
MultiPoly cst(int m, const mpq_class& c) { return MultiPoly::constant(pq_ring(m), c); }

MultiPoly random_poly(std::mt19937& rng, int m, int terms, int max_deg) {
    std::uniform_int_distribution<int> coeff(-5, 5);
    std::uniform_int_distribution<int> deg(0, max_deg);
    std::uniform_int_distribution<int> den(1, 3);
    std::vector<Term> out;
    for (int t = 0; t < terms; ++t) {
        Exponents e(static_cast<std::size_t>(2 * m));
        for (int i = 0; i < 2 * m; ++i) e.set(static_cast<std::size_t>(i), deg(rng) / 2);
        out.push_back({e, mpq_class(coeff(rng), den(rng))});
    }
    return MultiPoly::from_terms(pq_ring(m), std::move(out));
}

PowerSeries random_series(std::mt19937& rng, int m, int order, bool unit_constant) {
    std::vector<MultiPoly> c;
    for (int i = 0; i <= order; ++i) c.push_back(random_poly(rng, m, 3, 2));
    if (unit_constant) c[0] = cst(m, 1);
    return PowerSeries::from_coefficients(pq_ring(m), std::move(c));
}

PowerSeries x_series(int m, int order) { return PowerSeries::monomial(pq_ring(m), cst(m, 1), 1, order); }

}  // namespace

TEST_CASE("polynomial basics") {
    const auto a = var(2, "p1");
    const auto p = var(2, "p2");
    const auto b = var(2, "q1");
    const auto q = var(2, "q2");
    CHECK((a * b + p * q).substitute_neg_q() == -(a * b) - p * q);
    CHECK((a * b + p * q).to_string() == "p1*q1 + p2*q2");
    const MultiPoly f2 = -(a * a * b) + a * b * b - 2 * a * p * q - p * p * q + p * q * q;
    CHECK(f2.is_homogeneous());
    CHECK(f2.top_degree_part(3) == f2);
    CHECK(f2.top_degree_part(2).is_zero());
    CHECK(f2.total_degree() == 3);
    const std::vector<mpq_class> point{1, 1, -1, -1};
    CHECK(f2.eval(point) == 6);
    CHECK(MultiPoly(pq_ring(2)).total_degree() == -1);
    CHECK(((a + cst(2, 1)) * (a - cst(2, 1))).to_string() == "p1^2 - 1");
    CHECK((a * mpq_class(1, 2)).to_string() == "1/2*p1");
    CHECK(!(a * mpq_class(1, 2)).is_integral());
    CHECK(f2.is_integral());
    CHECK(!f2.has_nonnegative_coefficients());
}

TEST_CASE("ring mismatch is an error") {
    CHECK_THROWS_AS(var(1, "p1") + var(2, "p1"), std::invalid_argument);
    CHECK_NOTHROW(MultiPoly() + var(2, "p1"));
}

TEST_CASE("ring axioms on random polynomials") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 60; ++trial) {
        const auto f = random_poly(rng, 2, 5, 4);
        const auto g = random_poly(rng, 2, 5, 4);
        const auto h = random_poly(rng, 2, 5, 4);
        CHECK((f + g) * h == f * h + g * h);
        CHECK(f * g == g * f);
        CHECK((f * g) * h == f * (g * h));
        CHECK(f - f == MultiPoly(pq_ring(2)));
        std::vector<mpq_class> pt{2, mpq_class(-1, 3), 5, 7};
        CHECK((f * g).eval(pt) == f.eval(pt) * g.eval(pt));
        PolyAccumulator acc(pq_ring(2));
        acc.add_product(f, g);
        acc.add(h);
        CHECK(acc.take() == f * g + h);
    }
}

TEST_CASE("serialization round-trips bit for bit") {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 40; ++trial) {
        const auto f = random_poly(rng, 3, 6, 6);
        const auto text = f.serialize();
        const auto back = MultiPoly::deserialize(text);
        CHECK(back == f);
        CHECK(back.serialize() == text);
    }
    const auto f = var(1, "p1") * mpq_class(-3, 4) + cst(1, 2);
    CHECK(f.serialize() ==
          R"({"vars":["p1","q1"],"terms":[{"exps":[1,0],"num":"-3","den":"4"},{"exps":[0,0],"num":"2","den":"1"}]})");
    CHECK_THROWS(MultiPoly::deserialize("{\"vars\":[\"p1\"],\"terms\":[{\"exps\":[1,2]}]}"));
}

TEST_CASE("series arithmetic") {
    const int m = 1;
    auto ring = pq_ring(m);
    const auto one_minus_x = PowerSeries::constant(ring, cst(m, 1), 3) - x_series(m, 3);
    const auto inv = reciprocal(one_minus_x);
    for (int i = 0; i <= 3; ++i) CHECK(inv[i] == cst(m, 1));

    std::vector<MultiPoly> c{cst(m, 1), cst(m, 2), cst(m, 3), cst(m, 4)};
    const auto s = PowerSeries::from_coefficients(ring, c).compose_scale(-1);
    CHECK(s[1] == cst(m, -2));
    CHECK(s[2] == cst(m, 3));
    CHECK(s[3] == cst(m, -4));

    const auto p1 = var(m, "p1");
    const auto plus = PowerSeries::constant(ring, cst(m, 1), 4) + PowerSeries::monomial(ring, p1, 1, 4);
    const auto minus = PowerSeries::constant(ring, cst(m, 1), 4) - PowerSeries::monomial(ring, p1, 1, 4);
    const auto prod = plus * minus;
    CHECK(prod[0] == cst(m, 1));
    CHECK(prod[1].is_zero());
    CHECK(prod[2] == -(p1 * p1));
    CHECK(prod[3].is_zero());

    CHECK((plus * x_series(m, 2)).order() == 2);
    CHECK_THROWS_AS(reciprocal(x_series(m, 3)), std::domain_error);
    CHECK_THROWS_AS(reciprocal(PowerSeries::constant(ring, p1, 3)), std::domain_error);
}

TEST_CASE("reciprocal of random unit series") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        const auto f = random_series(rng, 1, 6, true);
        const auto g = reciprocal(f) * f;
        CHECK(g[0] == cst(1, 1));
        for (int i = 1; i <= 6; ++i) CHECK(g[i].is_zero());
    }
}

TEST_CASE("compositional inverse") {
    auto ring = pq_ring(1);
    CHECK(compositional_inverse(x_series(1, 6)) == x_series(1, 6));

    // x/(1-x) inverts to x/(1+x)
    const auto s = x_series(1, 6).over_one_minus(cst(1, 1));
    const auto inv = compositional_inverse(s);
    for (int i = 1; i <= 6; ++i) CHECK(inv[i] == cst(1, i % 2 ? 1 : -1));

    const auto p = var(1, "p1");
    const auto q = var(1, "q1");
    const auto arg = x_series(1, 8).times_one_minus(q).over_one_minus(q + p);
    const auto g = compositional_inverse(arg);
    CHECK(g[1] == cst(1, 1));
    CHECK(g[2] == -p);
    const auto id = x_series(1, 8);
    CHECK(compose(arg, g) == id);
    CHECK(compose(g, arg) == id);

    std::mt19937 rng(9);
    for (int trial = 0; trial < 20; ++trial) {
        auto r = random_series(rng, 1, 7, false);
        r.coeff(0) = MultiPoly(ring);
        r.coeff(1) = cst(1, 1);
        const auto ri = compositional_inverse(r);
        CHECK(compose(r, ri) == x_series(1, 7));
        CHECK(compose(ri, r) == x_series(1, 7));
    }
    CHECK_THROWS(compositional_inverse(PowerSeries::monomial(ring, cst(1, 2), 1, 4)));
    CHECK_THROWS(compositional_inverse(PowerSeries::constant(ring, cst(1, 1), 4) + x_series(1, 4)));
}

TEST_CASE("expansion at infinity") {
    auto ring = pq_ring(1);
    const auto p = var(1, "p1");
    const auto q = var(1, "q1");
    const std::vector<MultiPoly> a{p};
    const auto same = expand_at_infinity(ring, a, a, 5);
    CHECK(same == PowerSeries::constant(ring, cst(1, 1), 5));
    CHECK(expand_at_infinity(ring, {}, {}, 3) == PowerSeries::constant(ring, cst(1, 1), 3));

    // x (x - q - p) / (x - q): [x^-1] is [t^2] of (1 - (p+q) t) / (1 - q t)
    const std::vector<MultiPoly> num{q + p};
    const std::vector<MultiPoly> den{q};
    const auto e = expand_at_infinity(ring, num, den, 3);
    CHECK(e[1] == -p);
    CHECK(e[2] == -(p * q));

    std::mt19937 rng(1);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<MultiPoly> xs;
        std::vector<MultiPoly> ys;
        for (int i = 0; i < 3; ++i) xs.push_back(random_poly(rng, 1, 2, 2));
        for (int i = 0; i < 2; ++i) ys.push_back(random_poly(rng, 1, 2, 2));
        const auto prod = expand_at_infinity(ring, xs, ys, 6) * expand_at_infinity(ring, ys, xs, 6);
        CHECK(prod == PowerSeries::constant(ring, cst(1, 1), 6));
    }
}
