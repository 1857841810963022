#pragma once

// Truncated power series in x with MultiPoly coefficients.
//
// A series of order N stores the coefficients of x^0..x^N and is exact
// modulo x^{N+1}. Binary operations truncate to the smaller order.

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "charpoly/polyring.hpp"

namespace charpoly {

class PowerSeries {
public:
    PowerSeries(RingPtr ring, int order);

    static PowerSeries from_coefficients(RingPtr ring, std::vector<MultiPoly> coefficients);
    static PowerSeries constant(RingPtr ring, const MultiPoly& c, int order);
    /// The series `c * x^power`.
    static PowerSeries monomial(RingPtr ring, const MultiPoly& c, int power, int order);

    const RingPtr& ring() const noexcept { return ring_; }
    int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    const MultiPoly& operator[](int i) const { return coeffs_.at(static_cast<std::size_t>(i)); }
    MultiPoly& coeff(int i) { return coeffs_.at(static_cast<std::size_t>(i)); }
    const std::vector<MultiPoly>& coefficients() const noexcept { return coeffs_; }
    bool is_zero() const noexcept;

    PowerSeries truncate(int order) const;
    /// f(c x)
    PowerSeries compose_scale(const mpq_class& c) const;
    /// x^s f(x), same order.
    PowerSeries shift(int s) const;
    PowerSeries map_coefficients(const std::function<MultiPoly(const MultiPoly&)>& f) const;
    /// f * (1 - a x)
    PowerSeries times_one_minus(const MultiPoly& a) const;
    /// f / (1 - a x)
    PowerSeries over_one_minus(const MultiPoly& a) const;

    PowerSeries& operator+=(const PowerSeries& other);
    PowerSeries& operator-=(const PowerSeries& other);
    friend PowerSeries operator+(PowerSeries a, const PowerSeries& b) { return a += b; }
    friend PowerSeries operator-(PowerSeries a, const PowerSeries& b) { return a -= b; }
    PowerSeries operator-() const;
    friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
    friend PowerSeries operator*(const PowerSeries& a, const MultiPoly& c);
    friend PowerSeries operator*(const MultiPoly& c, const PowerSeries& a) { return a * c; }
    friend bool operator==(const PowerSeries& a, const PowerSeries& b);

    /// One line per nonzero coefficient: "x^i: <poly>".
    std::string to_string() const;

private:
    RingPtr ring_;
    std::vector<MultiPoly> coeffs_;
};

/// 1/f. Throws std::domain_error unless the constant term is a nonzero rational.
PowerSeries reciprocal(const PowerSeries& f);

/// f(g(x)); requires g to have zero constant term.
PowerSeries compose(const PowerSeries& f, const PowerSeries& g);

/// The series g with s(g(x)) = x = g(s(x)), by Lagrange inversion.
/// Requires zero constant term and linear coefficient exactly 1.
PowerSeries compositional_inverse(const PowerSeries& s);

/// With t = 1/x, the power series in t of prod(1 - a_i t) / prod(1 - b_j t)
/// to the given order, i.e. prod(x - a_i) / prod(x - b_j) with the leading
/// power of x factored out.
PowerSeries expand_at_infinity(RingPtr ring, std::span<const MultiPoly> numer_roots,
                               std::span<const MultiPoly> denom_roots, int order);

}  // namespace charpoly
