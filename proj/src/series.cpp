#include "charpoly/series.hpp"

#include <sstream>
#include <stdexcept>

namespace charpoly {

PowerSeries::PowerSeries(RingPtr ring, int order) : ring_(std::move(ring)) {
    if (order < 0) throw std::invalid_argument("series order must be nonnegative");
    coeffs_.assign(static_cast<std::size_t>(order) + 1, MultiPoly(ring_));
}

PowerSeries PowerSeries::from_coefficients(RingPtr ring, std::vector<MultiPoly> coefficients) {
    if (coefficients.empty()) throw std::invalid_argument("series needs at least one coefficient");
    PowerSeries out(ring, static_cast<int>(coefficients.size()) - 1);
    for (std::size_t i = 0; i < coefficients.size(); ++i) {
        common_ring(ring, coefficients[i].ring());
        out.coeffs_[i] = MultiPoly(ring) + coefficients[i];
    }
    return out;
}

PowerSeries PowerSeries::constant(RingPtr ring, const MultiPoly& c, int order) {
    return monomial(std::move(ring), c, 0, order);
}

PowerSeries PowerSeries::monomial(RingPtr ring, const MultiPoly& c, int power, int order) {
    PowerSeries out(ring, order);
    if (power <= order) out.coeff(power) = MultiPoly(ring) + c;
    return out;
}

bool PowerSeries::is_zero() const noexcept {
    for (const auto& c : coeffs_) {
        if (!c.is_zero()) return false;
    }
    return true;
}

PowerSeries PowerSeries::truncate(int order) const {
    if (order > this->order()) throw std::invalid_argument("cannot raise truncation order");
    PowerSeries out(ring_, order);
    for (int i = 0; i <= order; ++i) out.coeff(i) = (*this)[i];
    return out;
}

PowerSeries PowerSeries::compose_scale(const mpq_class& c) const {
    PowerSeries out = *this;
    mpq_class power = 1;
    for (auto& coefficient : out.coeffs_) {
        coefficient *= power;
        power *= c;
    }
    return out;
}

PowerSeries PowerSeries::shift(int s) const {
    PowerSeries out(ring_, order());
    for (int i = 0; i + s <= order(); ++i) {
        if (i + s >= 0) out.coeff(i + s) = (*this)[i];
    }
    return out;
}

PowerSeries PowerSeries::map_coefficients(const std::function<MultiPoly(const MultiPoly&)>& f) const {
    PowerSeries out = *this;
    for (auto& c : out.coeffs_) c = f(c);
    return out;
}

PowerSeries PowerSeries::times_one_minus(const MultiPoly& a) const {
    PowerSeries out = *this;
    for (int n = 1; n <= order(); ++n) {
        if (!(*this)[n - 1].is_zero()) out.coeff(n) -= a * (*this)[n - 1];
    }
    return out;
}

PowerSeries PowerSeries::over_one_minus(const MultiPoly& a) const {
    PowerSeries out = *this;
    for (int n = 1; n <= order(); ++n) {
        if (!out[n - 1].is_zero()) out.coeff(n) += a * out[n - 1];
    }
    return out;
}

PowerSeries& PowerSeries::operator+=(const PowerSeries& other) {
    ring_ = common_ring(ring_, other.ring_);
    if (other.order() < order()) coeffs_.resize(other.coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
    return *this;
}

PowerSeries& PowerSeries::operator-=(const PowerSeries& other) {
    ring_ = common_ring(ring_, other.ring_);
    if (other.order() < order()) coeffs_.resize(other.coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
    return *this;
}

PowerSeries PowerSeries::operator-() const {
    PowerSeries out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
    auto ring = common_ring(a.ring(), b.ring());
    const int order = std::min(a.order(), b.order());
    PowerSeries out(ring, order);
    for (int n = 0; n <= order; ++n) {
        PolyAccumulator acc(ring);
        for (int i = 0; i <= n; ++i) acc.add_product(a[i], b[n - i]);
        out.coeff(n) = acc.take();
    }
    return out;
}

PowerSeries operator*(const PowerSeries& a, const MultiPoly& c) {
    PowerSeries out(common_ring(a.ring(), c.ring()), a.order());
    for (int n = 0; n <= a.order(); ++n) out.coeff(n) = a[n] * c;
    return out;
}

bool operator==(const PowerSeries& a, const PowerSeries& b) {
    if (a.order() != b.order()) return false;
    for (int i = 0; i <= a.order(); ++i) {
        if (!(a[i] == b[i])) return false;
    }
    return true;
}

std::string PowerSeries::to_string() const {
    std::ostringstream os;
    for (int i = 0; i <= order(); ++i) {
        if ((*this)[i].is_zero()) continue;
        os << "x^" << i << ": " << (*this)[i].to_string() << '\n';
    }
    return os.str();
}

PowerSeries reciprocal(const PowerSeries& f) {
    const auto c0 = f[0].constant_value();
    if (!c0 || *c0 == 0) throw std::domain_error("reciprocal: constant term is not an invertible rational");
    const mpq_class inv0 = 1 / *c0;
    PowerSeries out(f.ring(), f.order());
    out.coeff(0) = MultiPoly::constant(f.ring(), inv0);
    for (int n = 1; n <= f.order(); ++n) {
        PolyAccumulator acc(f.ring());
        for (int i = 1; i <= n; ++i) acc.add_product(f[i], out[n - i]);
        out.coeff(n) = acc.take() * mpq_class(-inv0);
    }
    return out;
}

PowerSeries compose(const PowerSeries& f, const PowerSeries& g) {
    if (!g[0].is_zero()) throw std::domain_error("compose: inner series must have zero constant term");
    const int order = std::min(f.order(), g.order());
    auto ring = common_ring(f.ring(), g.ring());
    PowerSeries result = PowerSeries::constant(ring, f[order], order);
    const PowerSeries inner = g.truncate(order);
    for (int i = order - 1; i >= 0; --i) {
        result = result * inner;
        result.coeff(0) += f[i];
    }
    return result;
}

PowerSeries compositional_inverse(const PowerSeries& s) {
    const int order = s.order();
    if (order < 1) throw std::domain_error("compositional_inverse: order must be at least 1");
    const auto c1 = s[1].constant_value();
    if (!s[0].is_zero() || !c1 || *c1 != 1) {
        throw std::domain_error("compositional_inverse: need zero constant term and linear coefficient 1");
    }
    // s = x u(x) with u(0) = 1; [x^n] inverse = (1/n) [x^{n-1}] u^{-n}
    auto ring = s.ring();
    PowerSeries u(ring, order - 1);
    for (int i = 0; i < order; ++i) u.coeff(i) = s[i + 1];
    const PowerSeries r = reciprocal(u);
    PowerSeries out(ring, order);
    PowerSeries power = r;
    for (int n = 1; n <= order; ++n) {
        if (n > 1) power = power * r;
        out.coeff(n) = power[n - 1] * mpq_class(1, n);
    }
    return out;
}

PowerSeries expand_at_infinity(RingPtr ring, std::span<const MultiPoly> numer_roots,
                               std::span<const MultiPoly> denom_roots, int order) {
    PowerSeries out = PowerSeries::constant(ring, MultiPoly::constant(ring, 1), order);
    for (const auto& a : numer_roots) out = out.times_one_minus(a);
    for (const auto& b : denom_roots) out = out.over_one_minus(b);
    return out;
}

}  // namespace charpoly
