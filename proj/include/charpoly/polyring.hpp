#pragma once

// Exact sparse multivariate polynomials over the rationals.
//
// A polynomial lives in a Ring (an ordered list of variable names). Terms are
// kept sorted in descending graded-lexicographic order with no zero
// coefficients, which is also the print and serialization order.

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "json.hpp"

namespace charpoly {

inline constexpr std::size_t kMaxVariables = 16;
inline constexpr int kMaxExponent = 255;

/// Exponent vector sized by the ring; exponents are limited to kMaxExponent.
class Exponents {
public:
    Exponents() = default;
    explicit Exponents(std::size_t n);
    Exponents(std::initializer_list<int> values);

    std::size_t size() const noexcept { return n_; }
    int operator[](std::size_t i) const noexcept { return e_[i]; }
    int total() const noexcept { return total_; }
    void set(std::size_t i, int value);
    void add(std::size_t i, int delta) { set(i, e_[i] + delta); }
    std::vector<int> to_vector() const;

    friend Exponents operator+(const Exponents& a, const Exponents& b);
    friend bool operator==(const Exponents& a, const Exponents& b) noexcept {
        return a.n_ == b.n_ && a.e_ == b.e_;
    }
    std::size_t hash() const noexcept;

private:
    std::array<std::uint8_t, kMaxVariables> e_{};
    std::uint16_t total_ = 0;
    std::uint8_t n_ = 0;
};

/// Descending graded-lex: higher total degree first, ties broken lexicographically.
bool grlex_greater(const Exponents& a, const Exponents& b) noexcept;

struct ExponentsHash {
    std::size_t operator()(const Exponents& e) const noexcept { return e.hash(); }
};

class Ring {
public:
    explicit Ring(std::vector<std::string> names);
    const std::vector<std::string>& names() const noexcept { return names_; }
    std::size_t size() const noexcept { return names_.size(); }
    std::optional<std::size_t> index_of(std::string_view name) const;
    friend bool operator==(const Ring&, const Ring&) = default;

private:
    std::vector<std::string> names_;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(std::vector<std::string> names);
/// Variables p1..pm, q1..qm in that order; one shared instance per m.
RingPtr pq_ring(int m);

struct Term {
    Exponents exps;
    mpq_class coeff;
};

class MultiPoly {
public:
    /// Zero polynomial with no ring; adopts the ring of whatever it is combined with.
    MultiPoly() = default;
    explicit MultiPoly(RingPtr ring);

    static MultiPoly constant(RingPtr ring, const mpq_class& c);
    static MultiPoly variable(RingPtr ring, std::size_t index);
    static MultiPoly variable(RingPtr ring, std::string_view name);
    static MultiPoly monomial(RingPtr ring, const Exponents& exps, const mpq_class& c = 1);
    /// Builds from unsorted terms, canonicalizing coefficients, merging duplicates and dropping zeros.
    static MultiPoly from_terms(RingPtr ring, std::vector<Term> terms);

    const RingPtr& ring() const noexcept { return ring_; }
    const std::vector<Term>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t term_count() const noexcept { return terms_.size(); }
    /// -1 for the zero polynomial.
    int total_degree() const noexcept;
    bool is_homogeneous() const noexcept;
    bool is_integral() const noexcept;
    bool has_nonnegative_coefficients() const noexcept;
    mpq_class coefficient(const Exponents& exps) const;
    /// Set when the polynomial is a constant (including zero).
    std::optional<mpq_class> constant_value() const;

    MultiPoly& operator+=(const MultiPoly& other);
    MultiPoly& operator-=(const MultiPoly& other);
    MultiPoly& operator*=(const MultiPoly& other);
    MultiPoly& operator*=(const mpq_class& c);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(MultiPoly a, const mpq_class& c) { return a *= c; }
    friend MultiPoly operator*(const mpq_class& c, MultiPoly a) { return a *= c; }
    MultiPoly operator-() const;
    friend bool operator==(const MultiPoly& a, const MultiPoly& b);

    mpq_class eval(std::span<const mpq_class> point) const;
    /// Terms of total degree exactly d.
    MultiPoly top_degree_part(int d) const;
    /// Every variable whose name starts with 'q' is replaced by its negative.
    MultiPoly substitute_neg_q() const;
    MultiPoly negate_variables(std::span<const std::size_t> indices) const;

    /// e.g. "-p1^2*q1 + p1*q1^2 - 2*p1*p2*q2"; zero prints "0".
    std::string to_string() const;
    /// {"vars": [...], "terms": [{"exps": [...], "num": "..", "den": ".."}, ...]}
    nlohmann::ordered_json to_json() const;
    static MultiPoly from_json(const nlohmann::ordered_json& j);
    std::string serialize() const { return to_json().dump(); }
    static MultiPoly deserialize(std::string_view text);

private:
    friend class PolyAccumulator;
    RingPtr ring_;
    std::vector<Term> terms_;
};

/// Sums of polynomials and products, collected in a hash map and sorted once.
/// Integer products go through mpz fused multiply-add.
class PolyAccumulator {
public:
    explicit PolyAccumulator(RingPtr ring);
    void add(const MultiPoly& p);
    void add_scaled(const MultiPoly& p, const mpq_class& c);
    void add_product(const MultiPoly& a, const MultiPoly& b);
    void add_term(const Exponents& exps, const mpq_class& c);
    MultiPoly take();

private:
    RingPtr ring_;
    std::unordered_map<Exponents, mpz_class, ExponentsHash> ints_;
    std::unordered_map<Exponents, mpq_class, ExponentsHash> rats_;
};

/// Throws std::invalid_argument unless both rings are equal (a null ring matches anything).
RingPtr common_ring(const RingPtr& a, const RingPtr& b);

}  // namespace charpoly
