#include "charpoly/polyring.hpp"

#include <algorithm>
#include <cstring>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace charpoly {

// ---------------------------------------------------------------- Exponents

Exponents::Exponents(std::size_t n) {
    if (n > kMaxVariables) throw std::invalid_argument("too many variables");
    n_ = static_cast<std::uint8_t>(n);
}

Exponents::Exponents(std::initializer_list<int> values) : Exponents(values.size()) {
    std::size_t i = 0;
    for (int v : values) set(i++, v);
}

void Exponents::set(std::size_t i, int value) {
    if (i >= n_) throw std::out_of_range("exponent index out of range");
    if (value < 0 || value > kMaxExponent) throw std::overflow_error("exponent out of range");
    total_ = static_cast<std::uint16_t>(total_ - e_[i] + value);
    e_[i] = static_cast<std::uint8_t>(value);
}

std::vector<int> Exponents::to_vector() const {
    return std::vector<int>(e_.begin(), e_.begin() + n_);
}

Exponents operator+(const Exponents& a, const Exponents& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("exponent vectors of different length");
    Exponents out = a;
    for (std::size_t i = 0; i < a.n_; ++i) {
        const int v = a.e_[i] + b.e_[i];
        if (v > kMaxExponent) throw std::overflow_error("exponent out of range");
        out.e_[i] = static_cast<std::uint8_t>(v);
    }
    out.total_ = static_cast<std::uint16_t>(a.total_ + b.total_);
    return out;
}

std::size_t Exponents::hash() const noexcept {
    std::uint64_t lo = 0;
    std::uint64_t hi = 0;
    std::memcpy(&lo, e_.data(), 8);
    std::memcpy(&hi, e_.data() + 8, 8);
    std::uint64_t h = lo * 0x9E3779B97F4A7C15ULL;
    h ^= (hi + 0x632BE59BD9B4E019ULL + (h << 6) + (h >> 2));
    h ^= h >> 29;
    return static_cast<std::size_t>(h);
}

bool grlex_greater(const Exponents& a, const Exponents& b) noexcept {
    if (a.total() != b.total()) return a.total() > b.total();
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) return a[i] > b[i];
    }
    return false;
}

// --------------------------------------------------------------------- Ring

Ring::Ring(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.size() > kMaxVariables) throw std::invalid_argument("too many variables");
}

std::optional<std::size_t> Ring::index_of(std::string_view name) const {
    for (std::size_t i = 0; i < names_.size(); ++i) {
        if (names_[i] == name) return i;
    }
    return std::nullopt;
}

RingPtr make_ring(std::vector<std::string> names) {
    return std::make_shared<const Ring>(std::move(names));
}

RingPtr pq_ring(int m) {
    if (m < 1 || 2 * static_cast<std::size_t>(m) > kMaxVariables) {
        throw std::invalid_argument("number of colours out of range");
    }
    static std::mutex mu;
    static std::map<int, RingPtr> rings;
    std::lock_guard lock(mu);
    auto& slot = rings[m];
    if (!slot) {
        std::vector<std::string> names;
        for (int i = 1; i <= m; ++i) names.push_back("p" + std::to_string(i));
        for (int i = 1; i <= m; ++i) names.push_back("q" + std::to_string(i));
        slot = make_ring(std::move(names));
    }
    return slot;
}

RingPtr common_ring(const RingPtr& a, const RingPtr& b) {
    if (!a) return b;
    if (!b || a == b) return a;
    if (*a != *b) throw std::invalid_argument("polynomials belong to different rings");
    return a;
}

// ---------------------------------------------------------- PolyAccumulator

PolyAccumulator::PolyAccumulator(RingPtr ring) : ring_(std::move(ring)) {}

void PolyAccumulator::add_term(const Exponents& exps, const mpq_class& c) {
    if (mpz_cmp_ui(c.get_den_mpz_t(), 1) == 0) {
        ints_[exps] += c.get_num();
    } else {
        rats_[exps] += c;
    }
}

void PolyAccumulator::add(const MultiPoly& p) {
    ring_ = common_ring(ring_, p.ring());
    for (const auto& t : p.terms()) add_term(t.exps, t.coeff);
}

void PolyAccumulator::add_scaled(const MultiPoly& p, const mpq_class& c) {
    ring_ = common_ring(ring_, p.ring());
    if (c == 0) return;
    for (const auto& t : p.terms()) add_term(t.exps, t.coeff * c);
}

void PolyAccumulator::add_product(const MultiPoly& a, const MultiPoly& b) {
    ring_ = common_ring(ring_, common_ring(a.ring(), b.ring()));
    if (a.is_zero() || b.is_zero()) return;
    if (a.is_integral() && b.is_integral()) {
        for (const auto& ta : a.terms()) {
            for (const auto& tb : b.terms()) {
                mpz_class& slot = ints_[ta.exps + tb.exps];
                mpz_addmul(slot.get_mpz_t(), ta.coeff.get_num_mpz_t(), tb.coeff.get_num_mpz_t());
            }
        }
        return;
    }
    for (const auto& ta : a.terms()) {
        for (const auto& tb : b.terms()) {
            rats_[ta.exps + tb.exps] += ta.coeff * tb.coeff;
        }
    }
}

MultiPoly PolyAccumulator::take() {
    MultiPoly out(ring_);
    out.terms_.reserve(ints_.size() + rats_.size());
    for (auto& [exps, c] : rats_) {
        auto it = ints_.find(exps);
        if (it != ints_.end()) {
            c += mpq_class(it->second);
            ints_.erase(it);
        }
        if (c != 0) out.terms_.push_back(Term{exps, std::move(c)});
    }
    for (auto& [exps, c] : ints_) {
        if (c != 0) out.terms_.push_back(Term{exps, mpq_class(std::move(c))});
    }
    ints_.clear();
    rats_.clear();
    std::sort(out.terms_.begin(), out.terms_.end(),
              [](const Term& a, const Term& b) { return grlex_greater(a.exps, b.exps); });
    return out;
}

// ---------------------------------------------------------------- MultiPoly

MultiPoly::MultiPoly(RingPtr ring) : ring_(std::move(ring)) {}

MultiPoly MultiPoly::constant(RingPtr ring, const mpq_class& c) {
    Exponents zero(ring->size());
    return monomial(std::move(ring), zero, c);
}

MultiPoly MultiPoly::variable(RingPtr ring, std::size_t index) {
    if (index >= ring->size()) throw std::out_of_range("variable index out of range");
    Exponents e(ring->size());
    e.set(index, 1);
    return monomial(std::move(ring), e);
}

MultiPoly MultiPoly::variable(RingPtr ring, std::string_view name) {
    auto idx = ring->index_of(name);
    if (!idx) throw std::invalid_argument("unknown variable " + std::string(name));
    return variable(std::move(ring), *idx);
}

MultiPoly MultiPoly::monomial(RingPtr ring, const Exponents& exps, const mpq_class& c) {
    if (exps.size() != ring->size()) throw std::invalid_argument("exponent vector does not match ring");
    MultiPoly out(std::move(ring));
    if (c != 0) out.terms_.push_back(Term{exps, c});
    return out;
}

MultiPoly MultiPoly::from_terms(RingPtr ring, std::vector<Term> terms) {
    PolyAccumulator acc(ring);
    for (auto& t : terms) {
        if (t.exps.size() != ring->size()) throw std::invalid_argument("exponent vector does not match ring");
        t.coeff.canonicalize();
        acc.add_term(t.exps, t.coeff);
    }
    return acc.take();
}

int MultiPoly::total_degree() const noexcept {
    return terms_.empty() ? -1 : terms_.front().exps.total();
}

bool MultiPoly::is_homogeneous() const noexcept {
    return terms_.empty() || terms_.front().exps.total() == terms_.back().exps.total();
}

bool MultiPoly::is_integral() const noexcept {
    return std::all_of(terms_.begin(), terms_.end(),
                       [](const Term& t) { return mpz_cmp_ui(t.coeff.get_den_mpz_t(), 1) == 0; });
}

bool MultiPoly::has_nonnegative_coefficients() const noexcept {
    return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return sgn(t.coeff) >= 0; });
}

mpq_class MultiPoly::coefficient(const Exponents& exps) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), exps,
                               [](const Term& t, const Exponents& e) { return grlex_greater(t.exps, e); });
    if (it != terms_.end() && it->exps == exps) return it->coeff;
    return 0;
}

std::optional<mpq_class> MultiPoly::constant_value() const {
    if (terms_.empty()) return mpq_class(0);
    if (terms_.size() == 1 && terms_.front().exps.total() == 0) return terms_.front().coeff;
    return std::nullopt;
}

namespace {

// Merges two descending-sorted term lists, b scaled by `sign`.
std::vector<Term> merge_terms(const std::vector<Term>& a, const std::vector<Term>& b, int sign) {
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && grlex_greater(a[i].exps, b[j].exps))) {
            out.push_back(a[i++]);
        } else if (i == a.size() || grlex_greater(b[j].exps, a[i].exps)) {
            out.push_back(Term{b[j].exps, sign > 0 ? b[j].coeff : mpq_class(-b[j].coeff)});
            ++j;
        } else {
            mpq_class c = sign > 0 ? mpq_class(a[i].coeff + b[j].coeff) : mpq_class(a[i].coeff - b[j].coeff);
            if (c != 0) out.push_back(Term{a[i].exps, std::move(c)});
            ++i;
            ++j;
        }
    }
    return out;
}

}  // namespace

MultiPoly& MultiPoly::operator+=(const MultiPoly& other) {
    ring_ = common_ring(ring_, other.ring_);
    terms_ = merge_terms(terms_, other.terms_, +1);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& other) {
    ring_ = common_ring(ring_, other.ring_);
    terms_ = merge_terms(terms_, other.terms_, -1);
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    PolyAccumulator acc(common_ring(a.ring(), b.ring()));
    acc.add_product(a, b);
    return acc.take();
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& other) {
    *this = *this * other;
    return *this;
}

MultiPoly& MultiPoly::operator*=(const mpq_class& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_) t.coeff *= c;
    return *this;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly out = *this;
    for (auto& t : out.terms_) t.coeff = -t.coeff;
    return out;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    if (!a.terms_.empty()) common_ring(a.ring_, b.ring_);
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
        if (!(a.terms_[i].exps == b.terms_[i].exps) || a.terms_[i].coeff != b.terms_[i].coeff) return false;
    }
    return true;
}

mpq_class MultiPoly::eval(std::span<const mpq_class> point) const {
    if (terms_.empty()) return 0;
    if (point.size() != ring_->size()) throw std::invalid_argument("evaluation point has wrong dimension");
    // powers[i][e] = point[i]^e, built lazily up to the largest exponent in use
    std::vector<std::vector<mpq_class>> powers(point.size());
    for (std::size_t i = 0; i < point.size(); ++i) powers[i].push_back(1);
    mpq_class sum = 0;
    for (const auto& t : terms_) {
        mpq_class v = t.coeff;
        for (std::size_t i = 0; i < point.size(); ++i) {
            const auto e = static_cast<std::size_t>(t.exps[i]);
            auto& pw = powers[i];
            while (pw.size() <= e) pw.push_back(pw.back() * point[i]);
            if (e) v *= pw[e];
        }
        sum += v;
    }
    return sum;
}

MultiPoly MultiPoly::top_degree_part(int d) const {
    MultiPoly out(ring_);
    for (const auto& t : terms_) {
        if (t.exps.total() == d) out.terms_.push_back(t);
    }
    return out;
}

MultiPoly MultiPoly::negate_variables(std::span<const std::size_t> indices) const {
    MultiPoly out = *this;
    for (auto& t : out.terms_) {
        int parity = 0;
        for (auto i : indices) parity += t.exps[i];
        if (parity % 2) t.coeff = -t.coeff;
    }
    return out;
}

MultiPoly MultiPoly::substitute_neg_q() const {
    if (!ring_) return *this;
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < ring_->size(); ++i) {
        if (!ring_->names()[i].empty() && ring_->names()[i][0] == 'q') idx.push_back(i);
    }
    return negate_variables(idx);
}

std::string MultiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        const bool negative = sgn(t.coeff) < 0;
        if (first) {
            if (negative) os << '-';
        } else {
            os << (negative ? " - " : " + ");
        }
        first = false;
        const mpq_class mag = abs(t.coeff);
        bool wrote = false;
        if (mag != 1 || t.exps.total() == 0) {
            os << mag.get_str();
            wrote = true;
        }
        for (std::size_t i = 0; i < t.exps.size(); ++i) {
            if (t.exps[i] == 0) continue;
            if (wrote) os << '*';
            os << ring_->names()[i];
            if (t.exps[i] > 1) os << '^' << t.exps[i];
            wrote = true;
        }
    }
    return os.str();
}

nlohmann::ordered_json MultiPoly::to_json() const {
    nlohmann::ordered_json j;
    j["vars"] = ring_ ? ring_->names() : std::vector<std::string>{};
    auto terms = nlohmann::ordered_json::array();
    for (const auto& t : terms_) {
        nlohmann::ordered_json tj;
        tj["exps"] = t.exps.to_vector();
        tj["num"] = t.coeff.get_num().get_str();
        tj["den"] = t.coeff.get_den().get_str();
        terms.push_back(std::move(tj));
    }
    j["terms"] = std::move(terms);
    return j;
}

MultiPoly MultiPoly::from_json(const nlohmann::ordered_json& j) {
    auto ring = make_ring(j.at("vars").get<std::vector<std::string>>());
    std::vector<Term> terms;
    for (const auto& tj : j.at("terms")) {
        const auto exps = tj.at("exps").get<std::vector<int>>();
        if (exps.size() != ring->size()) throw std::invalid_argument("term arity does not match vars");
        Exponents e(exps.size());
        for (std::size_t i = 0; i < exps.size(); ++i) e.set(i, exps[i]);
        mpq_class c(mpz_class(tj.at("num").get<std::string>()), mpz_class(tj.at("den").get<std::string>()));
        if (c.get_den() == 0) throw std::invalid_argument("zero denominator");
        c.canonicalize();
        terms.push_back(Term{e, c});
    }
    return from_terms(std::move(ring), std::move(terms));
}

MultiPoly MultiPoly::deserialize(std::string_view text) {
    return from_json(nlohmann::ordered_json::parse(text));
}

}  // namespace charpoly
