#include "charpoly/colours.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace charpoly {

ColouredPermutation::ColouredPermutation(Permutation perm, std::map<int, int> colouring, int m)
    : perm_(std::move(perm)), colouring_(std::move(colouring)), m_(m) {
    if (m < 1) throw std::invalid_argument("number of colours must be positive");
    const auto cycles = perm_.cycles();
    if (cycles.size() != colouring_.size()) {
        throw std::invalid_argument("colouring must cover exactly the cycles of the permutation");
    }
    for (const auto& c : cycles) {
        auto it = colouring_.find(c.front());
        if (it == colouring_.end()) throw std::invalid_argument("colouring is not keyed by cycle minima");
        if (it->second < 1 || it->second > m) throw std::invalid_argument("colour out of range");
    }
}

ColouredPermutation ColouredPermutation::uniform(Permutation perm, int colour, int m) {
    std::map<int, int> colouring;
    for (const auto& c : perm.cycles()) colouring[c.front()] = colour;
    return ColouredPermutation(std::move(perm), std::move(colouring), m);
}

ColouredPermutation ColouredPermutation::from_cycle_colours(Permutation perm, const std::vector<int>& colours,
                                                            int m) {
    const auto cycles = perm.cycles();
    if (cycles.size() != colours.size()) throw std::invalid_argument("one colour per cycle required");
    std::map<int, int> colouring;
    for (std::size_t i = 0; i < cycles.size(); ++i) colouring[cycles[i].front()] = colours[i];
    return ColouredPermutation(std::move(perm), std::move(colouring), m);
}

ColouredPermutation ColouredPermutation::parse(std::string_view text, int m, int k) {
    // Tokens "(cycle):colour"; the concatenated cycles go to Permutation::parse.
    std::string cycles_text;
    std::map<int, int> colouring;
    std::size_t i = 0;
    auto read_int = [&](int& value) {
        bool digits = false;
        value = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            value = value * 10 + (text[i] - '0');
            digits = true;
            ++i;
        }
        return digits;
    };
    while (i < text.size()) {
        if (std::isspace(static_cast<unsigned char>(text[i]))) {
            ++i;
            continue;
        }
        const auto close = text.find(')', i);
        if (text[i] != '(' || close == std::string_view::npos) {
            throw std::invalid_argument("expected '(cycle):colour'");
        }
        cycles_text += text.substr(i, close - i + 1);
        int smallest = 0;
        for (++i; i < close;) {
            int v = 0;
            if (read_int(v)) {
                smallest = smallest == 0 ? v : std::min(smallest, v);
            } else {
                ++i;
            }
        }
        i = close + 1;
        if (i >= text.size() || text[i] != ':') throw std::invalid_argument("missing ':colour'");
        ++i;
        int colour = 0;
        if (!read_int(colour)) throw std::invalid_argument("missing colour value");
        if (smallest == 0) throw std::invalid_argument("empty cycle");
        colouring[smallest] = colour;
    }
    auto perm = Permutation::parse(cycles_text, k);
    return ColouredPermutation(std::move(perm), std::move(colouring), m);
}

int ColouredPermutation::colour_of_symbol(int x) const {
    // The cycle minimum is found by walking the cycle.
    int mn = x;
    for (int y = perm_(x); y != x; y = perm_(y)) mn = std::min(mn, y);
    return colouring_.at(mn);
}

std::vector<int> ColouredPermutation::symbol_colours() const {
    std::vector<int> out(static_cast<std::size_t>(perm_.size()));
    for (const auto& c : perm_.cycles()) {
        const int colour = colouring_.at(c.front());
        for (int x : c) out[static_cast<std::size_t>(x - 1)] = colour;
    }
    return out;
}

std::string ColouredPermutation::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& c : perm_.cycles()) {
        if (!first) os << ' ';
        first = false;
        os << '(';
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (i) os << ' ';
            os << c[i];
        }
        os << "):" << colouring_.at(c.front());
    }
    return os.str();
}

ColouredPermutation coloured_compose(const ColouredPermutation& ap, const Permutation& b) {
    if (ap.perm().size() != b.size()) throw std::invalid_argument("coloured_compose: sizes differ");
    const auto symbol_colour = ap.symbol_colours();
    Permutation gamma = compose(ap.perm(), b);
    std::map<int, int> nu;
    for (const auto& u : gamma.cycles()) {
        int colour = 0;
        for (int x : u) colour = std::max(colour, symbol_colour[static_cast<std::size_t>(x - 1)]);
        nu[u.front()] = colour;
    }
    return ColouredPermutation(std::move(gamma), std::move(nu), ap.colours());
}

ColourVector kappa_m(const ColouredPermutation& ap) {
    ColourVector counts(static_cast<std::size_t>(ap.colours()), 0);
    for (const auto& [mn, colour] : ap.colouring()) ++counts[static_cast<std::size_t>(colour - 1)];
    return counts;
}

Exponents weight_monomial(const ColourVector& counts, VariableFamily family) {
    const auto m = counts.size();
    Exponents e(2 * m);
    const std::size_t offset = family == VariableFamily::P ? 0 : m;
    for (std::size_t i = 0; i < m; ++i) e.set(offset + i, counts[i]);
    return e;
}

Exponents weight_monomial(const ColouredPermutation& ap, VariableFamily family) {
    return weight_monomial(kappa_m(ap), family);
}

void for_each_coloured(int k, int m, const std::function<void(const ColouredPermutation&)>& visit) {
    if (m < 1) throw std::invalid_argument("number of colours must be positive");
    for_each_permutation(k, [&](const Permutation& alpha) {
        const auto cycles = alpha.cycles();
        std::vector<int> colours(cycles.size(), 1);
        for (;;) {
            visit(ColouredPermutation::from_cycle_colours(alpha, colours, m));
            // odometer, last cycle fastest
            std::size_t i = colours.size();
            while (i > 0 && colours[i - 1] == m) colours[--i] = 1;
            if (i == 0) break;
            ++colours[i - 1];
        }
    });
}

std::vector<ColouredPermutation> enumerate_coloured(int k, int m) {
    std::vector<ColouredPermutation> out;
    for_each_coloured(k, m, [&](const ColouredPermutation& c) { out.push_back(c); });
    return out;
}

}  // namespace charpoly
