#include "charpoly/charlib.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <vector>

namespace charpoly {

namespace {

using Shape = std::vector<int>;

struct MemoKey {
    Shape shape;
    std::vector<int> parts;
    bool shortcut;
    friend auto operator<=>(const MemoKey&, const MemoKey&) = default;
};

std::map<MemoKey, mpz_class>& memo() {
    thread_local std::map<MemoKey, mpz_class> table;
    return table;
}

mpz_class hook_dimension(const Shape& shape) {
    if (shape.empty()) return 1;
    std::vector<int> conj(static_cast<std::size_t>(shape.front()), 0);
    int n = 0;
    for (int part : shape) {
        n += part;
        for (int j = 0; j < part; ++j) ++conj[static_cast<std::size_t>(j)];
    }
    mpz_class num;
    mpz_fac_ui(num.get_mpz_t(), static_cast<unsigned long>(n));
    mpz_class den = 1;
    for (std::size_t i = 0; i < shape.size(); ++i) {
        for (int j = 0; j < shape[i]; ++j) {
            const int arm = shape[i] - j - 1;
            const int leg = conj[static_cast<std::size_t>(j)] - static_cast<int>(i) - 1;
            den *= arm + leg + 1;
        }
    }
    return num / den;
}

// Every way of removing a border strip of length r, as (resulting shape, sign).
// Uses beta-numbers: a strip of length r is a bead moved from b to b - r.
std::vector<std::pair<Shape, int>> remove_strips(const Shape& shape, int r) {
    const int len = static_cast<int>(shape.size());
    std::vector<int> beta(shape.size());
    for (int i = 0; i < len; ++i) beta[static_cast<std::size_t>(i)] = shape[static_cast<std::size_t>(i)] + len - 1 - i;
    std::vector<std::pair<Shape, int>> out;
    for (int i = 0; i < len; ++i) {
        const int b = beta[static_cast<std::size_t>(i)];
        const int target = b - r;
        if (target < 0 || std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
        int between = 0;
        for (int v : beta) {
            if (v > target && v < b) ++between;
        }
        std::vector<int> moved = beta;
        moved[static_cast<std::size_t>(i)] = target;
        std::sort(moved.begin(), moved.end(), std::greater<>());
        Shape next;
        for (int j = 0; j < len; ++j) {
            const int part = moved[static_cast<std::size_t>(j)] - (len - 1 - j);
            if (part > 0) next.push_back(part);
        }
        out.emplace_back(std::move(next), between % 2 ? -1 : 1);
    }
    return out;
}

mpz_class strip_recursion(const Shape& shape, const std::vector<int>& parts, bool shortcut) {
    if (parts.empty()) return shape.empty() ? 1 : 0;
    if (shortcut && parts.front() == 1) return hook_dimension(shape);
    MemoKey key{shape, parts, shortcut};
    auto& table = memo();
    if (auto it = table.find(key); it != table.end()) return it->second;
    const std::vector<int> rest(parts.begin() + 1, parts.end());
    mpz_class total = 0;
    for (const auto& [next, sign] : remove_strips(shape, parts.front())) {
        const mpz_class v = strip_recursion(next, rest, shortcut);
        if (sign > 0) {
            total += v;
        } else {
            total -= v;
        }
    }
    table.emplace(std::move(key), total);
    return total;
}

void check_sizes(const Partition& omega, const Partition& lam) {
    if (omega.size() != lam.size()) throw std::invalid_argument("character: |omega| != |lambda|");
}

}  // namespace

mpz_class character(const Partition& omega, const Partition& lam) {
    check_sizes(omega, lam);
    return strip_recursion(omega.parts(), lam.parts(), true);
}

mpz_class character_mn(const Partition& omega, const Partition& lam) {
    check_sizes(omega, lam);
    return strip_recursion(omega.parts(), lam.parts(), false);
}

mpz_class dimension(const Partition& omega) { return hook_dimension(omega.parts()); }

mpz_class falling_factorial(const mpz_class& n, int k) {
    mpz_class out = 1;
    for (int i = 0; i < k; ++i) out *= n - i;
    return out;
}

NormalizedValue normalized_character(const Partition& omega, const Partition& mu) {
    const int n = omega.size();
    const int k = mu.size();
    if (k > n) throw std::invalid_argument("normalized_character: |mu| exceeds |omega|");
    const mpz_class chi = character(omega, mu.padded_to(n));
    mpq_class value(falling_factorial(n, k) * chi, dimension(omega));
    value.canonicalize();
    return NormalizedValue{std::move(value), n, k};
}

}  // namespace charpoly
