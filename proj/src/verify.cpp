#include "charpoly/verify.hpp"

#include <chrono>
#include <functional>
#include <string>

#include "charpoly/charlib.hpp"
#include "charpoly/factor.hpp"
#include "charpoly/stanley.hpp"
#include "charpoly/trees.hpp"

namespace charpoly {

namespace {

using Json = nlohmann::ordered_json;

std::string key_of(const Partition& mu) {
    std::string out;
    for (int part : mu.parts()) out += (out.empty() ? "" : "-") + std::to_string(part);
    return out;
}

std::string text_of(const Partition& mu) {
    std::string out;
    for (int part : mu.parts()) out += (out.empty() ? "" : ",") + std::to_string(part);
    return out;
}

template <typename F>
CheckResult timed(F&& run) {
    const auto start = std::chrono::steady_clock::now();
    CheckResult r = run();
    r.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

CheckResult series_check(std::string name, Json params, const PowerSeries& residual) {
    const auto [power, coeff] = first_nonzero(residual);
    CheckResult r = compare_check(std::move(name), std::move(params), coeff);
    if (power >= 0) r.detail = "first nonzero coefficient at x^" + std::to_string(power);
    return r;
}

}  // namespace

MultiPoly cached_f_k(int k, int m, const PolyCache& cache) {
    return cache.get_or_compute("fk_k" + std::to_string(k) + "_m" + std::to_string(m),
                                [&] { return f_k_residue(k, m); });
}

MultiPoly cached_f_mu(const Partition& mu, int m, const PolyCache& cache) {
    return cache.get_or_compute("fmu_" + key_of(mu) + "_m" + std::to_string(m),
                                [&] { return f_mu_interpolate(mu, m); });
}

std::pair<int, MultiPoly> first_nonzero(const PowerSeries& s) {
    for (int i = 0; i <= s.order(); ++i) {
        if (!s[i].is_zero()) return {i, s[i]};
    }
    return {-1, MultiPoly(s.ring())};
}

Report verify_theorem1(int kmax, int m, const PolyCache& cache) {
    Report rep{"verify theorem1", {}};
    auto ring = pq_ring(m);
    PowerSeries expected(ring, kmax + 1);
    expected.coeff(0) = MultiPoly::constant(ring, -1);
    MultiPoly linear(ring);
    for (int i = 0; i < m; ++i) linear += MultiPoly::variable(ring, static_cast<std::size_t>(i));
    expected.coeff(1) = linear;
    for (int k = 1; k <= kmax; ++k) {
        rep.checks.push_back(timed([&] {
            const MultiPoly lhs = signed_neg_q(cached_f_k(k, m, cache), k).top_degree_part(k + 1);
            const MultiPoly rhs = coloured_weight_sum(full_cycle(k), m, Stratum::Top);
            expected.coeff(k + 1) = rhs;
            return compare_check("theorem1.top_terms", Json{{"k", k}, {"m", m}}, lhs - rhs);
        }));
    }
    rep.checks.push_back(timed([&] {
        const PowerSeries lhs = reflect(g_series(m, std::max(kmax + 1, 2))).truncate(kmax + 1);
        return series_check("theorem1.series", Json{{"m", m}, {"order", kmax + 1}}, lhs - expected);
    }));
    return rep;
}

Report verify_corollary(int k, int m) {
    Report rep{"verify corollary", {}};
    for (const auto& mu : partitions_of(k)) {
        const Json params{{"mu", text_of(mu)}, {"m", m}};
        MultiPoly top;
        rep.checks.push_back(timed([&] {
            top = topfact_mu(mu, m);
            return compare_check("corollary.product_formula", params, top - top_product_formula(mu, m));
        }));
        rep.checks.push_back(timed([&] {
            const MultiPoly full_top = conjecture_sum(mu, m).top_degree_part(k + mu.length());
            return compare_check("corollary.top_stratum", params, top - full_top);
        }));
    }
    return rep;
}

Report verify_lemmas(int m, int order) {
    Report rep{"verify lemmas", {}};
    for (int i = 1; i <= m; ++i) {
        rep.checks.push_back(timed([&] {
            return series_check("lemma1", Json{{"i", i}, {"m", m}, {"order", order}}, verify_lemma1(i, m, order));
        }));
    }
    for (int i = 0; i <= m; ++i) {
        rep.checks.push_back(timed([&] {
            return series_check("lemma2", Json{{"i", i}, {"m", m}, {"order", order}}, verify_lemma2(i, m, order));
        }));
    }
    return rep;
}

Report verify_conjecture(int k, int m, const PolyCache& cache) {
    Report rep{"verify conjecture", {}};
    const bool open = m >= 2;
    for (const auto& mu : partitions_of(k)) {
        const Json params{{"mu", text_of(mu)}, {"m", m}};
        MultiPoly signed_f;
        rep.checks.push_back(timed([&] {
            signed_f = signed_neg_q(cached_f_mu(mu, m, cache), k);
            return compare_check("conjecture.sum", params, conjecture_sum(mu, m) - signed_f, open);
        }));
        rep.checks.push_back(timed([&] {
            std::vector<Term> negative;
            for (const auto& t : signed_f.terms()) {
                if (t.coeff < 0) negative.push_back(t);
            }
            CheckResult r = compare_check("conjecture.positivity", params,
                                          MultiPoly::from_terms(signed_f.ring(), negative), open);
            if (r.witness) r.detail = "witness lists the negative terms of (-1)^k F_mu(p;-q)";
            return r;
        }));
    }
    return rep;
}

Report verify_characters(int k, int m, int grid, const PolyCache& cache) {
    Report rep{"verify characters", {}};
    for (const auto& mu : partitions_of(k)) {
        const Json params{{"mu", text_of(mu)}, {"m", m}, {"grid", grid}};
        rep.checks.push_back(timed([&] {
            const MultiPoly f = cached_f_mu(mu, m, cache);
            int shapes = 0;
            std::vector<int> p(static_cast<std::size_t>(m), 1);
            std::vector<int> q(static_cast<std::size_t>(m), 1);
            // odometer over p in [1, grid]^m and q in [1, grid]^m, keeping weakly decreasing q
            std::function<std::optional<CheckResult>(int)> walk = [&](int pos) -> std::optional<CheckResult> {
                if (pos == 2 * m) {
                    const Shape shape(p, q);
                    if (shape.n() < k) return std::nullopt;
                    ++shapes;
                    const mpq_class want = normalized_character(shape.to_partition(), mu).value;
                    const mpq_class got = evaluate(f, shape);
                    if (want == got) return std::nullopt;
                    CheckResult r = compare_check("characters.evaluation", params,
                                                  MultiPoly::constant(f.ring(), got - want));
                    r.detail = "at " + shape.to_string();
                    return r;
                }
                const bool is_q = pos >= m;
                const auto i = static_cast<std::size_t>(is_q ? pos - m : pos);
                const int hi = is_q && i > 0 ? q[i - 1] : grid;
                for (int v = 1; v <= hi; ++v) {
                    (is_q ? q : p)[i] = v;
                    if (auto bad = walk(pos + 1)) return bad;
                }
                return std::nullopt;
            };
            if (auto bad = walk(0)) return *bad;
            CheckResult r = compare_check("characters.evaluation", params, MultiPoly(f.ring()));
            r.detail = std::to_string(shapes) + " shapes";
            return r;
        }));
        if (mu.length() == 1) {
            rep.checks.push_back(timed([&] {
                return compare_check("characters.residue", Json{{"k", k}, {"m", m}},
                                     cached_f_k(k, m, cache) - cached_f_mu(mu, m, cache));
            }));
        }
    }
    return rep;
}

}  // namespace charpoly
