#include "charpoly/cli.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

#include "CLI11.hpp"
#include "charpoly/factor.hpp"
#include "charpoly/stanley.hpp"
#include "charpoly/trees.hpp"
#include "charpoly/verify.hpp"
#include "json.hpp"

namespace charpoly {

namespace {

using Json = nlohmann::ordered_json;

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct Options {
    bool json = false;
    bool timings = false;
    bool no_cache = false;
    std::optional<std::string> cache_dir;
    int k = 0;
    int m = 1;
    int kmax = 0;
    int order = 12;
    int grid = 4;
    int index = 0;
    std::string mu;
    std::string method = "enumerate";
};

Json series_json(const PowerSeries& s) {
    Json arr = Json::array();
    for (const auto& c : s.coefficients()) arr.push_back(c.to_json());
    return arr;
}

void print_poly(std::ostream& out, const Options& o, const std::string& command, Json params,
                const std::vector<std::pair<std::string, MultiPoly>>& polys) {
    if (o.json) {
        Json j;
        j["schema_version"] = kReportSchemaVersion;
        j["command"] = command;
        j["params"] = std::move(params);
        for (const auto& [name, p] : polys) {
            j[name] = p.to_json();
            j[name + "_text"] = p.to_string();
        }
        out << j.dump(2) << '\n';
        return;
    }
    for (const auto& [name, p] : polys) {
        if (polys.size() > 1) out << name << ": ";
        out << p.to_string() << '\n';
    }
}

int emit(std::ostream& out, const Options& o, const Report& rep) {
    if (o.json) {
        out << rep.to_json(o.timings).dump(2) << '\n';
    } else {
        out << rep.to_text(o.timings);
    }
    return rep.exit_code();
}

void require(bool ok, const std::string& message) {
    if (!ok) throw UsageError(message);
}

void require_km(const Options& o, bool need_k = true) {
    if (need_k) require(o.k >= 1, "--k must be at least 1");
    require(o.m >= 1 && o.m <= static_cast<int>(kMaxVariables / 2), "--m must be between 1 and 8");
}

Partition parse_mu(const std::string& text) {
    try {
        Partition mu = Partition::parse(text);
        require(!mu.empty(), "--mu must be a nonempty partition");
        return mu;
    } catch (const UsageError&) {
        throw;
    } catch (const std::exception& e) {
        throw UsageError(std::string("--mu: ") + e.what());
    }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Stanley character polynomials, coloured top factorizations and plane trees", "charpoly"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_flag("--json", o.json, "Machine-readable JSON output");
    app.add_flag("--timings", o.timings, "Include wall-clock times in verification reports");
    app.add_flag("--no-cache", o.no_cache, "Do not read or write the polynomial cache");
    app.add_option("--cache-dir", o.cache_dir,
                   "Cache directory (default: $CHARPOLY_CACHE_DIR or .charpoly-cache)");

    auto* fk = app.add_subcommand("fk", "F_k by the residue formula");
    fk->add_option("--k", o.k)->required();
    fk->add_option("--m", o.m)->required();

    auto* fmu = app.add_subcommand("fmu", "F_mu by interpolation of normalized characters");
    fmu->add_option("--mu", o.mu, "Partition, e.g. 3,2,1")->required();
    fmu->add_option("--m", o.m)->required();

    auto* topfact = app.add_subcommand("topfact", "Coloured factorization sums (top stratum and full)");
    auto* tk = topfact->add_option("--k", o.k, "Target (1 2 .. k)");
    auto* tmu = topfact->add_option("--mu", o.mu, "Target: canonical element of class mu");
    tk->excludes(tmu);
    topfact->add_option("--m", o.m)->required();

    auto* trees = app.add_subcommand("trees", "Coloured black and white plane trees");
    trees->require_subcommand(1);
    auto* tseries = trees->add_subcommand("series", "Tree series T(x)");
    tseries->add_option("--m", o.m)->required();
    tseries->add_option("--order", o.order)->required();
    tseries->add_option("--method", o.method)->check(CLI::IsMember({"enumerate", "recursion"}));
    auto* tdot = trees->add_subcommand("dot", "Graphviz export of one enumerated tree");
    tdot->add_option("--k", o.k, "Number of edges")->required();
    tdot->add_option("--index", o.index, "0-based position in enumeration order")->required();
    tdot->add_option("--m", o.m, "Number of colours (default 1)");

    auto* verify = app.add_subcommand("verify", "Verification harness");
    verify->require_subcommand(1);
    auto* v_thm = verify->add_subcommand("theorem1", "Top terms of F_k against TopFact");
    v_thm->add_option("--kmax", o.kmax)->required();
    v_thm->add_option("--m", o.m)->required();
    auto* v_cor = verify->add_subcommand("corollary", "Product formula for the top terms of F_mu");
    v_cor->add_option("--k", o.k)->required();
    v_cor->add_option("--m", o.m)->required();
    auto* v_lem = verify->add_subcommand("lemmas", "Planted-series lemma residuals");
    v_lem->add_option("--m", o.m)->required();
    v_lem->add_option("--order", o.order)->required();
    auto* v_conj = verify->add_subcommand("conjecture", "Full coloured sums against F_mu");
    v_conj->add_option("--k", o.k)->required();
    v_conj->add_option("--m", o.m)->required();
    auto* v_chr = verify->add_subcommand("characters", "F_mu against normalized characters");
    v_chr->add_option("--k", o.k)->required();
    v_chr->add_option("--m", o.m)->required();
    v_chr->add_option("--grid", o.grid)->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "charpoly: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        const PolyCache cache = PolyCache::from_settings(o.cache_dir, o.no_cache);
        if (*fk) {
            require_km(o);
            print_poly(out, o, "fk", Json{{"k", o.k}, {"m", o.m}}, {{"polynomial", cached_f_k(o.k, o.m, cache)}});
            return 0;
        }
        if (*fmu) {
            require_km(o, false);
            const Partition mu = parse_mu(o.mu);
            print_poly(out, o, "fmu", Json{{"mu", o.mu}, {"m", o.m}},
                       {{"polynomial", cached_f_mu(mu, o.m, cache)}});
            return 0;
        }
        if (*topfact) {
            require(tk->count() + tmu->count() == 1, "topfact needs exactly one of --k or --mu");
            require_km(o, tk->count() > 0);
            const Permutation target = tk->count() ? full_cycle(o.k) : canonical_class_rep(parse_mu(o.mu));
            Json params = tk->count() ? Json{{"k", o.k}, {"m", o.m}} : Json{{"mu", o.mu}, {"m", o.m}};
            print_poly(out, o, "topfact", std::move(params),
                       {{"top", coloured_weight_sum(target, o.m, Stratum::Top)},
                        {"all", coloured_weight_sum(target, o.m, Stratum::All)}});
            return 0;
        }
        if (*tseries) {
            require_km(o, false);
            require(o.order >= 1, "--order must be at least 1");
            PowerSeries t(pq_ring(o.m), o.order);
            if (o.method == "enumerate") {
                t = t_series_enumerated(o.m, o.order);
            } else {
                const PlantedSeries s = planted_series(o.m, o.order);
                for (const auto& b : s.b) t += b;
                for (int i = 0; i < o.m; ++i) {
                    t.coeff(1) -= MultiPoly::variable(pq_ring(o.m), static_cast<std::size_t>(i));
                }
            }
            if (o.json) {
                Json j;
                j["schema_version"] = kReportSchemaVersion;
                j["command"] = "trees series";
                j["params"] = Json{{"m", o.m}, {"order", o.order}, {"method", o.method}};
                j["coefficients"] = series_json(t);
                out << j.dump(2) << '\n';
            } else {
                out << t.to_string();
            }
            return 0;
        }
        if (*tdot) {
            require_km(o);
            require(o.index >= 0, "--index must be nonnegative");
            int seen = 0;
            std::optional<PlaneTree> chosen;
            for_each_tree(o.k, o.m, [&](const PlaneTree& t) {
                if (seen++ == o.index) chosen = t;
            });
            require(chosen.has_value(), "--index out of range: there are " + std::to_string(seen) + " trees");
            out << to_dot(*chosen);
            return 0;
        }
        if (*v_thm) {
            require(o.kmax >= 1, "--kmax must be at least 1");
            require_km(o, false);
            return emit(out, o, verify_theorem1(o.kmax, o.m, cache));
        }
        if (*v_cor) {
            require_km(o);
            return emit(out, o, verify_corollary(o.k, o.m));
        }
        if (*v_lem) {
            require_km(o, false);
            require(o.order >= 1, "--order must be at least 1");
            return emit(out, o, verify_lemmas(o.m, o.order));
        }
        if (*v_conj) {
            require_km(o);
            return emit(out, o, verify_conjecture(o.k, o.m, cache));
        }
        if (*v_chr) {
            require_km(o);
            require(o.grid >= 1, "--grid must be at least 1");
            return emit(out, o, verify_characters(o.k, o.m, o.grid, cache));
        }
    } catch (const UsageError& e) {
        err << "charpoly: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "charpoly: error: " << e.what() << '\n';
        return 1;
    }
    err << "charpoly: no command given\n";
    return kExitUsage;
}

}  // namespace charpoly
