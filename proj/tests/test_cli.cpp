#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <unistd.h>

#include "charpoly/cache.hpp"
#include "charpoly/cli.hpp"
#include "charpoly/stanley.hpp"
#include "charpoly/verify.hpp"
#include "json.hpp"

using namespace charpoly;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

// Scratch cache directory, removed afterwards.
struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() / ("charpoly-test-" + std::to_string(::getpid()) + "-" +
                                            std::to_string(counter()++));
        fs::remove_all(path);
    }
    ~TempDir() { fs::remove_all(path); }
    static int& counter() {
        static int c = 0;
        return c;
    }
};

}  // namespace

TEST_CASE("fk prints F_2") {
    const auto r = run({"fk", "--k", "2", "--m", "2", "--no-cache"});
    CHECK(r.code == 0);
    CHECK(r.out == "-p1^2*q1 - 2*p1*p2*q2 + p1*q1^2 - p2^2*q2 + p2*q2^2\n");
    const auto j = run({"fk", "--k", "1", "--m", "2", "--no-cache", "--json"});
    CHECK(j.code == 0);
    const auto parsed = nlohmann::ordered_json::parse(j.out);
    CHECK(parsed["schema_version"] == 1);
    CHECK(parsed["polynomial_text"] == "p1*q1 + p2*q2");
    CHECK(MultiPoly::from_json(parsed["polynomial"]) == f_k_residue(1, 2));
}

TEST_CASE("fmu and topfact") {
    CHECK(run({"fmu", "--mu", "2", "--m", "1", "--no-cache"}).out == "-p1^2*q1 + p1*q1^2\n");
    const auto t = run({"topfact", "--k", "3", "--m", "1"});
    CHECK(t.code == 0);
    CHECK(t.out == "top: p1^3*q1 + 3*p1^2*q1^2 + p1*q1^3\nall: p1^3*q1 + 3*p1^2*q1^2 + p1*q1^3 + p1*q1\n");
    CHECK(run({"topfact", "--mu", "1,1", "--m", "1"}).out == "top: p1^2*q1^2\nall: p1^2*q1^2 + p1*q1\n");
}

TEST_CASE("usage errors exit 64") {
    CHECK(run({}).code == kExitUsage);
    CHECK(run({"frobnicate"}).code == kExitUsage);
    CHECK(run({"fk", "--k", "2"}).code == kExitUsage);
    CHECK(run({"fk", "--k", "0", "--m", "1", "--no-cache"}).code == kExitUsage);
    CHECK(run({"fk", "--k", "2", "--m", "9", "--no-cache"}).code == kExitUsage);
    CHECK(run({"fmu", "--mu", "1,2", "--m", "1", "--no-cache"}).code == kExitUsage);
    CHECK(run({"topfact", "--m", "1"}).code == kExitUsage);
    CHECK(run({"topfact", "--k", "2", "--mu", "2", "--m", "1"}).code == kExitUsage);
    CHECK(run({"trees", "series", "--m", "1", "--order", "4", "--method", "guess"}).code == kExitUsage);
    CHECK(run({"trees", "dot", "--k", "3", "--index", "5"}).code == kExitUsage);
    const auto help = run({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("verify") != std::string::npos);
}

TEST_CASE("verification commands pass with exit code 0") {
    const auto thm = run({"verify", "theorem1", "--kmax", "4", "--m", "2", "--no-cache"});
    CHECK(thm.code == 0);
    CHECK(thm.out.find("overall: pass") != std::string::npos);
    CHECK(run({"verify", "corollary", "--k", "3", "--m", "2"}).code == 0);
    CHECK(run({"verify", "lemmas", "--m", "1", "--order", "10"}).code == 0);
    CHECK(run({"verify", "characters", "--k", "2", "--m", "2", "--grid", "2", "--no-cache"}).code == 0);
    const auto conj1 = run({"verify", "conjecture", "--k", "3", "--m", "1", "--no-cache", "--json"});
    CHECK(conj1.code == 0);
    CHECK(nlohmann::ordered_json::parse(conj1.out)["status"] == "pass");
    const auto conj2 = run({"verify", "conjecture", "--k", "3", "--m", "2", "--no-cache", "--json"});
    CHECK(conj2.code == 0);
    const auto j = nlohmann::ordered_json::parse(conj2.out);
    CHECK(j["status"] == "open-conjecture-pass");
    for (const auto& c : j["checks"]) {
        CHECK(c["status"] == "open-conjecture-pass");
        CHECK(c["witness"].is_null());
        CHECK(!c.contains("wall_seconds"));
    }
}

TEST_CASE("reports carry witnesses and exit codes") {
    Report rep{"demo", {}};
    const auto p = MultiPoly::variable(pq_ring(1), "p1");
    rep.checks.push_back(compare_check("a", {}, MultiPoly(pq_ring(1))));
    CHECK(rep.exit_code() == 0);
    rep.checks.push_back(compare_check("b", {}, p, true));
    CHECK(rep.overall() == Status::OpenMismatch);
    CHECK(rep.exit_code() == 2);
    CHECK(rep.checks.back().witness == p);
    rep.checks.push_back(compare_check("c", {}, p));
    CHECK(rep.exit_code() == 1);
    const auto j = rep.to_json(false);
    CHECK(j["checks"][2]["status"] == "fail");
    CHECK(j["checks"][2]["witness_text"] == "p1");
    CHECK(rep.to_json(true)["checks"][0].contains("wall_seconds"));
}

TEST_CASE("output is byte-for-byte deterministic") {
    const std::vector<std::string> args{"verify", "corollary", "--k", "4", "--m", "2", "--json"};
    CHECK(run(args).out == run(args).out);
    const std::vector<std::string> series{"trees", "series", "--m", "2", "--order", "5"};
    CHECK(run(series).out == run(series).out);
    auto recursion = series;
    recursion.insert(recursion.end(), {"--method", "recursion"});
    CHECK(run(recursion).out == run(series).out);
}

TEST_CASE("DOT export through the CLI") {
    const auto r = run({"trees", "dot", "--k", "2", "--index", "1"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("graph tree {", 0) == 0);
    CHECK(run({"trees", "dot", "--k", "2", "--index", "3", "--m", "2"}).code == 0);
}

TEST_CASE("cache entries reload equal to recomputation") {
    TempDir dir;
    const PolyCache cache(dir.path);
    for (int k = 1; k <= 3; ++k) {
        for (int m = 1; m <= 2; ++m) {
            const auto first = cached_f_k(k, m, cache);
            CHECK(fs::exists(cache.path_for("fk_k" + std::to_string(k) + "_m" + std::to_string(m))));
            CHECK(cached_f_k(k, m, cache) == f_k_residue(k, m));
            CHECK(first == f_k_residue(k, m));
            const Partition mu({k});
            cached_f_mu(mu, m, cache);
            const auto reloaded = cache.load("fmu_" + std::to_string(k) + "_m" + std::to_string(m));
            REQUIRE(reloaded.has_value());
            CHECK(*reloaded == f_mu_interpolate(mu, m));
        }
    }
    // CLI writes through the same cache and reads it back
    const auto a = run({"fmu", "--mu", "2,1", "--m", "2", "--cache-dir", dir.path.string()});
    CHECK(fs::exists(dir.path / "fmu_2-1_m2.json"));
    const auto b = run({"fmu", "--mu", "2,1", "--m", "2", "--cache-dir", dir.path.string()});
    CHECK(a.out == b.out);
    CHECK(a.out == run({"fmu", "--mu", "2,1", "--m", "2", "--no-cache"}).out);

    // a corrupt entry is a miss and gets rewritten
    {
        std::ofstream bad(cache.path_for("fk_k2_m2"));
        bad << "{not json";
    }
    CHECK(!cache.load("fk_k2_m2").has_value());
    CHECK(cached_f_k(2, 2, cache) == f_k_residue(2, 2));
    CHECK(cache.load("fk_k2_m2").has_value());

    // no temporary files are left behind
    for (const auto& entry : fs::directory_iterator(dir.path)) CHECK(entry.path().extension() == ".json");
    CHECK_THROWS_AS(cache.path_for("../escape"), std::invalid_argument);
}

TEST_CASE("cache directory settings") {
    CHECK(!PolyCache::from_settings(std::nullopt, true).enabled());
    CHECK(PolyCache::from_settings(std::string("x"), false).dir() == fs::path("x"));
    ::setenv("CHARPOLY_CACHE_DIR", "/tmp/elsewhere", 1);
    CHECK(PolyCache::from_settings(std::nullopt, false).dir() == fs::path("/tmp/elsewhere"));
    ::unsetenv("CHARPOLY_CACHE_DIR");
    CHECK(PolyCache::from_settings(std::nullopt, false).dir() == fs::path(".charpoly-cache"));
    const PolyCache off;
    CHECK(!off.load("anything").has_value());
    CHECK_NOTHROW(off.store("anything", MultiPoly(pq_ring(1))));
}
