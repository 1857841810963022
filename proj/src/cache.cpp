#include "charpoly/cache.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <system_error>

#include <unistd.h>

namespace charpoly {

PolyCache::PolyCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

PolyCache PolyCache::from_settings(const std::optional<std::string>& dir_flag, bool disabled) {
    if (disabled) return PolyCache();
    if (dir_flag) return PolyCache(*dir_flag);
    if (const char* env = std::getenv("CHARPOLY_CACHE_DIR"); env && *env) return PolyCache(env);
    return PolyCache(".charpoly-cache");
}

std::filesystem::path PolyCache::path_for(const std::string& key) const {
    if (!dir_) throw std::logic_error("cache is disabled");
    for (char ch : key) {
        if (!(std::isalnum(static_cast<unsigned char>(ch)) || ch == '-' || ch == '_')) {
            throw std::invalid_argument("cache key may only use [A-Za-z0-9_-]: " + key);
        }
    }
    return *dir_ / (key + ".json");
}

std::optional<MultiPoly> PolyCache::load(const std::string& key) const {
    if (!dir_) return std::nullopt;
    std::ifstream in(path_for(key));
    if (!in) return std::nullopt;
    std::ostringstream text;
    text << in.rdbuf();
    try {
        return MultiPoly::deserialize(text.str());
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

void PolyCache::store(const std::string& key, const MultiPoly& value) const {
    if (!dir_) return;
    std::error_code ec;
    std::filesystem::create_directories(*dir_, ec);
    if (ec) throw std::runtime_error("cannot create cache directory " + dir_->string() + ": " + ec.message());
    const auto target = path_for(key);
    auto tmp = target;
    tmp += ".tmp" + std::to_string(::getpid());
    {
        std::ofstream out(tmp, std::ios::trunc);
        out << value.serialize() << '\n';
        if (!out) throw std::runtime_error("cannot write cache entry " + tmp.string());
    }
    std::filesystem::rename(tmp, target, ec);
    if (ec) {
        std::filesystem::remove(tmp, ec);
        throw std::runtime_error("cannot install cache entry " + target.string());
    }
}

MultiPoly PolyCache::get_or_compute(const std::string& key, const std::function<MultiPoly()>& compute) const {
    if (auto hit = load(key)) return *hit;
    MultiPoly value = compute();
    store(key, value);
    return value;
}

}  // namespace charpoly
