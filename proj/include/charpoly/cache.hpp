#pragma once

// On-disk cache of polynomials in the canonical serialization, one file per
// key. Writes go to a temporary file that is then renamed into place.

#include <filesystem>
#include <functional>
#include <optional>
#include <string>

#include "charpoly/polyring.hpp"

namespace charpoly {

class PolyCache {
public:
    /// Disabled cache: every lookup misses and nothing is written.
    PolyCache() = default;
    explicit PolyCache(std::filesystem::path dir);

    /// Flag value if given, else $CHARPOLY_CACHE_DIR, else ".charpoly-cache".
    static PolyCache from_settings(const std::optional<std::string>& dir_flag, bool disabled);

    bool enabled() const noexcept { return dir_.has_value(); }
    const std::optional<std::filesystem::path>& dir() const noexcept { return dir_; }
    std::filesystem::path path_for(const std::string& key) const;

    /// Missing, unreadable or malformed entries all read as a miss.
    std::optional<MultiPoly> load(const std::string& key) const;
    /// Throws std::runtime_error if the entry cannot be written.
    void store(const std::string& key, const MultiPoly& value) const;
    MultiPoly get_or_compute(const std::string& key, const std::function<MultiPoly()>& compute) const;

private:
    std::optional<std::filesystem::path> dir_;
};

}  // namespace charpoly
