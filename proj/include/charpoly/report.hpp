#pragma once

// Verification results and their text / JSON rendering.

#include <optional>
#include <string>
#include <vector>

#include "charpoly/polyring.hpp"
#include "json.hpp"

namespace charpoly {

inline constexpr int kReportSchemaVersion = 1;

enum class Status { Pass, Fail, OpenPass, OpenMismatch };

/// "pass", "fail", "open-conjecture-pass", "open-conjecture-mismatch"
std::string status_name(Status s);

struct CheckResult {
    std::string name;
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    Status status = Status::Pass;
    /// Nonzero difference behind a fail or mismatch.
    std::optional<MultiPoly> witness;
    std::string detail;
    double wall_seconds = 0;
};

/// Pass or Fail (or the open-conjecture pair) according to whether `difference` is zero.
CheckResult compare_check(std::string name, nlohmann::ordered_json params, const MultiPoly& difference,
                          bool open_conjecture = false);

struct Report {
    std::string command;
    std::vector<CheckResult> checks;

    /// Fail if any check failed, else OpenMismatch if any, else Pass.
    Status overall() const;
    /// 0 pass, 1 fail, 2 open-conjecture mismatch.
    int exit_code() const;
    /// Wall times appear only when requested so that output is reproducible.
    nlohmann::ordered_json to_json(bool timings) const;
    std::string to_text(bool timings) const;
};

}  // namespace charpoly
