#include "charpoly/report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace charpoly {

std::string status_name(Status s) {
    switch (s) {
        case Status::Pass: return "pass";
        case Status::Fail: return "fail";
        case Status::OpenPass: return "open-conjecture-pass";
        case Status::OpenMismatch: return "open-conjecture-mismatch";
    }
    throw std::logic_error("unknown status");
}

CheckResult compare_check(std::string name, nlohmann::ordered_json params, const MultiPoly& difference,
                          bool open_conjecture) {
    CheckResult r;
    r.name = std::move(name);
    r.params = std::move(params);
    if (difference.is_zero()) {
        r.status = open_conjecture ? Status::OpenPass : Status::Pass;
    } else {
        r.status = open_conjecture ? Status::OpenMismatch : Status::Fail;
        r.witness = difference;
    }
    return r;
}

Status Report::overall() const {
    auto has = [&](Status s) {
        return std::any_of(checks.begin(), checks.end(), [s](const CheckResult& c) { return c.status == s; });
    };
    if (has(Status::Fail)) return Status::Fail;
    if (has(Status::OpenMismatch)) return Status::OpenMismatch;
    if (has(Status::OpenPass)) return Status::OpenPass;
    return Status::Pass;
}

int Report::exit_code() const {
    switch (overall()) {
        case Status::Fail: return 1;
        case Status::OpenMismatch: return 2;
        default: return 0;
    }
}

nlohmann::ordered_json Report::to_json(bool timings) const {
    nlohmann::ordered_json j;
    j["schema_version"] = kReportSchemaVersion;
    j["command"] = command;
    j["status"] = status_name(overall());
    auto& arr = j["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : checks) {
        nlohmann::ordered_json e;
        e["name"] = c.name;
        e["params"] = c.params;
        e["status"] = status_name(c.status);
        e["witness"] = c.witness ? c.witness->to_json() : nlohmann::ordered_json(nullptr);
        if (c.witness) e["witness_text"] = c.witness->to_string();
        if (!c.detail.empty()) e["detail"] = c.detail;
        if (timings) e["wall_seconds"] = c.wall_seconds;
        arr.push_back(std::move(e));
    }
    return j;
}

std::string Report::to_text(bool timings) const {
    std::ostringstream os;
    for (const auto& c : checks) {
        os << status_name(c.status) << ' ' << c.name;
        for (const auto& [key, value] : c.params.items()) {
            os << ' ' << key << '=' << (value.is_string() ? value.get<std::string>() : value.dump());
        }
        if (timings) {
            char buf[32];
            std::snprintf(buf, sizeof buf, " (%.3fs)", c.wall_seconds);
            os << buf;
        }
        os << '\n';
        if (!c.detail.empty()) os << "  " << c.detail << '\n';
        if (c.witness) os << "  witness: " << c.witness->to_string() << '\n';
    }
    os << "overall: " << status_name(overall()) << '\n';
    return os.str();
}

}  // namespace charpoly
