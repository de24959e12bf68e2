#pragma once

/**
 * @file report.hpp
 * @brief Machine-readable (JSON) and human-readable renderings of a
 *        VerificationReport.
 *
 * JSON schema (keys sorted, so output is byte-stable for a fixed report):
 *
 *   {
 *     "tool": "kmo", "version": "1.0.0",
 *     "summary": {"pass": N, "fail": N, "skipped": N, "input_errors": N},
 *     "results": [{"identity": "catalan_lr", "family": "MO", "k1_specialized": false,
 *                  "params": {"k": 1, "n": 2, "r": 1}, "status": "PASS",
 *                  "residual": ["0", ... 8 exact fraction strings], "note": ""}],
 *     "input_errors": [{"identity", "family", "k1_specialized", "params", "message"}],
 *     "discrepancies": [{"id", "description"}],
 *     "notes": ["..."]
 *   }
 */

#include "kmo/grid.hpp"

#include <json.hpp>

#include <iomanip>
#include <map>
#include <sstream>
#include <string>
#include <tuple>

namespace kmo {

inline nlohmann::json identity_json(const IdentityId& id, const Params& params)
{
    nlohmann::json j;
    j["identity"] = std::string(to_string(id.name));
    j["family"] = std::string(to_string(id.family));
    j["k1_specialized"] = id.k1_specialized;
    j["params"] = nlohmann::json::object();
    for (const auto& [key, value] : params) {
        j["params"][key] = value;
    }
    return j;
}

inline nlohmann::json octonion_json(const RatOctonion& a)
{
    auto arr = nlohmann::json::array();
    for (const auto& x : a.coords()) {
        arr.push_back(x.to_string());
    }
    return arr;
}

inline nlohmann::json to_json(const VerificationReport& report)
{
    nlohmann::json j;
    j["tool"] = report.tool;
    j["version"] = report.version;
    j["summary"] = {{"pass", report.counts.pass},
                    {"fail", report.counts.fail},
                    {"skipped", report.counts.skipped},
                    {"input_errors", report.input_errors.size()}};
    j["results"] = nlohmann::json::array();
    for (const auto& r : report.results) {
        auto entry = identity_json(r.identity, r.params);
        entry["status"] = std::string(to_string(r.status));
        entry["residual"] = octonion_json(r.residual);
        entry["note"] = r.note;
        j["results"].push_back(std::move(entry));
    }
    j["input_errors"] = nlohmann::json::array();
    for (const auto& e : report.input_errors) {
        auto entry = identity_json(e.identity, e.params);
        entry["message"] = e.message;
        j["input_errors"].push_back(std::move(entry));
    }
    j["discrepancies"] = nlohmann::json::array();
    for (const auto& d : report.discrepancies) {
        j["discrepancies"].push_back({{"id", d.id}, {"description", d.description}});
    }
    j["notes"] = report.notes;
    return j;
}

inline std::string to_json_string(const VerificationReport& report)
{
    return to_json(report).dump(2) + "\n";
}

/// One row per (identity, family, statement) with per-status tallies, then
/// every FAIL and input error in full.
inline std::string summary_table(const VerificationReport& report)
{
    using Key = std::tuple<IdentityName, OctKind, bool>;
    std::map<Key, StatusCounts> rows;
    for (const auto& r : report.results) {
        auto& c = rows[{r.identity.name, r.identity.family, r.identity.k1_specialized}];
        switch (r.status) {
        case Status::Pass: ++c.pass; break;
        case Status::Fail: ++c.fail; break;
        case Status::Skipped: ++c.skipped; break;
        }
    }
    std::ostringstream os;
    os << std::left << std::setw(18) << "identity" << std::setw(5) << "fam" << std::setw(9) << "form" << std::right
       << std::setw(8) << "pass" << std::setw(8) << "fail" << std::setw(9) << "skipped" << '\n';
    for (const auto& [key, c] : rows) {
        const auto& [name, family, k1] = key;
        os << std::left << std::setw(18) << to_string(name) << std::setw(5) << to_string(family) << std::setw(9)
           << (k1 ? "k=1" : "general") << std::right << std::setw(8) << c.pass << std::setw(8) << c.fail
           << std::setw(9) << c.skipped << '\n';
    }
    os << "total: " << report.counts.pass << " pass, " << report.counts.fail << " fail, " << report.counts.skipped
       << " skipped, " << report.input_errors.size() << " input errors\n";
    for (const auto& r : report.results) {
        if (r.status != Status::Fail) {
            continue;
        }
        os << "FAIL " << to_string(r.identity.name) << ' ' << to_string(r.identity.family)
           << (r.identity.k1_specialized ? " k=1" : "");
        for (const auto& [key, value] : r.params) {
            os << ' ' << key << '=' << value;
        }
        os << " residual=" << r.residual;
        if (!r.note.empty()) {
            os << " (" << r.note << ')';
        }
        os << '\n';
    }
    for (const auto& e : report.input_errors) {
        os << "INPUT-ERROR " << to_string(e.identity.name) << ' ' << to_string(e.identity.family) << ": " << e.message
           << '\n';
    }
    if (!report.discrepancies.empty()) {
        os << "discrepancies:\n";
        for (const auto& d : report.discrepancies) {
            os << "  - " << d.id << ": " << d.description << '\n';
        }
    }
    return os.str();
}

} // namespace kmo
