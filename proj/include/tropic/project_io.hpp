#pragma once

// JSON serialization of projects and schedule reports.
//
// Project schema:
//   {
//     "activities": ["a", "b", ...],
//     "start_finish": [{"from": "a", "to": "b", "lag": 2.0}, ...],
//     "start_start":  [{"from": "a", "to": "b", "lag": -1.0}, ...]   (optional)
//   }
// "from" is the activity whose initiation the lag is measured from, "to" the
// activity it constrains. Pairs not listed have no constraint (lag -inf, never
// serialized); duplicate pairs merge by taking the larger lag. Lags must be
// finite; integer lags keep all solver arithmetic exact.

#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "tropic/scheduling.hpp"

namespace tropic {

class parse_error : public std::runtime_error {
  public:
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {

inline std::size_t label_index(const std::vector<std::string>& labels,
                               const std::string& name,
                               const std::string& where) {
    for (std::size_t i = 0; i < labels.size(); ++i)
        if (labels[i] == name) return i;
    throw parse_error(where + ": unknown activity '" + name + "'");
}

inline void fill_lags(matrix<max_plus>& m, const nlohmann::json& entries,
                      const std::vector<std::string>& labels,
                      const std::string& key) {
    if (!entries.is_array())
        throw parse_error(key + ": expected an array of {from, to, lag}");
    std::size_t k = 0;
    for (const auto& e : entries) {
        const std::string where = key + "[" + std::to_string(k++) + "]";
        if (!e.is_object() || !e.contains("from") || !e.contains("to") ||
            !e.contains("lag"))
            throw parse_error(where + ": expected {from, to, lag}");
        if (!e["from"].is_string() || !e["to"].is_string())
            throw parse_error(where + ": from/to must be activity labels");
        if (!e["lag"].is_number())
            throw parse_error(where + ": lag must be a finite number");
        const double lag = e["lag"].get<double>();
        if (!std::isfinite(lag))
            throw parse_error(where + ": lag must be a finite number");
        const std::size_t j = label_index(labels, e["from"], where);
        const std::size_t i = label_index(labels, e["to"], where);
        // duplicate pairs merge by ⊕
        m.set(i, j, std::max(m.raw(i, j), lag));
    }
}

}  // namespace detail

inline project project_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw parse_error("project: expected a JSON object");
    if (!j.contains("activities") || !j["activities"].is_array() ||
        j["activities"].empty())
        throw parse_error("project: 'activities' must be a non-empty array");
    std::vector<std::string> labels;
    std::set<std::string> seen;
    for (const auto& a : j["activities"]) {
        if (!a.is_string())
            throw parse_error("activities: labels must be strings");
        const std::string name = a.get<std::string>();
        if (!seen.insert(name).second)
            throw parse_error("activities: duplicate label '" + name + "'");
        labels.push_back(name);
    }
    const std::size_t n = labels.size();
    if (!j.contains("start_finish"))
        throw parse_error("project: 'start_finish' is required");
    matrix<max_plus> c(n, n);
    detail::fill_lags(c, j["start_finish"], labels, "start_finish");
    std::optional<matrix<max_plus>> d;
    if (j.contains("start_start")) {
        matrix<max_plus> dd(n, n);
        detail::fill_lags(dd, j["start_start"], labels, "start_start");
        d = std::move(dd);
    }
    return project{std::move(labels), std::move(c), std::move(d)};
}

inline nlohmann::json project_to_json(const project& p) {
    nlohmann::json j;
    j["activities"] = p.activities;
    auto lag_array = [&](const matrix<max_plus>& m) {
        nlohmann::json arr = nlohmann::json::array();
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t jj = 0; jj < m.cols(); ++jj) {
                const double v = m.raw(i, jj);
                if (v == -infty) continue;  // absence encodes the zero lag
                arr.push_back({{"from", p.activities[jj]},
                               {"to", p.activities[i]},
                               {"lag", v}});
            }
        return arr;
    };
    j["start_finish"] = lag_array(p.start_finish);
    if (p.start_start) j["start_start"] = lag_array(*p.start_start);
    return j;
}

inline project load_project_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error(path + ": cannot open file");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(path + ": " + e.what());
    }
    try {
        return project_from_json(j);
    } catch (const parse_error& e) {
        throw parse_error(path + ": " + e.what());
    }
}

/// Everything a solve run reports: the anchored schedule plus how it was
/// obtained. Round-trips losslessly through JSON.
struct schedule_report {
    std::vector<std::string> activities;
    std::vector<double> start;
    std::vector<double> finish;
    double span = 0.0;
    double alpha = 0.0;
    std::string anchor;  // "alpha" | "due" | "earliest"
    double anchor_value = 0.0;
    std::size_t violations = 0;

    friend bool operator==(const schedule_report&, const schedule_report&) = default;
};

inline schedule_report make_report(const project& p, const schedule& s,
                                   const anchor_policy& pol,
                                   const validation_report& v) {
    schedule_report r;
    r.activities = p.activities;
    for (std::size_t i = 0; i < p.activities.size(); ++i) {
        r.start.push_back(s.start.vraw(i));
        r.finish.push_back(s.finish.vraw(i));
    }
    r.span = s.span.raw();
    r.alpha = s.alpha;
    switch (pol.k) {
        case anchor_policy::kind::fixed: r.anchor = "alpha"; break;
        case anchor_policy::kind::due: r.anchor = "due"; break;
        case anchor_policy::kind::earliest: r.anchor = "earliest"; break;
    }
    r.anchor_value = pol.v;
    r.violations = v.violations.size();
    return r;
}

inline nlohmann::json report_to_json(const schedule_report& r) {
    nlohmann::json j;
    j["anchor"] = {{"policy", r.anchor},
                   {"value", r.anchor_value},
                   {"alpha", r.alpha}};
    j["span"] = r.span;
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < r.activities.size(); ++i)
        rows.push_back({{"activity", r.activities[i]},
                        {"start", r.start[i]},
                        {"finish", r.finish[i]}});
    j["schedule"] = rows;
    j["validation"] = {{"violations", r.violations}};
    return j;
}

inline schedule_report report_from_json(const nlohmann::json& j) {
    schedule_report r;
    if (!j.is_object() || !j.contains("schedule") || !j["schedule"].is_array() ||
        j["schedule"].empty())
        throw parse_error("schedule report: 'schedule' must be a non-empty array");
    for (const auto& row : j["schedule"]) {
        if (!row.contains("activity") || !row.contains("start") ||
            !row.contains("finish") || !row["start"].is_number() ||
            !row["finish"].is_number())
            throw parse_error("schedule report: rows need activity/start/finish");
        r.activities.push_back(row["activity"].get<std::string>());
        r.start.push_back(row["start"].get<double>());
        r.finish.push_back(row["finish"].get<double>());
    }
    if (!j.contains("span") || !j["span"].is_number())
        throw parse_error("schedule report: 'span' is required");
    r.span = j["span"].get<double>();
    if (j.contains("anchor") && j["anchor"].is_object()) {
        const auto& a = j["anchor"];
        if (a.contains("policy")) r.anchor = a["policy"].get<std::string>();
        if (a.contains("value")) r.anchor_value = a["value"].get<double>();
        if (a.contains("alpha")) r.alpha = a["alpha"].get<double>();
    }
    if (j.contains("validation") && j["validation"].contains("violations"))
        r.violations = j["validation"]["violations"].get<std::size_t>();
    return r;
}

inline schedule_report load_report_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error(path + ": cannot open file");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(path + ": " + e.what());
    }
    try {
        return report_from_json(j);
    } catch (const parse_error& e) {
        throw parse_error(path + ": " + e.what());
    }
}

/// Reconstruct the schedule a report describes, reordered to the project's
/// activity order. The label sets must coincide.
inline schedule report_to_schedule(const schedule_report& r, const project& p) {
    const std::size_t n = p.activities.size();
    if (r.activities.size() != n)
        throw std::invalid_argument("schedule report: activity set differs from project");
    std::map<std::string, std::size_t> pos;
    for (std::size_t i = 0; i < r.activities.size(); ++i) pos[r.activities[i]] = i;
    matrix<max_plus> x(n, 1), y(n, 1);
    for (std::size_t i = 0; i < n; ++i) {
        auto it = pos.find(p.activities[i]);
        if (it == pos.end())
            throw std::invalid_argument(
                "schedule report: activity set differs from project");
        x.set(i, 0, r.start[it->second]);
        y.set(i, 0, r.finish[it->second]);
    }
    return schedule{std::move(x), std::move(y), value<max_plus>(r.span), r.alpha};
}

}  // namespace tropic
