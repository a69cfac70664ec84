#pragma once

#include <cstdio>
#include <fstream>
#include <iostream>

#include "numutil.hpp"

namespace parton {

enum class CheckStatus { pass, fail, exploratory };

struct CheckResult {
    std::string suite;
    std::string name;
    std::string params;
    double residual = 0.0;
    double tolerance = 0.0;
    CheckStatus status = CheckStatus::pass;
};

inline CheckResult judge(std::string suite, std::string name, std::string params, double residual,
                         double tolerance) {
    CheckResult r;
    r.suite = std::move(suite);
    r.name = std::move(name);
    r.params = std::move(params);
    r.residual = residual;
    r.tolerance = tolerance;
    r.status = (residual <= tolerance) ? CheckStatus::pass : CheckStatus::fail;
    return r;
}

inline CheckResult exploratory(std::string suite, std::string name, std::string params,
                               double observable) {
    CheckResult r;
    r.suite = std::move(suite);
    r.name = std::move(name);
    r.params = std::move(params);
    r.residual = observable;
    r.tolerance = 0.0;
    r.status = CheckStatus::exploratory;
    return r;
}

inline const char* status_text(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        case CheckStatus::exploratory: return "exploratory";
    }
    return "?";
}

inline std::string format_sci(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12e", v);
    return buf;
}

// stable row order: by (suite, name, params)
inline void sort_results(std::vector<CheckResult>& rows) {
    std::sort(rows.begin(), rows.end(), [](const CheckResult& a, const CheckResult& b) {
        if (a.suite != b.suite) return a.suite < b.suite;
        if (a.name != b.name) return a.name < b.name;
        return a.params < b.params;
    });
}

inline std::string results_to_csv(std::vector<CheckResult> rows) {
    sort_results(rows);
    std::string out = "suite,check,params,residual,tolerance,status\n";
    for (const auto& r : rows) {
        out += r.suite + "," + r.name + ",\"" + r.params + "\"," + format_sci(r.residual) + "," +
               format_sci(r.tolerance) + "," + status_text(r.status) + "\n";
    }
    return out;
}

inline std::string json_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    return out;
}

inline std::string results_to_json(std::vector<CheckResult> rows) {
    sort_results(rows);
    std::string out = "[\n";
    for (size_t i = 0; i < rows.size(); ++i) {
        const auto& r = rows[i];
        out += "  {\"suite\":\"" + json_escape(r.suite) + "\",\"check\":\"" + json_escape(r.name) +
               "\",\"params\":\"" + json_escape(r.params) + "\",\"residual\":" +
               format_sci(r.residual) + ",\"tolerance\":" + format_sci(r.tolerance) +
               ",\"status\":\"" + status_text(r.status) + "\"}";
        if (i + 1 < rows.size()) out += ",";
        out += "\n";
    }
    out += "]\n";
    return out;
}

inline bool any_failure(const std::vector<CheckResult>& rows) {
    return std::any_of(rows.begin(), rows.end(),
                       [](const CheckResult& r) { return r.status == CheckStatus::fail; });
}

}  // namespace parton
