#pragma once

#include "hfold/chevverify.hpp"

#include <json.hpp>

#include <fstream>
#include <iostream>
#include <ostream>
#include <string>

namespace hfold {

inline nlohmann::json report_json(const SuiteReport& rep, double elapsed_seconds)
{
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : rep.checks) {
        nlohmann::json j{{"id", c.id}, {"anchor", c.anchor},
                         {"status", c.pass ? "pass" : "fail"}};
        if (!c.witness.empty())
            j["witness"] = c.witness;
        checks.push_back(std::move(j));
    }
    return nlohmann::json{{"suite", rep.suite},
                          {"checks", std::move(checks)},
                          {"passed", rep.checks.size() - rep.failures()},
                          {"failed", rep.failures()},
                          {"elapsed", elapsed_seconds}};
}

inline void print_suite_summary(std::ostream& os, const SuiteReport& rep)
{
    os << rep.suite << ": " << (rep.checks.size() - rep.failures()) << "/"
       << rep.checks.size() << " checks pass\n";
    long shown = 0;
    for (const auto& c : rep.checks)
        if (!c.pass && shown++ < 10)
            os << "  FAIL " << c.id << (c.witness.empty() ? "" : ": " + c.witness) << "\n";
    if (rep.failures() > shown)
        os << "  ... and " << (rep.failures() - shown) << " more failures\n";
}

/// Write text to a path, or stdout for "-" / empty.
inline int write_output(const std::string& path, const std::string& text)
{
    if (path.empty() || path == "-") {
        std::cout << text;
        return 0;
    }
    std::ofstream out(path);
    if (!out) {
        std::cerr << "cannot open " << path << "\n";
        return 3;
    }
    out << text;
    return out.good() ? 0 : 3;
}

} // namespace hfold
