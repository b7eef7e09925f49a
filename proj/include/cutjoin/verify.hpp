#pragma once

#include <string>
#include <vector>

#include "cutjoin/io.hpp"

namespace cutjoin {

struct Check {
    std::string name;
    bool passed = false;
    std::string detail;  // both sides on mismatch, or the confirmed witness
};

struct Report {
    std::string suite;
    Json params;
    std::vector<Check> checks;
    Json data;  // suite-specific tables (eigenvalues, witnesses)
    bool passed = true;

    void add(const std::string& name, bool ok, const std::string& detail = "");
    Json to_json() const;
};

// Suites: cutjoin | ladder | jm | virasoro | w0constraint | jack |
// heisenberg | hurwitz | hierarchy.  Unknown keys in params are rejected;
// missing ones take the documented defaults.  Throws on unknown suite.
Report run_suite(const std::string& suite, const Json& params);

std::vector<std::string> suite_names();

}  // namespace cutjoin
