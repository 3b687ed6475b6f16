#pragma once

#include <string>
#include <vector>

namespace exlie {

struct CheckResult {
    std::string id;       // stable identifier of the certified claim
    std::string claim;    // human-readable statement
    bool pass = false;
    std::string witness;  // short supporting data
};

struct SuiteResult {
    std::string name;
    std::vector<CheckResult> checks;
    bool pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

SuiteResult verify_octonion_axioms();   // 1
SuiteResult verify_g2_construction();   // 2
SuiteResult verify_orbit_calculus();    // 3
SuiteResult verify_character_match();   // 4
SuiteResult verify_cubic_rings();       // 5
SuiteResult verify_branching();         // 6
SuiteResult verify_kostant();           // 7
SuiteResult verify_packets();           // 8
SuiteResult verify_invariant_theory();  // 9
SuiteResult verify_lfactors();          // 10

std::vector<SuiteResult> verify_all();

}  // namespace exlie
