// Acceptance gate: runs every verification suite with its runtime budget and
// prints one line per criterion.  Exits nonzero if anything fails.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>

#include "exlie/json_io.hpp"
#include "exlie/verify.hpp"

using namespace exlie;

namespace {

int failures = 0;

void criterion(int number, const std::string& name, double budget_seconds,
               const std::function<SuiteResult()>& fn) {
    auto t0 = std::chrono::steady_clock::now();
    SuiteResult s = fn();
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool pass = s.pass() && secs < budget_seconds;
    if (!pass) ++failures;
    std::printf("criterion %2d (%s): %s (%.2fs, budget %.0fs)\n", number, name.c_str(),
                pass ? "PASS" : "FAIL", secs, budget_seconds);
    if (!s.pass())
        for (const auto& c : s.checks)
            if (!c.pass) std::printf("    failed: %s -- %s\n", c.id.c_str(), c.claim.c_str());
}

}  // namespace

int main() {
    criterion(1, "octonion axioms", 1, verify_octonion_axioms);
    criterion(2, "g2 construction", 5, verify_g2_construction);
    criterion(3, "orbit calculus", 10, verify_orbit_calculus);
    criterion(4, "character match", 5, verify_character_match);
    criterion(5, "cubic rings", 5, verify_cubic_rings);
    criterion(6, "branching", 60, verify_branching);
    criterion(7, "kostant multiplicities", 30, verify_kostant);
    criterion(8, "discrete series packets", 5, verify_packets);
    criterion(9, "invariant-vector nonvanishing", 600, verify_invariant_theory);
    criterion(10, "l-factor identities", 2, verify_lfactors);

    // criterion 11: the full report passes and serializes deterministically
    {
        auto t0 = std::chrono::steady_clock::now();
        auto r1 = report_json(verify_all());
        auto r2 = report_json(verify_all());
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        bool pass = r1["pass"].get<bool>() && r1.dump() == r2.dump();
        if (!pass) ++failures;
        std::printf("criterion 11 (verify-all determinism): %s (%.2fs)\n",
                    pass ? "PASS" : "FAIL", secs);
    }

    if (failures) std::printf("%d criterion(s) FAILED\n", failures);
    else std::printf("all acceptance criteria PASS\n");
    return failures ? 1 : 0;
}
