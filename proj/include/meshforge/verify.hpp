#pragma once

#include <map>
#include <string>
#include <vector>

#include "meshforge/dg_auslander.hpp"

namespace meshforge {

struct SuiteConfig {
    std::string families = "ADE";  // subset of A, D, E
    int a_max = 12;                // A_1 .. A_a_max
    int d_max = 12;                // D_4 .. D_d_max
    int L_max = 24;                // truncation for quotients
    int W_max = 12;                // tensor word bound for the Koszul checks
    int window = 2;                // stabilization window
    int parallelism = 1;
    std::string out_dir;

    void check() const;  // bounds positive, ranges within the Dynkin families
};

SuiteConfig config_from_file(const std::string& path);

struct CheckResult {
    std::string check;     // e.g. "3.h0-dims/A4"
    bool pass = false;
    std::string expected;
    std::string actual;
    int L_used = 0;
};

struct SuiteReport {
    std::vector<CheckResult> checks;
    std::map<std::string, double> timings_ms;  // per criterion; excluded from comparisons

    bool all_pass() const;
    std::map<int, std::pair<int, int>> per_criterion() const;  // criterion -> (pass, total)
    std::string to_json(bool with_timings = true) const;
};

SuiteReport verify_suite(const SuiteConfig& cfg);

// The shipped gamma-perturbation specs (five each on the even A_3 and odd A_5
// dg Auslander presentations).
std::vector<std::vector<GammaPerturbation>> gamma_specs_even_a3(const DgPresentation& dg);
std::vector<std::vector<GammaPerturbation>> gamma_specs_odd_a5(const DgPresentation& dg);

}  // namespace meshforge
