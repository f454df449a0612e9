#pragma once

#include "json_io.hpp"

namespace qpair {

struct CheckItem {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct CheckReport {
    std::vector<CheckItem> items;
    long torsion_length = 0;
    bool all_pass() const {
        for (const auto& i : items)
            if (!i.pass) return false;
        return true;
    }
};

/// Full invariant suite on one pair: convention checks, signature
/// identities, oracle cross-checks, duality, quotient-choice independence,
/// filtration certificates.
CheckReport check_pair(const Pair& p);

/// Re-classifies the report's embedded input and compares every stored
/// field against the recomputation.
CheckReport verify_report(const json& report);

json check_report_to_json(const CheckReport& r);

struct CriterionResult {
    int index = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0;
};

/// The acceptance suite; every criterion runs at its stated tolerance.
std::vector<CriterionResult> run_acceptance_criteria();

json criteria_to_json(const std::vector<CriterionResult>& rs);

}  // namespace qpair
