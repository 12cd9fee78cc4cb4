#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ocl/graph.hpp"
#include "ocl/oracle.hpp"

namespace ocl {

/// One experiment: run each named algorithm on each instance, optionally
/// materializing the oracle quantities and the bounds they feed.
///
/// Algorithm tokens: "ff", "ffp", "combine:<token>,<token>,...", and
/// "scripts" (the adversarial scripted combination; edgeless instances only).
struct ExperimentConfig {
    std::vector<std::pair<std::string, OnlineInstance>> instances; // id + instance
    std::vector<std::string> algorithms;
    bool compute_chi = false;
    bool compute_eta = false;
    OracleLimits limits;
};

struct ReportRow {
    std::string instance_id;
    int n = 0;
    std::string algorithm;
    std::optional<int> distinct_colors;
    std::optional<int> chi;
    std::optional<int> eta;
    std::optional<int> bound_theorem2; // eta + chi, prediction-following runs
    std::optional<int> bound_theorem3; // t * min over sub-simulations, combined runs
    bool bound_satisfied = true;
    std::string error; // per-row failure; the run continues
};

/// Runs the experiment; rows are ordered by (instance id, algorithm).
/// Raises ValidationError on an empty configuration.
std::vector<ReportRow> run_experiment(const ExperimentConfig& config);

/// Fixed header:
/// instance,n,algorithm,distinct_colors,chi,eta,bound_theorem2,bound_theorem3,
/// ratio,ratio_theorem4,bound_satisfied,error
/// ratio = distinct_colors/chi and ratio_theorem4 = 1 + eta/chi, both to four
/// decimal places, blank when the inputs are unavailable.
std::string write_report_csv(const std::vector<ReportRow>& rows);

/// 0 all bounds hold and no row errors; 2 some bound violated; 3 row errors.
int report_exit_code(const std::vector<ReportRow>& rows);

} // namespace ocl
