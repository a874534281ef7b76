#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "egonet/generators.hpp"
#include "egonet/sampling.hpp"

namespace egonet {

enum class Estimator { le, se, le_plus };

std::string estimator_name(Estimator e);

struct CvConfig {
    int max_rank = 8;
    double holdout_fraction = 0.1;
    int repeats = 5;
};

struct ExperimentConfig {
    std::optional<ModelSpec> model;  // synthetic when set
    std::string edge_list_path;      // real data otherwise
    bool one_based = false;
    std::optional<int> n_override;

    SamplingPlan sampling;
    std::vector<Estimator> estimators = {Estimator::le};
    int fixed_rank = 5;
    bool use_cv = false;
    CvConfig cv;
    bool truncate = true;
    int replications = 1;
    std::uint64_t master_seed = 0;
    std::string output_path;
    int threads = 0;  // 0 = hardware concurrency
};

struct ExperimentRecord {
    std::string model;
    std::string mechanism;
    double rho = 0;
    double degree = 0;
    std::string estimator;
    int replication = 0;
    std::uint64_t seed = 0;
    double mse = 0;      // NaN when the true P is unknown
    double auc = 0;      // NaN when degenerate
    double wall_time_ms = 0;
};

struct SummaryCell {
    std::string estimator;
    int replications = 0;
    double mean_mse = 0, se_mse = 0;
    double mean_auc = 0, se_auc = 0;
    double mean_ms = 0;
};

/// Replication loop: generate/load, sample, impute, score. Records are
/// ordered by (replication, estimator) regardless of thread count.
std::vector<ExperimentRecord> run_experiment(const ExperimentConfig& config);

void write_records_csv(const std::vector<ExperimentRecord>& records,
                       std::ostream& out);

std::vector<SummaryCell> summarize(const std::vector<ExperimentRecord>& records);

void write_summary(const std::vector<SummaryCell>& cells, std::ostream& out);

}  // namespace egonet
