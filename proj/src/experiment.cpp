#include "egonet/experiment.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <limits>
#include <memory>
#include <mutex>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "egonet/estimators.hpp"
#include "egonet/evaluation.hpp"
#include "egonet/io.hpp"
#include "egonet/tuning.hpp"

namespace egonet {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::string model_name(const ExperimentConfig& config) {
    if (!config.model) return "edge_list";
    switch (config.model->kind) {
        case ModelKind::sbm: return "sbm";
        case ModelKind::dcbm: return "dcbm";
        case ModelKind::rdpg: return "rdpg";
        case ModelKind::distance: return "distance";
    }
    return "unknown";
}

std::string mechanism_name(Mechanism m) {
    switch (m) {
        case Mechanism::mcar: return "mcar";
        case Mechanism::mnar_positive: return "mnar_positive";
        case Mechanism::mnar_negative: return "mnar_negative";
    }
    return "unknown";
}

ImputationResult run_estimator(Estimator e, const EgoView& view, int k,
                               bool truncate) {
    switch (e) {
        case Estimator::le: return le_impute(view, k, truncate);
        case Estimator::se: return se_impute(view, k, truncate);
        case Estimator::le_plus: return le_plus_impute(view, k, truncate);
    }
    throw std::invalid_argument("run_estimator: unknown estimator");
}

// Stable formatting so equal-seed runs emit byte-identical rows.
std::string format_double(double x) {
    if (std::isnan(x)) return "nan";
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

struct Replication {
    EgoView view;
    Matrix p22_true;  // empty when unknown
    Matrix a22_true;
    std::uint64_t seed = 0;
};

Replication build_replication(const ExperimentConfig& config,
                              const AdjacencyMatrix* shared_adjacency, int rep) {
    const std::uint64_t rep_seed = derive_seed(config.master_seed, rep);
    Replication out;
    out.seed = rep_seed;

    std::optional<AdjacencyMatrix> generated;
    std::optional<ProbabilityMatrix> p_scaled;
    const AdjacencyMatrix* adjacency = shared_adjacency;
    if (config.model) {
        ModelSpec spec = *config.model;
        spec.seed = derive_seed(rep_seed, 0);
        p_scaled = scale_to_degree(generate(spec), spec.target_degree).matrix;
        generated = sample_adjacency(*p_scaled, derive_seed(rep_seed, 1));
        adjacency = &*generated;
    }

    SamplingPlan plan = config.sampling;
    plan.seed = derive_seed(rep_seed, 2);
    if (plan.mechanism != Mechanism::mcar &&
        plan.deltas == std::array<double, 3>{1.0, 1.0, 1.0}) {
        plan.deltas = default_deltas(plan.mechanism);
    }
    const std::vector<int> observed = sample_observed(*adjacency, plan);
    out.view = extract_ego_view(*adjacency, observed);

    const auto hidden = hidden_indices(out.view.n_total, observed);
    const int h = static_cast<int>(hidden.size());
    out.a22_true.resize(h, h);
    for (int i = 0; i < h; ++i) {
        for (int j = 0; j < h; ++j) {
            out.a22_true(i, j) = adjacency->values()(hidden[i], hidden[j]);
        }
    }
    if (p_scaled) {
        out.p22_true.resize(h, h);
        for (int i = 0; i < h; ++i) {
            for (int j = 0; j < h; ++j) {
                out.p22_true(i, j) = p_scaled->values()(hidden[i], hidden[j]);
            }
        }
    }
    return out;
}

}  // namespace

std::string estimator_name(Estimator e) {
    switch (e) {
        case Estimator::le: return "le";
        case Estimator::se: return "se";
        case Estimator::le_plus: return "le_plus";
    }
    return "unknown";
}

std::vector<ExperimentRecord> run_experiment(const ExperimentConfig& config) {
    if (config.replications < 1) {
        throw std::invalid_argument("run_experiment: replications must be >= 1");
    }
    if (config.estimators.empty()) {
        throw std::invalid_argument("run_experiment: no estimator selected");
    }

    std::optional<AdjacencyMatrix> loaded;
    if (!config.model) {
        if (config.edge_list_path.empty()) {
            throw std::invalid_argument("run_experiment: neither model nor edge list given");
        }
        loaded = load_edge_list(config.edge_list_path, config.one_based,
                                config.n_override.value_or(0));
    }

    const std::string model = model_name(config);
    const std::string mechanism = mechanism_name(config.sampling.mechanism);
    const double degree = config.model ? config.model->target_degree : kNaN;
    const int per_rep = static_cast<int>(config.estimators.size());

    std::vector<ExperimentRecord> records(
        static_cast<std::size_t>(config.replications) * per_rep);

    auto worker_body = [&](int rep) {
        const Replication r =
            build_replication(config, loaded ? &*loaded : nullptr, rep);
        int k = config.fixed_rank;
        if (config.use_cv) {
            std::vector<int> candidates;
            const int n = r.view.n_observed();
            const int holdout = static_cast<int>(std::llround(
                config.cv.holdout_fraction * n));
            for (int c = 1; c <= std::min(config.cv.max_rank, n - holdout); ++c) {
                candidates.push_back(c);
            }
            k = select_rank(r.view, candidates, config.cv.holdout_fraction,
                            config.cv.repeats, derive_seed(r.seed, 3))
                    .chosen_rank;
        }
        k = std::min(k, r.view.n_observed());

        for (int e = 0; e < per_rep; ++e) {
            const Estimator est = config.estimators[e];
            auto [imputed, ms] = time_fit([&] {
                return run_estimator(est, r.view, k, config.truncate);
            });
            ExperimentRecord& rec = records[rep * per_rep + e];
            rec.model = model;
            rec.mechanism = mechanism;
            rec.rho = config.sampling.rho;
            rec.degree = degree;
            rec.estimator = estimator_name(est);
            rec.replication = rep;
            rec.seed = r.seed;
            rec.wall_time_ms = ms;
            rec.mse = r.p22_true.size() > 0
                          ? mse_block(imputed.p22_hat, r.p22_true)
                          : kNaN;
            try {
                rec.auc = auc_link_prediction(imputed.p22_hat, r.a22_true).auc;
            } catch (const std::invalid_argument&) {
                rec.auc = kNaN;  // degenerate hidden block
            }
        }
    };

    int n_threads = config.threads > 0
                        ? config.threads
                        : static_cast<int>(std::thread::hardware_concurrency());
    n_threads = std::max(1, std::min(n_threads, config.replications));
    if (n_threads == 1) {
        for (int rep = 0; rep < config.replications; ++rep) worker_body(rep);
    } else {
        std::atomic<int> next{0};
        std::exception_ptr error;
        std::mutex error_mutex;
        std::vector<std::thread> pool;
        for (int t = 0; t < n_threads; ++t) {
            pool.emplace_back([&] {
                for (int rep = next.fetch_add(1); rep < config.replications;
                     rep = next.fetch_add(1)) {
                    try {
                        worker_body(rep);
                    } catch (...) {
                        std::lock_guard<std::mutex> lock(error_mutex);
                        if (!error) error = std::current_exception();
                    }
                }
            });
        }
        for (auto& t : pool) t.join();
        if (error) std::rethrow_exception(error);
    }
    return records;
}

void write_records_csv(const std::vector<ExperimentRecord>& records,
                       std::ostream& out) {
    out << "model,mechanism,rho,degree,estimator,replication,seed,mse,auc,"
           "wall_time_ms\n";
    for (const auto& r : records) {
        out << r.model << ',' << r.mechanism << ',' << format_double(r.rho) << ','
            << format_double(r.degree) << ',' << r.estimator << ','
            << r.replication << ',' << r.seed << ',' << format_double(r.mse)
            << ',' << format_double(r.auc) << ',';
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.3f", r.wall_time_ms);
        out << buf << '\n';
    }
}

std::vector<SummaryCell> summarize(const std::vector<ExperimentRecord>& records) {
    std::vector<SummaryCell> cells;
    auto find_cell = [&](const std::string& name) -> SummaryCell& {
        for (auto& c : cells) {
            if (c.estimator == name) return c;
        }
        cells.push_back({name});
        return cells.back();
    };

    struct Acc {
        std::vector<double> mse, auc, ms;
    };
    std::vector<std::pair<std::string, Acc>> accs;
    for (const auto& r : records) {
        Acc* acc = nullptr;
        for (auto& [name, a] : accs) {
            if (name == r.estimator) acc = &a;
        }
        if (!acc) {
            accs.emplace_back(r.estimator, Acc{});
            acc = &accs.back().second;
        }
        if (!std::isnan(r.mse)) acc->mse.push_back(r.mse);
        if (!std::isnan(r.auc)) acc->auc.push_back(r.auc);
        acc->ms.push_back(r.wall_time_ms);
    }

    auto mean_se = [](const std::vector<double>& xs) -> std::pair<double, double> {
        if (xs.empty()) return {kNaN, kNaN};
        double mean = 0;
        for (double x : xs) mean += x;
        mean /= static_cast<double>(xs.size());
        if (xs.size() == 1) return {mean, 0.0};
        double var = 0;
        for (double x : xs) var += (x - mean) * (x - mean);
        var /= static_cast<double>(xs.size() - 1);
        return {mean, std::sqrt(var / static_cast<double>(xs.size()))};
    };

    for (const auto& [name, acc] : accs) {
        SummaryCell& c = find_cell(name);
        c.replications = static_cast<int>(acc.ms.size());
        std::tie(c.mean_mse, c.se_mse) = mean_se(acc.mse);
        std::tie(c.mean_auc, c.se_auc) = mean_se(acc.auc);
        c.mean_ms = mean_se(acc.ms).first;
    }
    return cells;
}

void write_summary(const std::vector<SummaryCell>& cells, std::ostream& out) {
    out << "estimator,replications,mean_mse,se_mse,mean_auc,se_auc,mean_ms\n";
    for (const auto& c : cells) {
        out << c.estimator << ',' << c.replications << ','
            << format_double(c.mean_mse) << ',' << format_double(c.se_mse) << ','
            << format_double(c.mean_auc) << ',' << format_double(c.se_auc) << ','
            << format_double(c.mean_ms) << '\n';
    }
}

}  // namespace egonet
