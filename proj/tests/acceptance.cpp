// Acceptance suite: one pass/fail line per criterion, exit 0 only if all pass.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>
#include <vector>

#include "egonet/estimators.hpp"
#include "egonet/evaluation.hpp"
#include "egonet/experiment.hpp"
#include "egonet/generators.hpp"
#include "egonet/graph.hpp"
#include "egonet/sampling.hpp"

using namespace egonet;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

bool report(int index, const char* label, bool ok, const std::string& detail) {
    std::printf("%s  criterion %d (%s): %s\n", ok ? "PASS" : "FAIL", index,
                label, detail.c_str());
    std::fflush(stdout);
    return ok;
}

std::string fmt(const char* format, double a, double b = 0, double c = 0,
                double d = 0) {
    char buf[256];
    std::snprintf(buf, sizeof(buf), format, a, b, c, d);
    return buf;
}

EgoView noiseless_view(const Matrix& p, int n) {
    const auto b = partition(p, n);
    EgoView view;
    view.n_total = static_cast<int>(p.rows());
    view.observed.resize(n);
    for (int i = 0; i < n; ++i) view.observed[i] = i;
    view.a11 = b.m11;
    view.a12 = b.m12;
    return view;
}

Matrix random_low_rank_p(int n, int k, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> unif(0.05, 1.0);
    Matrix z(n, k);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < k; ++j) z(i, j) = unif(rng) / std::sqrt(double(k));
    }
    Matrix p = z * z.transpose();
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < j; ++i) p(j, i) = p(i, j);
    }
    return p;
}

ExperimentConfig table_config(ModelKind kind, Mechanism mechanism, double rho,
                              double degree, std::vector<Estimator> estimators) {
    ExperimentConfig config;
    ModelSpec spec;
    spec.kind = kind;
    spec.n_nodes = 500;
    spec.k = 5;
    spec.target_degree = degree;
    config.model = spec;
    config.sampling.mechanism = mechanism;
    config.sampling.rho = rho;
    if (mechanism != Mechanism::mcar) {
        config.sampling.deltas = default_deltas(mechanism);
    }
    config.estimators = std::move(estimators);
    config.fixed_rank = 5;
    config.replications = 100;
    config.master_seed = 20240501;
    return config;
}

double mean_mse(const std::vector<ExperimentRecord>& records,
                const std::string& estimator) {
    double acc = 0;
    int count = 0;
    for (const auto& r : records) {
        if (r.estimator != estimator) continue;
        acc += r.mse;
        ++count;
    }
    return acc / count;
}

// Criterion 1: noiseless low-rank exactness.
bool criterion_exactness() {
    const auto start = Clock::now();
    std::mt19937_64 rng(7);
    double worst = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const int k = 1 + static_cast<int>(rng() % 5);
        const int n_total = 2 * (5 + k + static_cast<int>(rng() % 43));  // <= 100
        const int n = n_total / 2;
        const Matrix p = random_low_rank_p(n_total, k, rng);
        const Matrix truth = partition(p, n).m22;
        const Matrix imputed = le_impute(noiseless_view(p, n), k, false).p22_hat;
        worst = std::max(worst, (imputed - truth).norm() / truth.norm());
    }
    const double elapsed = seconds_since(start);
    return report(1, "low-rank exactness",
                  worst < 1e-8 && elapsed < 5.0,
                  fmt("max rel error %.3g (< 1e-8), %.2f s (< 5 s)", worst,
                      elapsed));
}

// Criterion 2: SBM cell (rho=0.5, degree=20), LE mean MSE window.
bool criterion_sbm_mcar() {
    const auto start = Clock::now();
    const auto records = run_experiment(
        table_config(ModelKind::sbm, Mechanism::mcar, 0.5, 20, {Estimator::le}));
    const double mean = mean_mse(records, "le");
    const double elapsed = seconds_since(start);
    return report(2, "SBM rho=0.5 deg=20 MSE window",
                  mean >= 1.15e-3 && mean <= 1.55e-3 && elapsed < 300.0,
                  fmt("mean MSE %.4g (in [1.15e-3, 1.55e-3]), %.1f s (< 300 s)",
                      mean, elapsed));
}

// Criterion 3: product model cell with cross-validated rank.
bool criterion_rdpg_mcar() {
    const auto start = Clock::now();
    auto config =
        table_config(ModelKind::rdpg, Mechanism::mcar, 0.5, 20, {Estimator::le});
    config.use_cv = true;
    config.cv.max_rank = 5;  // candidates 1..latent dimension
    config.cv.holdout_fraction = 0.1;
    config.cv.repeats = 5;
    const auto records = run_experiment(config);
    const double mean = mean_mse(records, "le");
    const double elapsed = seconds_since(start);
    return report(3, "product model rho=0.5 deg=20 MSE window",
                  mean >= 0.50e-3 && mean <= 0.67e-3 && elapsed < 300.0,
                  fmt("mean MSE %.4g (in [0.50e-3, 0.67e-3]), %.1f s (< 300 s)",
                      mean, elapsed));
}

// Criterion 4: LE beats SE at rho=0.9 for degrees 20 and 50.
bool criterion_le_beats_se() {
    bool ok = true;
    std::string detail;
    for (const double degree : {20.0, 50.0}) {
        const auto records =
            run_experiment(table_config(ModelKind::sbm, Mechanism::mcar, 0.9,
                                        degree, {Estimator::le, Estimator::se}));
        const double le = mean_mse(records, "le");
        const double se = mean_mse(records, "se");
        ok = ok && le < se;
        detail += fmt("deg=%g: LE %.4g vs SE %.4g; ", degree, le, se);
    }
    return report(4, "LE < SE at rho=0.9", ok, detail);
}

// Criterion 5: MNAR positive SBM cell (rho=0.2, degree=20).
bool criterion_mnar() {
    const auto records = run_experiment(table_config(
        ModelKind::sbm, Mechanism::mnar_positive, 0.2, 20, {Estimator::le}));
    const double mean = mean_mse(records, "le");
    return report(5, "MNAR+ SBM rho=0.2 deg=20 MSE window",
                  mean >= 1.75e-3 && mean <= 2.35e-3,
                  fmt("mean MSE %.4g (in [1.75e-3, 2.35e-3])", mean));
}

// Criterion 6: median relative error decreases with N at degree log^2(N).
bool criterion_consistency() {
    const auto start = Clock::now();
    std::vector<double> medians;
    std::string detail;
    for (const int n_total : {200, 400, 800, 1600}) {
        ModelSpec spec;
        spec.n_nodes = n_total;
        spec.k = 3;
        spec.target_degree = std::log(double(n_total)) * std::log(double(n_total));
        std::vector<double> errors;
        for (int rep = 0; rep < 20; ++rep) {
            const std::uint64_t rep_seed = derive_seed(606, rep * 8 + n_total / 200);
            spec.seed = derive_seed(rep_seed, 0);
            const auto p =
                scale_to_degree(generate(spec), spec.target_degree).matrix;
            const auto a = sample_adjacency(p, derive_seed(rep_seed, 1));
            const auto observed =
                sample_mcar(n_total, 0.5, derive_seed(rep_seed, 2));
            const auto view = extract_ego_view(a, observed);
            const auto hidden = hidden_indices(n_total, observed);
            const int m = static_cast<int>(hidden.size());
            Matrix truth(m, m);
            for (int i = 0; i < m; ++i) {
                for (int j = 0; j < m; ++j) {
                    truth(i, j) = p.values()(hidden[i], hidden[j]);
                }
            }
            const Matrix imputed = le_impute(view, 3, true).p22_hat;
            errors.push_back((imputed - truth).norm() / truth.norm());
        }
        std::sort(errors.begin(), errors.end());
        medians.push_back(0.5 * (errors[9] + errors[10]));
        detail += fmt("N=%g: %.4f; ", double(n_total), medians.back());
    }
    bool decreasing = true;
    for (std::size_t i = 1; i < medians.size(); ++i) {
        decreasing = decreasing && medians[i] < medians[i - 1];
    }
    const double elapsed = seconds_since(start);
    return report(6, "consistency in N", decreasing && elapsed < 600.0,
                  detail + fmt("%.1f s (< 600 s)", elapsed));
}

// Criterion 7: AUC equals the pairwise Mann-Whitney oracle.
bool criterion_auc_oracle() {
    std::mt19937_64 rng(77);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    double worst = 0;
    int done = 0;
    while (done < 200) {
        const int m = 3 + static_cast<int>(rng() % 18);  // block size <= 20
        Matrix scores(m, m);
        Matrix truth = Matrix::Zero(m, m);
        for (int i = 0; i < m; ++i) {
            for (int j = i + 1; j < m; ++j) {
                scores(i, j) = scores(j, i) = std::floor(unif(rng) * 6) / 6.0;
                const double edge = unif(rng) < 0.4 ? 1.0 : 0.0;
                truth(i, j) = truth(j, i) = edge;
            }
        }
        double oracle_num = 0;
        long long pairs = 0;
        bool pos = false, neg = false;
        for (int i = 0; i < m; ++i) {
            for (int j = i + 1; j < m; ++j) {
                pos = pos || truth(i, j) == 1.0;
                neg = neg || truth(i, j) == 0.0;
            }
        }
        if (!pos || !neg) continue;
        for (int i = 0; i < m; ++i) {
            for (int j = i + 1; j < m; ++j) {
                if (truth(i, j) != 1.0) continue;
                for (int a = 0; a < m; ++a) {
                    for (int b = a + 1; b < m; ++b) {
                        if (truth(a, b) != 0.0) continue;
                        ++pairs;
                        if (scores(i, j) > scores(a, b)) oracle_num += 1.0;
                        else if (scores(i, j) == scores(a, b)) oracle_num += 0.5;
                    }
                }
            }
        }
        const double oracle = oracle_num / double(pairs);
        worst = std::max(worst,
                         std::abs(auc_link_prediction(scores, truth).auc - oracle));
        ++done;
    }
    return report(7, "AUC pairwise-oracle equivalence", worst < 1e-12,
                  fmt("max |difference| %.3g (< 1e-12) over 200 instances",
                      worst));
}

// Criterion 8: clamping to [0,1] never increases entrywise error.
bool criterion_clamp_monotone() {
    std::mt19937_64 rng(88);
    std::uniform_real_distribution<double> wide(-3.0, 4.0);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    bool ok = true;
    for (int i = 0; i < 100000; ++i) {
        const double x = wide(rng);
        const double p = unit(rng);
        const double clamped = std::min(std::max(x, 0.0), 1.0);
        ok = ok && std::abs(clamped - p) <= std::abs(x - p);
    }
    return report(8, "clamp never increases error", ok,
                  "100000 random (x, p) pairs");
}

// Criterion 9: single imputation at N=500, n=250 under one second.
bool criterion_speed() {
    ModelSpec spec;
    spec.n_nodes = 500;
    spec.seed = 909;
    const auto p = scale_to_degree(generate(spec), spec.target_degree).matrix;
    const auto a = sample_adjacency(p, 910);
    const auto view = extract_ego_view(a, sample_mcar(500, 0.5, 911));
    auto [result, ms] = time_fit([&] { return le_impute(view, 5, true); });
    (void)result;
    return report(9, "single LE under one second", ms < 1000.0,
                  fmt("%.1f ms (< 1000 ms)", ms));
}

// Criterion 10: identical seeds give byte-identical CSVs minus wall time.
bool criterion_determinism() {
    auto grid_csv = [](int threads) {
        std::ostringstream out;
        for (const auto kind : {ModelKind::sbm, ModelKind::rdpg}) {
            for (const auto mech : {Mechanism::mcar, Mechanism::mnar_positive}) {
                auto config = table_config(
                    kind, mech, mech == Mechanism::mcar ? 0.5 : 0.2, 20,
                    {Estimator::le, Estimator::se, Estimator::le_plus});
                config.replications = 5;
                config.threads = threads;
                write_records_csv(run_experiment(config), out);
            }
        }
        // drop the trailing wall-time column of every row
        std::istringstream in(out.str());
        std::ostringstream stripped;
        std::string line;
        while (std::getline(in, line)) {
            stripped << line.substr(0, line.rfind(',')) << '\n';
        }
        return stripped.str();
    };
    const std::string first = grid_csv(4);
    const std::string second = grid_csv(2);
    return report(10, "byte-identical CSVs across runs", first == second,
                  fmt("grid of 4 cells x 3 estimators x 5 replications, "
                      "%g bytes compared", double(first.size())));
}

}  // namespace

int main() {
    bool all = true;
    all &= criterion_exactness();
    all &= criterion_sbm_mcar();
    all &= criterion_rdpg_mcar();
    all &= criterion_le_beats_se();
    all &= criterion_mnar();
    all &= criterion_consistency();
    all &= criterion_auc_oracle();
    all &= criterion_clamp_monotone();
    all &= criterion_speed();
    all &= criterion_determinism();
    std::printf("%s\n", all ? "ALL CRITERIA PASSED" : "SOME CRITERIA FAILED");
    return all ? 0 : 1;
}
