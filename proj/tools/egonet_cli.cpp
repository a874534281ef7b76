// Experiment runner and data plumbing for egocentric network imputation.
//
// Subcommands: generate, sample, impute, tune-rank, evaluate, experiment, roc.
// Exit codes: 0 success, 1 usage error, 2 I/O error, 3 numerical failure.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "egonet/estimators.hpp"
#include "egonet/evaluation.hpp"
#include "egonet/experiment.hpp"
#include "egonet/generators.hpp"
#include "egonet/io.hpp"
#include "egonet/sampling.hpp"
#include "egonet/tuning.hpp"

namespace {

using namespace egonet;

ModelSpec model_from_flags(const std::string& kind, int n, int k, double degree,
                           double b_within, double b_between, double out_in_ratio,
                           std::uint64_t seed) {
    ModelSpec spec;
    if (kind == "sbm") spec.kind = ModelKind::sbm;
    else if (kind == "dcbm") spec.kind = ModelKind::dcbm;
    else if (kind == "rdpg" || kind == "product") spec.kind = ModelKind::rdpg;
    else if (kind == "distance") spec.kind = ModelKind::distance;
    else throw CLI::ValidationError("--model", "unknown model kind: " + kind);
    spec.n_nodes = n;
    spec.k = k;
    spec.target_degree = degree;
    spec.b_within = b_within;
    spec.b_between = b_between;
    spec.out_in_ratio = out_in_ratio;
    spec.seed = seed;
    return spec;
}

ImputationResult impute_with(const std::string& estimator, const EgoView& view,
                             int k, bool truncate) {
    if (estimator == "le") return le_impute(view, k, truncate);
    if (estimator == "se") return se_impute(view, k, truncate);
    if (estimator == "le_plus" || estimator == "le+")
        return le_plus_impute(view, k, truncate);
    throw CLI::ValidationError("--estimator", "unknown estimator: " + estimator);
}

std::vector<int> candidate_ranks(int max_rank, int n, double holdout_fraction) {
    const int holdout = static_cast<int>(std::llround(holdout_fraction * n));
    std::vector<int> out;
    for (int c = 1; c <= std::min(max_rank, n - holdout); ++c) out.push_back(c);
    return out;
}

int resolve_rank(const std::string& rank, const EgoView& view, int cv_max_rank,
                 double cv_holdout, int cv_repeats, std::uint64_t seed) {
    if (rank == "cv") {
        const auto cands = candidate_ranks(cv_max_rank, view.n_observed(), cv_holdout);
        return select_rank(view, cands, cv_holdout, cv_repeats, seed).chosen_rank;
    }
    return std::stoi(rank);
}

// Truth files may hold either the hidden block itself or the full matrix;
// the latter is sliced down when an ego view is supplied.
Matrix load_truth(const std::string& path, Eigen::Index pred_rows,
                  const std::string& view_path) {
    Matrix truth = read_matrix_file(path);
    if (truth.rows() == pred_rows || view_path.empty()) return truth;
    const EgoView view = read_ego_view_file(view_path);
    const auto hidden = hidden_indices(view.n_total, view.observed);
    const int m = static_cast<int>(hidden.size());
    Matrix block(m, m);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) block(i, j) = truth(hidden[i], hidden[j]);
    }
    return block;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Low-rank imputation of egocentrically sampled networks"};
    app.require_subcommand(1);

    // generate
    auto* gen = app.add_subcommand("generate", "Generate a probability matrix and one network draw");
    std::string g_model = "sbm";
    int g_n = 500, g_k = 5;
    double g_degree = 20, g_bw = 0.6, g_bb = 0.12, g_oir = 0.2;
    std::uint64_t g_seed = 0;
    std::string g_out_p, g_out_a;
    gen->add_option("--model", g_model, "sbm|dcbm|rdpg|distance");
    gen->add_option("--n", g_n, "number of nodes");
    gen->add_option("--k", g_k, "communities / latent dimension");
    gen->add_option("--degree", g_degree, "target expected average degree");
    gen->add_option("--b-within", g_bw, "within-block probability (sbm)");
    gen->add_option("--b-between", g_bb, "between-block probability (sbm)");
    gen->add_option("--out-in-ratio", g_oir, "out-in ratio (dcbm)");
    gen->add_option("--seed", g_seed, "RNG seed");
    gen->add_option("--out-p", g_out_p, "output path for P")->required();
    gen->add_option("--out-a", g_out_a, "output path for A")->required();

    // sample
    auto* smp = app.add_subcommand("sample", "Egocentrically sample an adjacency matrix");
    std::string s_adj, s_mech = "mcar", s_out;
    double s_rho = 0.5;
    std::uint64_t s_seed = 0;
    smp->add_option("--adjacency", s_adj, "adjacency matrix file")->required();
    smp->add_option("--mechanism", s_mech, "mcar|mnar_positive|mnar_negative");
    smp->add_option("--rho", s_rho, "base sampling proportion");
    smp->add_option("--seed", s_seed, "RNG seed");
    smp->add_option("--out", s_out, "output ego view file")->required();

    // impute
    auto* imp = app.add_subcommand("impute", "Impute the hidden block of an ego view");
    std::string i_view, i_est = "le", i_rank = "5", i_out;
    bool i_truncate = true;
    int i_cv_max = 8, i_cv_reps = 5;
    double i_cv_holdout = 0.1;
    std::uint64_t i_seed = 0;
    imp->add_option("--view", i_view, "ego view file")->required();
    imp->add_option("--estimator", i_est, "le|se|le_plus");
    imp->add_option("--rank", i_rank, "fixed rank or 'cv'");
    imp->add_option("--truncate", i_truncate, "clamp output to [0,1]");
    imp->add_option("--cv-max-rank", i_cv_max, "largest candidate rank for cv");
    imp->add_option("--cv-holdout", i_cv_holdout, "holdout fraction for cv");
    imp->add_option("--cv-repeats", i_cv_reps, "cv repeats");
    imp->add_option("--seed", i_seed, "cv RNG seed");
    imp->add_option("--out", i_out, "output matrix file")->required();

    // tune-rank
    auto* tune = app.add_subcommand("tune-rank", "Cross-validated rank selection");
    std::string t_view, t_out;
    int t_max = 8, t_reps = 5;
    double t_holdout = 0.1;
    std::uint64_t t_seed = 0;
    tune->add_option("--view", t_view, "ego view file")->required();
    tune->add_option("--max-rank", t_max, "largest candidate rank");
    tune->add_option("--holdout", t_holdout, "holdout fraction");
    tune->add_option("--repeats", t_reps, "number of holdout repeats");
    tune->add_option("--seed", t_seed, "RNG seed");
    tune->add_option("--out", t_out, "selection trace CSV (optional)");

    // evaluate
    auto* eval = app.add_subcommand("evaluate", "Score an imputed block");
    std::string e_pred, e_truth_p, e_truth_a, e_view;
    eval->add_option("--pred", e_pred, "imputed block matrix file")->required();
    eval->add_option("--truth-p", e_truth_p, "true probability matrix or block (MSE)");
    eval->add_option("--truth-a", e_truth_a, "true adjacency matrix or block (AUC)");
    eval->add_option("--view", e_view,
                     "ego view file; slices full-size truth to the hidden block");

    // experiment
    auto* exp = app.add_subcommand("experiment", "Run a replicated experiment from a config");
    std::string x_config, x_out;
    std::optional<std::uint64_t> x_seed;
    int x_threads = -1;
    exp->add_option("--config", x_config, "config file (key=value or JSON)")->required();
    exp->add_option("--seed", x_seed, "override master seed");
    exp->add_option("--threads", x_threads, "worker threads (0 = all cores)");
    exp->add_option("--out", x_out, "override output CSV path");

    // roc
    auto* roc = app.add_subcommand("roc", "Emit ROC curve points for plotting");
    std::string r_pred, r_truth, r_out, r_view;
    roc->add_option("--pred", r_pred, "score block matrix file")->required();
    roc->add_option("--truth-a", r_truth, "binary truth matrix or block file")->required();
    roc->add_option("--view", r_view,
                    "ego view file; slices full-size truth to the hidden block");
    roc->add_option("--out", r_out, "output CSV (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*gen) {
            const ModelSpec spec = model_from_flags(g_model, g_n, g_k, g_degree,
                                                    g_bw, g_bb, g_oir, g_seed);
            const auto scaled = scale_to_degree(generate(spec), spec.target_degree);
            const auto a = sample_adjacency(scaled.matrix, derive_seed(g_seed, 1));
            write_matrix_file(scaled.matrix.values(), g_out_p);
            write_matrix_file(a.values(), g_out_a);
            if (scaled.saturated) {
                std::cerr << "warning: degree scaling clipped "
                          << scaled.clipped_mass_fraction * 100 << "% of mass\n";
            }
        } else if (*smp) {
            const AdjacencyMatrix a(read_matrix_file(s_adj));
            SamplingPlan plan;
            std::istringstream mech_in(s_mech);
            plan.mechanism = s_mech == "mcar" ? Mechanism::mcar
                             : s_mech == "mnar_positive" ? Mechanism::mnar_positive
                             : s_mech == "mnar_negative" ? Mechanism::mnar_negative
                             : throw CLI::ValidationError("--mechanism", s_mech);
            plan.rho = s_rho;
            plan.seed = s_seed;
            plan.deltas = default_deltas(plan.mechanism);
            write_ego_view_file(extract_ego_view(a, sample_observed(a, plan)), s_out);
        } else if (*imp) {
            const EgoView view = read_ego_view_file(i_view);
            const int k = resolve_rank(i_rank, view, i_cv_max, i_cv_holdout,
                                       i_cv_reps, i_seed);
            write_matrix_file(impute_with(i_est, view, k, i_truncate).p22_hat, i_out);
        } else if (*tune) {
            const EgoView view = read_ego_view_file(t_view);
            const auto cands = candidate_ranks(t_max, view.n_observed(), t_holdout);
            const RankSelection sel = select_rank(view, cands, t_holdout, t_reps, t_seed);
            std::cout << sel.chosen_rank << '\n';
            if (!t_out.empty()) {
                std::ofstream out(t_out);
                if (!out) throw IoError("cannot open for writing: " + t_out);
                write_selection_trace(sel, out);
            }
        } else if (*eval) {
            const Matrix pred = read_matrix_file(e_pred);
            if (!e_truth_p.empty()) {
                std::cout << "mse "
                          << mse_block(pred, load_truth(e_truth_p, pred.rows(), e_view))
                          << '\n';
            }
            if (!e_truth_a.empty()) {
                std::cout << "auc "
                          << auc_link_prediction(
                                 pred, load_truth(e_truth_a, pred.rows(), e_view)).auc
                          << '\n';
            }
            if (e_truth_p.empty() && e_truth_a.empty()) {
                std::cerr << "evaluate: nothing to score (give --truth-p or --truth-a)\n";
                return 1;
            }
        } else if (*exp) {
            ExperimentConfig config = parse_config_file(x_config);
            if (x_seed) config.master_seed = *x_seed;
            if (x_threads >= 0) config.threads = x_threads;
            if (!x_out.empty()) config.output_path = x_out;
            const auto records = run_experiment(config);
            if (!config.output_path.empty()) {
                std::ofstream out(config.output_path);
                if (!out) throw IoError("cannot open for writing: " + config.output_path);
                write_records_csv(records, out);
            }
            write_summary(summarize(records), std::cout);
        } else if (*roc) {
            const Matrix pred = read_matrix_file(r_pred);
            const auto curve =
                auc_link_prediction(pred, load_truth(r_truth, pred.rows(), r_view));
            std::ostream* out = &std::cout;
            std::ofstream file;
            if (!r_out.empty()) {
                file.open(r_out);
                if (!file) throw IoError("cannot open for writing: " + r_out);
                out = &file;
            }
            *out << "fpr,tpr\n";
            for (const auto& [fpr, tpr] : curve.points) {
                *out << fpr << ',' << tpr << '\n';
            }
            std::cerr << "auc " << curve.auc << '\n';
        }
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    }
    return 0;
}
