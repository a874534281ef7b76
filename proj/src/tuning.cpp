#include "egonet/tuning.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>
#include <random>
#include <stdexcept>

#include "egonet/estimators.hpp"
#include "egonet/evaluation.hpp"
#include "egonet/generators.hpp"
#include "egonet/sampling.hpp"

namespace egonet {

int round_average_rank(const std::vector<int>& picks) {
    if (picks.empty()) {
        throw std::invalid_argument("round_average_rank: no picks");
    }
    const double mean = std::accumulate(picks.begin(), picks.end(), 0.0) /
                        static_cast<double>(picks.size());
    return static_cast<int>(std::llround(mean));  // half away from zero
}

namespace {

struct HoldoutScores {
    bool degenerate = true;
    std::vector<double> aucs;  // one per candidate
};

// One holdout split: nodes V held out of the observed set, the rest kept.
// Candidate ranks are scored by AUC on the held-out V x V upper triangle,
// predicted by running the imputation pathway on the shrunken view. Only
// the imputed block enters the score: the V x keep entries are predicted by
// smoothing rather than imputation, and their AUC grows monotonically with
// rank, which would drown out the signal the tuning is meant to pick up.
HoldoutScores score_holdout(const EgoView& view, const std::vector<int>& candidates,
                            int holdout_size, std::uint64_t seed) {
    const int n = view.n_observed();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::mt19937_64 rng(seed);
    for (int i = 0; i < holdout_size; ++i) {
        std::uniform_int_distribution<int> pick(i, n - 1);
        std::swap(perm[i], perm[pick(rng)]);
    }
    std::vector<int> held(perm.begin(), perm.begin() + holdout_size);
    std::vector<int> kept(perm.begin() + holdout_size, perm.end());
    std::sort(held.begin(), held.end());
    std::sort(kept.begin(), kept.end());
    const int n_keep = static_cast<int>(kept.size());

    EgoView sub;
    sub.n_total = n;
    sub.observed = kept;
    sub.a11.resize(n_keep, n_keep);
    sub.a12.resize(n_keep, holdout_size);
    for (int i = 0; i < n_keep; ++i) {
        for (int j = 0; j < n_keep; ++j) sub.a11(i, j) = view.a11(kept[i], kept[j]);
        for (int j = 0; j < holdout_size; ++j) sub.a12(i, j) = view.a11(kept[i], held[j]);
    }

    // Ground truth on the held-out block, each dyad once.
    std::vector<std::uint8_t> truth;
    for (int i = 0; i < holdout_size; ++i) {
        for (int j = i + 1; j < holdout_size; ++j) {
            truth.push_back(view.a11(held[i], held[j]) != 0.0 ? 1 : 0);
        }
    }
    const bool has_pos = std::find(truth.begin(), truth.end(), 1) != truth.end();
    const bool has_neg = std::find(truth.begin(), truth.end(), 0) != truth.end();
    if (!has_pos || !has_neg) {
        return {};
    }

    HoldoutScores scores;
    scores.degenerate = false;
    for (int k : candidates) {
        if (k > n_keep) {
            scores.aucs.push_back(-1.0);
            continue;
        }
        const Matrix p_hat = le_impute(sub, k, false).p22_hat;
        std::vector<double> pred;
        pred.reserve(truth.size());
        for (int i = 0; i < holdout_size; ++i) {
            for (int j = i + 1; j < holdout_size; ++j) {
                pred.push_back(p_hat(i, j));
            }
        }
        scores.aucs.push_back(roc_from_samples(pred, truth).auc);
    }
    return scores;
}

}  // namespace

RankSelection select_rank(const EgoView& view, const std::vector<int>& candidates,
                          double holdout_fraction, int repeats,
                          std::uint64_t seed) {
    const int n = view.n_observed();
    if (candidates.empty()) {
        throw std::invalid_argument("select_rank: empty candidate set");
    }
    const int holdout_size = static_cast<int>(std::llround(holdout_fraction * n));
    if (holdout_size < 1 || holdout_size >= n) {
        throw std::invalid_argument("select_rank: holdout must leave a nonempty split");
    }
    for (int k : candidates) {
        if (k < 1 || k > n - holdout_size) {
            throw std::invalid_argument("select_rank: candidate rank out of range");
        }
    }

    RankSelection sel;
    sel.candidate_ranks = candidates;
    sel.holdout_fraction = holdout_fraction;
    sel.repeats = repeats;
    sel.seed = seed;
    sel.per_rank_auc.resize(repeats, static_cast<Eigen::Index>(candidates.size()));

    for (int rep = 0; rep < repeats; ++rep) {
        HoldoutScores scores;
        int attempt = 0;
        for (; attempt < 10; ++attempt) {
            scores = score_holdout(view, candidates, holdout_size,
                                   derive_seed(seed, rep * 16 + attempt));
            if (!scores.degenerate) break;
        }
        if (scores.degenerate) {
            throw std::invalid_argument(
                "select_rank: degenerate holdout after 10 redraws");
        }
        int best = 0;
        for (std::size_t c = 0; c < candidates.size(); ++c) {
            sel.per_rank_auc(rep, static_cast<Eigen::Index>(c)) = scores.aucs[c];
            if (scores.aucs[c] > scores.aucs[best]) best = static_cast<int>(c);
        }
        sel.per_repeat_argmax.push_back(candidates[best]);
    }
    sel.chosen_rank = round_average_rank(sel.per_repeat_argmax);
    return sel;
}

void write_selection_trace(const RankSelection& sel, std::ostream& out) {
    out << "repeat,rank,auc\n";
    for (int rep = 0; rep < sel.repeats; ++rep) {
        for (std::size_t c = 0; c < sel.candidate_ranks.size(); ++c) {
            out << rep << ',' << sel.candidate_ranks[c] << ','
                << sel.per_rank_auc(rep, static_cast<Eigen::Index>(c)) << '\n';
        }
    }
}

}  // namespace egonet
