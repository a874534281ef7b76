#pragma once

#include "egonet/graph.hpp"

namespace egonet {

struct ImputationResult {
    Matrix p22_hat;
    int rank_used = 0;
    bool truncated = false;
};

struct FullRecoveryResult {
    Matrix p_hat;
    int rank_used = 0;
};

/// Clamp every entry to [0,1].
Matrix clamp_unit(Matrix m);

/// Low-rank estimator: a12^T * pinv(rank-k smoothing of a11) * a12.
ImputationResult le_impute(const EgoView& view, int k, bool truncate = true);

/// Subspace estimator: smooth [a11 | a12] at rank k, take its first n
/// columns in place of the smoothed a11, then proceed as in le_impute.
ImputationResult se_impute(const EgoView& view, int k, bool truncate = true);

/// Elementwise mean of the un-clamped LE and SE imputations.
ImputationResult le_plus_impute(const EgoView& view, int k, bool truncate = true);

/// Assemble an estimate of the whole N x N probability matrix: observed
/// blocks from the rank-k smoothing of [a11 | a12] (with the principal
/// block symmetrized), hidden block from le_impute.
FullRecoveryResult recover_full(const EgoView& view, int k, bool truncate = true);

}  // namespace egonet
