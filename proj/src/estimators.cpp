#include "egonet/estimators.hpp"

#include <stdexcept>
#include <string>

#include "egonet/spectral.hpp"

namespace egonet {

namespace {

void check_rank(const EgoView& view, int k) {
    if (k < 1 || k > view.n_observed()) {
        throw std::invalid_argument("impute: rank " + std::to_string(k) +
                                    " outside [1, n=" +
                                    std::to_string(view.n_observed()) + "]");
    }
}

Matrix impute_through(const Matrix& smoothing_input, const EgoView& view, int k) {
    const RankKFactorization f = truncated_svd(smoothing_input, k);
    return view.a12.transpose() * pinv_rank_k(f) * view.a12;
}

}  // namespace

Matrix clamp_unit(Matrix m) {
    return m.cwiseMax(0.0).cwiseMin(1.0);
}

ImputationResult le_impute(const EgoView& view, int k, bool truncate) {
    check_rank(view, k);
    Matrix p22 = impute_through(view.a11, view, k);
    return {truncate ? clamp_unit(std::move(p22)) : std::move(p22), k, truncate};
}

ImputationResult se_impute(const EgoView& view, int k, bool truncate) {
    check_rank(view, k);
    const int n = view.n_observed();
    Matrix a_obs(n, view.n_total);
    a_obs.leftCols(n) = view.a11;
    a_obs.rightCols(view.n_hidden()) = view.a12;
    const Matrix p11_prime = reconstruct(truncated_svd(a_obs, k)).leftCols(n);
    Matrix p22 = impute_through(p11_prime, view, k);
    return {truncate ? clamp_unit(std::move(p22)) : std::move(p22), k, truncate};
}

ImputationResult le_plus_impute(const EgoView& view, int k, bool truncate) {
    Matrix p22 = 0.5 * (le_impute(view, k, false).p22_hat +
                        se_impute(view, k, false).p22_hat);
    return {truncate ? clamp_unit(std::move(p22)) : std::move(p22), k, truncate};
}

FullRecoveryResult recover_full(const EgoView& view, int k, bool truncate) {
    check_rank(view, k);
    const int n = view.n_observed();
    const int rest = view.n_hidden();
    Matrix a_obs(n, view.n_total);
    a_obs.leftCols(n) = view.a11;
    a_obs.rightCols(rest) = view.a12;
    const Matrix p_obs = reconstruct(truncated_svd(a_obs, k));

    const Matrix c = p_obs.leftCols(n);
    Matrix p_hat(view.n_total, view.n_total);
    p_hat.topLeftCorner(n, n) = 0.5 * (c + c.transpose());
    p_hat.topRightCorner(n, rest) = p_obs.rightCols(rest);
    p_hat.bottomLeftCorner(rest, n) = p_obs.rightCols(rest).transpose();
    Matrix p22 = le_impute(view, k, false).p22_hat;
    p_hat.bottomRightCorner(rest, rest) = 0.5 * (p22 + p22.transpose());
    if (truncate) p_hat = clamp_unit(std::move(p_hat));
    return {std::move(p_hat), k};
}

}  // namespace egonet
