#include "egonet/spectral.hpp"

#include <Eigen/SVD>
#include <stdexcept>
#include <string>

namespace egonet {

RankKFactorization truncated_svd(const Matrix& m, int k) {
    const int max_rank = static_cast<int>(std::min(m.rows(), m.cols()));
    if (k < 1 || k > max_rank) {
        throw std::invalid_argument("truncated_svd: k = " + std::to_string(k) +
                                    " outside [1, " + std::to_string(max_rank) + "]");
    }
    if (!m.allFinite()) {
        throw std::invalid_argument("truncated_svd: non-finite entries");
    }
    Eigen::BDCSVD<Matrix> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
    RankKFactorization f;
    f.u = svd.matrixU().leftCols(k);
    f.d = svd.singularValues().head(k);
    f.v = svd.matrixV().leftCols(k);
    return f;
}

Matrix reconstruct(const RankKFactorization& f) {
    return f.u * f.d.asDiagonal() * f.v.transpose();
}

Matrix pinv_rank_k(const RankKFactorization& f, double rel_tol) {
    const double cutoff = f.d.size() > 0 ? rel_tol * f.d(0) : 0.0;
    Vector d_inv(f.d.size());
    for (Eigen::Index i = 0; i < f.d.size(); ++i) {
        d_inv(i) = f.d(i) > cutoff ? 1.0 / f.d(i) : 0.0;
    }
    return f.v * d_inv.asDiagonal() * f.u.transpose();
}

}  // namespace egonet
