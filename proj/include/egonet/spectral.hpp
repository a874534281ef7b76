#pragma once

#include "egonet/graph.hpp"

namespace egonet {

/// Leading-K singular triplets: u (p x K), d (K, nonincreasing), v (q x K).
struct RankKFactorization {
    Matrix u;
    Vector d;
    Matrix v;

    int rank() const { return static_cast<int>(d.size()); }
};

/// Best rank-k approximation of m in Frobenius norm (Eckart-Young).
RankKFactorization truncated_svd(const Matrix& m, int k);

/// u * diag(d) * v^T.
Matrix reconstruct(const RankKFactorization& f);

/// Moore-Penrose inverse of reconstruct(f). Singular values at or below
/// rel_tol * d(0) are treated as zero.
Matrix pinv_rank_k(const RankKFactorization& f, double rel_tol = 1e-12);

}  // namespace egonet
