#include "egonet/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace egonet {

BlockPartition partition(const Matrix& m, Eigen::Index n) {
    const Eigen::Index total = m.rows();
    if (m.cols() != total) {
        throw std::invalid_argument("partition: matrix must be square");
    }
    if (n < 1 || n >= total) {
        throw std::invalid_argument("partition: split index " + std::to_string(n) +
                                    " out of range for " + std::to_string(total) +
                                    " rows");
    }
    BlockPartition b;
    b.m11 = m.topLeftCorner(n, n);
    b.m12 = m.topRightCorner(n, total - n);
    b.m21 = m.bottomLeftCorner(total - n, n);
    b.m22 = m.bottomRightCorner(total - n, total - n);
    return b;
}

Matrix reassemble(const BlockPartition& b) {
    const Eigen::Index n = b.m11.rows();
    const Eigen::Index rest = b.m22.rows();
    Matrix m(n + rest, n + rest);
    m.topLeftCorner(n, n) = b.m11;
    m.topRightCorner(n, rest) = b.m12;
    m.bottomLeftCorner(rest, n) = b.m21;
    m.bottomRightCorner(rest, rest) = b.m22;
    return m;
}

ProbabilityMatrix::ProbabilityMatrix(Matrix values) : values_(std::move(values)) {
    const Eigen::Index n = values_.rows();
    if (n == 0 || values_.cols() != n) {
        throw std::invalid_argument("ProbabilityMatrix: values must be square and nonempty");
    }
    for (Eigen::Index j = 0; j < n; ++j) {
        for (Eigen::Index i = 0; i <= j; ++i) {
            const double x = values_(i, j);
            if (!(x >= 0.0 && x <= 1.0)) {
                throw std::invalid_argument("ProbabilityMatrix: entry outside [0,1]");
            }
            if (values_(j, i) != x) {
                throw std::invalid_argument("ProbabilityMatrix: not symmetric");
            }
        }
    }
}

AdjacencyMatrix::AdjacencyMatrix(Matrix values) : values_(std::move(values)) {
    const Eigen::Index n = values_.rows();
    if (n == 0 || values_.cols() != n) {
        throw std::invalid_argument("AdjacencyMatrix: values must be square and nonempty");
    }
    for (Eigen::Index j = 0; j < n; ++j) {
        if (values_(j, j) != 0.0) {
            throw std::invalid_argument("AdjacencyMatrix: diagonal must be zero");
        }
        for (Eigen::Index i = 0; i < j; ++i) {
            const double x = values_(i, j);
            if (x != 0.0 && x != 1.0) {
                throw std::invalid_argument("AdjacencyMatrix: entries must be 0 or 1");
            }
            if (values_(j, i) != x) {
                throw std::invalid_argument("AdjacencyMatrix: not symmetric");
            }
        }
    }
}

std::vector<int> hidden_indices(int n_total, const std::vector<int>& observed) {
    std::vector<char> seen(n_total, 0);
    for (int i : observed) seen[i] = 1;
    std::vector<int> hidden;
    hidden.reserve(n_total - static_cast<int>(observed.size()));
    for (int i = 0; i < n_total; ++i) {
        if (!seen[i]) hidden.push_back(i);
    }
    return hidden;
}

EgoView extract_ego_view(const AdjacencyMatrix& adjacency,
                         const std::vector<int>& observed) {
    const int n_total = static_cast<int>(adjacency.n_nodes());
    const int n = static_cast<int>(observed.size());
    if (n < 1 || n >= n_total) {
        throw std::invalid_argument("extract_ego_view: need 1 <= |observed| < N");
    }
    std::unordered_set<int> distinct;
    for (int i : observed) {
        if (i < 0 || i >= n_total) {
            throw std::invalid_argument("extract_ego_view: index " +
                                        std::to_string(i) + " out of range");
        }
        if (!distinct.insert(i).second) {
            throw std::invalid_argument("extract_ego_view: duplicate index " +
                                        std::to_string(i));
        }
    }
    const std::vector<int> hidden = hidden_indices(n_total, observed);
    const Matrix& a = adjacency.values();

    EgoView view;
    view.observed = observed;
    view.n_total = n_total;
    view.a11.resize(n, n);
    view.a12.resize(n, n_total - n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            view.a11(i, j) = a(observed[i], observed[j]);
        }
        for (std::size_t k = 0; k < hidden.size(); ++k) {
            view.a12(i, static_cast<Eigen::Index>(k)) = a(observed[i], hidden[k]);
        }
    }
    return view;
}

}  // namespace egonet
