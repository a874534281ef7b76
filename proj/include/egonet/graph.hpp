#pragma once

#include <Eigen/Dense>
#include <vector>

namespace egonet {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// Four conformable blocks of a square matrix split at row/column n.
struct BlockPartition {
    Matrix m11, m12, m21, m22;
};

BlockPartition partition(const Matrix& m, Eigen::Index n);

/// Inverse of partition(): stitches the four blocks back together.
Matrix reassemble(const BlockPartition& b);

/// Symmetric matrix of edge probabilities, entries in [0,1].
class ProbabilityMatrix {
public:
    explicit ProbabilityMatrix(Matrix values);

    Eigen::Index n_nodes() const { return values_.rows(); }
    const Matrix& values() const { return values_; }
    double max_entry() const { return values_.maxCoeff(); }

private:
    Matrix values_;
};

/// Symmetric binary matrix with zero diagonal.
class AdjacencyMatrix {
public:
    explicit AdjacencyMatrix(Matrix values);

    Eigen::Index n_nodes() const { return values_.rows(); }
    const Matrix& values() const { return values_; }
    Vector degrees() const { return values_.rowwise().sum(); }

private:
    Matrix values_;
};

/// Observed part of an egocentrically sampled network: the sampled nodes,
/// their mutual links (a11) and their links to the unsampled rest (a12).
/// Blocks are real-valued so that noiseless probability blocks can be fed
/// through the same estimators.
struct EgoView {
    std::vector<int> observed;
    Matrix a11;
    Matrix a12;
    int n_total = 0;

    int n_observed() const { return static_cast<int>(observed.size()); }
    int n_hidden() const { return n_total - n_observed(); }
};

/// Complement of `observed` in [0, n_total), ascending.
std::vector<int> hidden_indices(int n_total, const std::vector<int>& observed);

EgoView extract_ego_view(const AdjacencyMatrix& adjacency,
                         const std::vector<int>& observed);

}  // namespace egonet
