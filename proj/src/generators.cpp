#include "egonet/generators.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace egonet {

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
    // splitmix64 over the combined state
    std::uint64_t z = master + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

namespace {

Matrix planted_partition(const ModelSpec& spec) {
    if (spec.b_matrix) {
        if (spec.b_matrix->rows() != spec.k || spec.b_matrix->cols() != spec.k) {
            throw std::invalid_argument("generate: b_matrix must be K x K");
        }
        return *spec.b_matrix;
    }
    Matrix b = Matrix::Constant(spec.k, spec.k, spec.b_between);
    b.diagonal().setConstant(spec.b_within);
    return b;
}

std::vector<int> random_labels(int n, int k, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> pick(0, k - 1);
    std::vector<int> labels(n);
    for (int& z : labels) z = pick(rng);
    return labels;
}

Matrix symmetrized(Matrix m) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
        for (Eigen::Index i = 0; i < j; ++i) {
            m(j, i) = m(i, j);
        }
    }
    return m;
}

}  // namespace

ProbabilityMatrix sbm_matrix(const Matrix& b, const std::vector<int>& labels) {
    const int n = static_cast<int>(labels.size());
    Matrix p(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            p(i, j) = b(labels[i], labels[j]);
        }
    }
    return ProbabilityMatrix(std::move(p));
}

ProbabilityMatrix dcbm_matrix(const Matrix& b, const std::vector<int>& labels,
                              const Vector& theta) {
    const int n = static_cast<int>(labels.size());
    if (theta.size() != n) {
        throw std::invalid_argument("dcbm_matrix: theta length mismatch");
    }
    Matrix p(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            const double v = theta(i) * theta(j) * b(labels[i], labels[j]);
            p(i, j) = std::min(v, 1.0);
            p(j, i) = p(i, j);
        }
    }
    return ProbabilityMatrix(std::move(p));
}

ProbabilityMatrix gen_sbm(const ModelSpec& spec) {
    std::mt19937_64 rng(spec.seed);
    return sbm_matrix(planted_partition(spec),
                      random_labels(spec.n_nodes, spec.k, rng));
}

ProbabilityMatrix gen_dcbm(const ModelSpec& spec) {
    std::mt19937_64 rng(spec.seed);
    const auto labels = random_labels(spec.n_nodes, spec.k, rng);

    // Pareto(shape alpha, scale 1) via inverse CDF, then normalized by the
    // within-community maximum so theta stays in (0,1].
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    Vector theta(spec.n_nodes);
    for (int i = 0; i < spec.n_nodes; ++i) {
        double u = unif(rng);
        while (u == 0.0) u = unif(rng);
        theta(i) = std::pow(u, -1.0 / spec.degree_power_alpha);
    }
    Vector group_max = Vector::Zero(spec.k);
    for (int i = 0; i < spec.n_nodes; ++i) {
        group_max(labels[i]) = std::max(group_max(labels[i]), theta(i));
    }
    for (int i = 0; i < spec.n_nodes; ++i) {
        theta(i) /= group_max(labels[i]);
    }

    const double w = spec.b_within;
    Matrix b = Matrix::Constant(spec.k, spec.k, spec.out_in_ratio * w);
    b.diagonal().setConstant(w);
    return dcbm_matrix(b, labels, theta);
}

ProbabilityMatrix gen_rdpg(const ModelSpec& spec) {
    std::mt19937_64 rng(spec.seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    // Beta(0.5, 1) by inverse CDF: x = u^2
    Matrix z(spec.n_nodes, spec.k);
    for (int i = 0; i < spec.n_nodes; ++i) {
        for (int j = 0; j < spec.k; ++j) {
            const double u = unif(rng);
            z(i, j) = u * u;
        }
    }
    // Divide the Gram matrix by K so entries stay in [0,1]; the uniform
    // factor is undone by degree scaling and leaves rank and PSD-ness intact.
    Matrix p = symmetrized(z * z.transpose()) / static_cast<double>(spec.k);
    return ProbabilityMatrix(std::move(p));
}

ProbabilityMatrix gen_distance(const ModelSpec& spec) {
    std::mt19937_64 rng(spec.seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    Matrix z(spec.n_nodes, spec.k);
    for (int i = 0; i < spec.n_nodes; ++i) {
        for (int j = 0; j < spec.k; ++j) {
            z(i, j) = gauss(rng);
        }
    }
    Matrix p(spec.n_nodes, spec.n_nodes);
    for (int i = 0; i < spec.n_nodes; ++i) {
        for (int j = i; j < spec.n_nodes; ++j) {
            const double dist = (z.row(i) - z.row(j)).norm();
            p(i, j) = 1.0 / (1.0 + std::exp(dist));
            p(j, i) = p(i, j);
        }
    }
    return ProbabilityMatrix(std::move(p));
}

ProbabilityMatrix generate(const ModelSpec& spec) {
    switch (spec.kind) {
        case ModelKind::sbm: return gen_sbm(spec);
        case ModelKind::dcbm: return gen_dcbm(spec);
        case ModelKind::rdpg: return gen_rdpg(spec);
        case ModelKind::distance: return gen_distance(spec);
    }
    throw std::invalid_argument("generate: unknown model kind");
}

ScaleResult scale_to_degree(const ProbabilityMatrix& p, double target_degree) {
    const Eigen::Index n = p.n_nodes();
    const double off_diag_mass = p.values().sum() - p.values().diagonal().sum();
    if (off_diag_mass <= 0.0) {
        throw std::invalid_argument("scale_to_degree: no positive off-diagonal entry");
    }
    const double factor = target_degree * static_cast<double>(n) / off_diag_mass;
    Matrix scaled = factor * p.values();

    double clipped = 0.0;
    bool saturated = false;
    for (Eigen::Index j = 0; j < n; ++j) {
        for (Eigen::Index i = 0; i < n; ++i) {
            if (scaled(i, j) > 1.0) {
                clipped += scaled(i, j) - 1.0;
                scaled(i, j) = 1.0;
                saturated = true;
            }
        }
    }
    const double total_mass = factor * off_diag_mass;
    return {ProbabilityMatrix(std::move(scaled)), factor, saturated,
            total_mass > 0 ? clipped / total_mass : 0.0};
}

AdjacencyMatrix sample_adjacency(const ProbabilityMatrix& p, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    const Eigen::Index n = p.n_nodes();
    Matrix a = Matrix::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = i + 1; j < n; ++j) {
            if (unif(rng) < p.values()(i, j)) {
                a(i, j) = 1.0;
                a(j, i) = 1.0;
            }
        }
    }
    return AdjacencyMatrix(std::move(a));
}

}  // namespace egonet
