#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "egonet/graph.hpp"

namespace egonet {

enum class ModelKind { sbm, dcbm, rdpg, distance };

struct ModelSpec {
    ModelKind kind = ModelKind::sbm;
    int n_nodes = 500;
    int k = 5;                        // communities (sbm/dcbm) or latent dim
    double b_within = 0.6;            // planted-partition diagonal
    double b_between = 0.12;          // off-diagonal; b_between/b_within is the out-in ratio
    std::optional<Matrix> b_matrix;   // overrides b_within/b_between when set
    double out_in_ratio = 0.2;        // dcbm
    double degree_power_alpha = 0.1;  // dcbm power-law shape
    double target_degree = 20;
    std::uint64_t seed = 0;
};

/// Deterministic builders, randomness drawn by the gen_* wrappers.
ProbabilityMatrix sbm_matrix(const Matrix& b, const std::vector<int>& labels);
ProbabilityMatrix dcbm_matrix(const Matrix& b, const std::vector<int>& labels,
                              const Vector& theta);

ProbabilityMatrix gen_sbm(const ModelSpec& spec);
ProbabilityMatrix gen_dcbm(const ModelSpec& spec);
ProbabilityMatrix gen_rdpg(const ModelSpec& spec);
ProbabilityMatrix gen_distance(const ModelSpec& spec);

/// Dispatch on spec.kind.
ProbabilityMatrix generate(const ModelSpec& spec);

struct ScaleResult {
    ProbabilityMatrix matrix;
    double factor = 1.0;
    bool saturated = false;            // some entries were clipped at 1
    double clipped_mass_fraction = 0;  // share of probability mass lost to clipping
};

/// Rescale so the expected average degree sum_{i!=j} P_ij / N hits the target,
/// clamping to [0,1] afterwards.
ScaleResult scale_to_degree(const ProbabilityMatrix& p, double target_degree);

/// One Bernoulli draw of the upper triangle, mirrored; zero diagonal.
AdjacencyMatrix sample_adjacency(const ProbabilityMatrix& p, std::uint64_t seed);

/// Independent stream seed for (master, index) pairs; splitmix64-based.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

}  // namespace egonet
