#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "egonet/graph.hpp"

namespace egonet {

enum class Mechanism { mcar, mnar_positive, mnar_negative };

struct SamplingPlan {
    Mechanism mechanism = Mechanism::mcar;
    double rho = 0.5;
    std::array<double, 3> deltas = {1.0, 1.0, 1.0};
    std::array<double, 3> group_fractions = {0.33, 0.34, 0.33};
    std::uint64_t seed = 0;
};

/// Degree-group multipliers for the given mechanism: {1.5, 1, 0.5} for the
/// positive setting, {0.5, 1, 1.5} for the negative one, all-ones for mcar.
std::array<double, 3> default_deltas(Mechanism mechanism);

/// Exactly round(rho * n_total) distinct indices, uniform, ascending.
std::vector<int> sample_mcar(int n_total, double rho, std::uint64_t seed);

struct MnarSample {
    std::vector<int> indices;
    bool rate_capped = false;  // some group rate delta*rho exceeded 1
};

/// Degree-stratified sampling: nodes split into three groups by descending
/// degree (ties by ascending index), group g sampled at rate delta_g * rho.
MnarSample sample_mnar(const AdjacencyMatrix& adjacency, const SamplingPlan& plan);

/// Dispatch: mcar ignores the adjacency beyond its size.
std::vector<int> sample_observed(const AdjacencyMatrix& adjacency,
                                 const SamplingPlan& plan);

}  // namespace egonet
