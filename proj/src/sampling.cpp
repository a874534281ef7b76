#include "egonet/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

namespace egonet {

std::array<double, 3> default_deltas(Mechanism mechanism) {
    switch (mechanism) {
        case Mechanism::mnar_positive: return {1.5, 1.0, 0.5};
        case Mechanism::mnar_negative: return {0.5, 1.0, 1.5};
        case Mechanism::mcar: break;
    }
    return {1.0, 1.0, 1.0};
}

namespace {

// std::shuffle-free partial Fisher-Yates: first m entries of a uniform
// permutation of `pool`.
std::vector<int> draw_without_replacement(std::vector<int> pool, int m,
                                          std::mt19937_64& rng) {
    const int n = static_cast<int>(pool.size());
    for (int i = 0; i < m; ++i) {
        std::uniform_int_distribution<int> pick(i, n - 1);
        std::swap(pool[i], pool[pick(rng)]);
    }
    pool.resize(m);
    return pool;
}

int rounded(double x) { return static_cast<int>(std::llround(x)); }

}  // namespace

std::vector<int> sample_mcar(int n_total, double rho, std::uint64_t seed) {
    const int m = rounded(rho * n_total);
    if (m < 1 || m > n_total - 1) {
        throw std::invalid_argument("sample_mcar: round(rho*N) must be in [1, N-1]");
    }
    std::mt19937_64 rng(seed);
    std::vector<int> pool(n_total);
    std::iota(pool.begin(), pool.end(), 0);
    auto sample = draw_without_replacement(std::move(pool), m, rng);
    std::sort(sample.begin(), sample.end());
    return sample;
}

MnarSample sample_mnar(const AdjacencyMatrix& adjacency, const SamplingPlan& plan) {
    const int n = static_cast<int>(adjacency.n_nodes());
    const Vector deg = adjacency.degrees();

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        if (deg(a) != deg(b)) return deg(a) > deg(b);
        return a < b;
    });

    const int c1 = rounded(plan.group_fractions[0] * n);
    const int c2 = rounded(plan.group_fractions[1] * n);
    std::array<std::vector<int>, 3> groups = {
        std::vector<int>(order.begin(), order.begin() + c1),
        std::vector<int>(order.begin() + c1, order.begin() + c1 + c2),
        std::vector<int>(order.begin() + c1 + c2, order.end()),
    };

    std::mt19937_64 rng(plan.seed);
    MnarSample result;
    for (int g = 0; g < 3; ++g) {
        double rate = plan.deltas[g] * plan.rho;
        if (rate > 1.0) {
            rate = 1.0;
            result.rate_capped = true;
        }
        const int m = rounded(rate * static_cast<double>(groups[g].size()));
        auto picked = draw_without_replacement(groups[g], m, rng);
        result.indices.insert(result.indices.end(), picked.begin(), picked.end());
    }
    if (result.indices.empty()) {
        throw std::invalid_argument("sample_mnar: empty sample");
    }
    std::sort(result.indices.begin(), result.indices.end());
    return result;
}

std::vector<int> sample_observed(const AdjacencyMatrix& adjacency,
                                 const SamplingPlan& plan) {
    if (plan.mechanism == Mechanism::mcar) {
        return sample_mcar(static_cast<int>(adjacency.n_nodes()), plan.rho,
                           plan.seed);
    }
    return sample_mnar(adjacency, plan).indices;
}

}  // namespace egonet
