#pragma once

#include <chrono>
#include <cstdint>
#include <utility>
#include <vector>

#include "egonet/graph.hpp"

namespace egonet {

/// Threshold-sweep ROC curve plus its exact (rank-statistic) AUC.
struct RocCurve {
    std::vector<std::pair<double, double>> points;  // (fpr, tpr)
    double auc = 0.5;
};

/// ||p22_hat - p22_true||_F^2 / m^2 over all m^2 entries, diagonal included.
double mse_block(const Matrix& p22_hat, const Matrix& p22_true);

/// ROC/AUC from flat score/label vectors. AUC is the Mann-Whitney statistic
/// with ties counted 0.5; the curve is swept over distinct score values.
RocCurve roc_from_samples(const std::vector<double>& scores,
                          const std::vector<std::uint8_t>& truth);

/// Link-prediction AUC on the strict upper triangle of a square block.
RocCurve auc_link_prediction(const Matrix& scores, const Matrix& truth);

/// Monotonic-clock timing of a single call; returns (result, milliseconds).
template <typename F>
auto time_fit(F&& fn) {
    const auto t0 = std::chrono::steady_clock::now();
    auto result = std::forward<F>(fn)();
    const auto t1 = std::chrono::steady_clock::now();
    const double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    return std::pair{std::move(result), ms};
}

}  // namespace egonet
