#include "egonet/evaluation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace egonet {

double mse_block(const Matrix& p22_hat, const Matrix& p22_true) {
    if (p22_hat.rows() != p22_true.rows() || p22_hat.cols() != p22_true.cols()) {
        throw std::invalid_argument("mse_block: shape mismatch");
    }
    const double m = static_cast<double>(p22_hat.rows());
    return (p22_hat - p22_true).squaredNorm() / (m * m);
}

RocCurve roc_from_samples(const std::vector<double>& scores,
                          const std::vector<std::uint8_t>& truth) {
    if (scores.size() != truth.size()) {
        throw std::invalid_argument("roc_from_samples: length mismatch");
    }
    const std::size_t total = scores.size();
    std::size_t n_pos = 0;
    for (auto t : truth) n_pos += (t != 0);
    const std::size_t n_neg = total - n_pos;
    if (n_pos == 0 || n_neg == 0) {
        throw std::invalid_argument("roc_from_samples: need both classes present");
    }

    std::vector<std::size_t> order(total);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return scores[a] > scores[b];
    });

    RocCurve curve;
    curve.points.emplace_back(0.0, 0.0);
    double auc_num = 0.0;  // concordant + 0.5 * tied, accumulated per tie group
    std::size_t tp = 0, fp = 0;
    std::size_t i = 0;
    while (i < total) {
        std::size_t j = i;
        std::size_t group_pos = 0, group_neg = 0;
        while (j < total && scores[order[j]] == scores[order[i]]) {
            truth[order[j]] ? ++group_pos : ++group_neg;
            ++j;
        }
        // negatives strictly below this group, plus ties within it
        auc_num += static_cast<double>(group_pos) *
                   (static_cast<double>(n_neg - fp - group_neg) +
                    0.5 * static_cast<double>(group_neg));
        tp += group_pos;
        fp += group_neg;
        curve.points.emplace_back(static_cast<double>(fp) / n_neg,
                                  static_cast<double>(tp) / n_pos);
        i = j;
    }
    curve.auc = auc_num / (static_cast<double>(n_pos) * static_cast<double>(n_neg));
    return curve;
}

RocCurve auc_link_prediction(const Matrix& scores, const Matrix& truth) {
    if (scores.rows() != truth.rows() || scores.cols() != truth.cols() ||
        scores.rows() != scores.cols()) {
        throw std::invalid_argument("auc_link_prediction: need equal square shapes");
    }
    const Eigen::Index m = scores.rows();
    std::vector<double> s;
    std::vector<std::uint8_t> t;
    s.reserve(m * (m - 1) / 2);
    t.reserve(m * (m - 1) / 2);
    for (Eigen::Index i = 0; i < m; ++i) {
        for (Eigen::Index j = i + 1; j < m; ++j) {
            s.push_back(scores(i, j));
            t.push_back(truth(i, j) != 0.0 ? 1 : 0);
        }
    }
    return roc_from_samples(s, t);
}

}  // namespace egonet
