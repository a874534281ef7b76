#include <doctest.h>

#include <algorithm>
#include <random>

#include "egonet/evaluation.hpp"

using namespace egonet;

namespace {

Matrix random_matrix(int n, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) m(i, j) = unif(rng);
    }
    return m;
}

// O(pos * neg) pairwise Mann-Whitney oracle.
double pairwise_auc(const std::vector<double>& scores,
                    const std::vector<std::uint8_t>& truth) {
    double num = 0;
    long long pairs = 0;
    for (std::size_t i = 0; i < scores.size(); ++i) {
        if (!truth[i]) continue;
        for (std::size_t j = 0; j < scores.size(); ++j) {
            if (truth[j]) continue;
            ++pairs;
            if (scores[i] > scores[j]) num += 1.0;
            else if (scores[i] == scores[j]) num += 0.5;
        }
    }
    return num / static_cast<double>(pairs);
}

}  // namespace

TEST_CASE("mse of identical matrices is zero") {
    std::mt19937_64 rng(3);
    const Matrix m = random_matrix(5, rng);
    CHECK(mse_block(m, m) == 0.0);
}

TEST_CASE("constant offset gives its squared value") {
    std::mt19937_64 rng(5);
    const Matrix m = random_matrix(6, rng);
    const Matrix shifted = m.array() + 0.1;
    CHECK(mse_block(shifted, m) == doctest::Approx(0.01).epsilon(1e-10));
}

TEST_CASE("mse matches a scalar loop oracle") {
    std::mt19937_64 rng(7);
    const Matrix a = random_matrix(5, rng);
    const Matrix b = random_matrix(5, rng);
    double acc = 0;
    for (int i = 0; i < 5; ++i) {
        for (int j = 0; j < 5; ++j) {
            acc += (a(i, j) - b(i, j)) * (a(i, j) - b(i, j));
        }
    }
    CHECK(mse_block(a, b) == doctest::Approx(acc / 25.0).epsilon(1e-14));
}

TEST_CASE("mse rejects mismatched shapes") {
    CHECK_THROWS_AS(mse_block(Matrix::Zero(3, 3), Matrix::Zero(4, 4)),
                    std::invalid_argument);
}

TEST_CASE("mse is permutation equivariant") {
    std::mt19937_64 rng(9);
    const Matrix a = random_matrix(6, rng);
    const Matrix b = random_matrix(6, rng);
    Eigen::PermutationMatrix<Eigen::Dynamic> perm(6);
    perm.setIdentity();
    std::shuffle(perm.indices().data(), perm.indices().data() + 6, rng);
    const Matrix ap = perm * a * perm.transpose();
    const Matrix bp = perm * b * perm.transpose();
    CHECK(mse_block(ap, bp) == doctest::Approx(mse_block(a, b)).epsilon(1e-14));
}

TEST_CASE("a perfect predictor has auc 1") {
    Matrix truth = Matrix::Zero(4, 4);
    truth(0, 1) = truth(1, 0) = 1.0;
    truth(2, 3) = truth(3, 2) = 1.0;
    CHECK(auc_link_prediction(truth, truth).auc == 1.0);
}

TEST_CASE("constant scores give auc one half") {
    Matrix truth = Matrix::Zero(4, 4);
    truth(0, 1) = truth(1, 0) = 1.0;
    const Matrix scores = Matrix::Constant(4, 4, 0.7);
    CHECK(auc_link_prediction(scores, truth).auc == 0.5);
}

TEST_CASE("auc equals the pairwise oracle on random instances") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    for (int trial = 0; trial < 30; ++trial) {
        const int m = 50 + static_cast<int>(rng() % 100);
        std::vector<double> scores(m);
        std::vector<std::uint8_t> truth(m);
        bool pos = false, neg = false;
        for (int i = 0; i < m; ++i) {
            // quantized scores so ties actually occur
            scores[i] = std::floor(unif(rng) * 8) / 8.0;
            truth[i] = unif(rng) < 0.3 ? 1 : 0;
            (truth[i] ? pos : neg) = true;
        }
        if (!pos || !neg) continue;
        const auto curve = roc_from_samples(scores, truth);
        CHECK(curve.auc == doctest::Approx(pairwise_auc(scores, truth)).epsilon(1e-14));
    }
}

TEST_CASE("degenerate truth is rejected") {
    const Matrix scores = Matrix::Constant(3, 3, 0.5);
    CHECK_THROWS_AS(auc_link_prediction(scores, Matrix::Zero(3, 3)),
                    std::invalid_argument);
    Matrix all_pos = Matrix::Ones(3, 3);
    CHECK_THROWS_AS(auc_link_prediction(scores, all_pos), std::invalid_argument);
}

TEST_CASE("roc curves are monotone from (0,0) to (1,1)") {
    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<double> scores;
        std::vector<std::uint8_t> truth;
        for (int i = 0; i < 60; ++i) {
            scores.push_back(std::floor(unif(rng) * 10) / 10.0);
            truth.push_back(unif(rng) < 0.4 ? 1 : 0);
        }
        truth[0] = 1;
        truth[1] = 0;
        const auto curve = roc_from_samples(scores, truth);
        CHECK(curve.points.front() == std::pair{0.0, 0.0});
        CHECK(curve.points.back() == std::pair{1.0, 1.0});
        double trapezoid = 0;
        for (std::size_t i = 1; i < curve.points.size(); ++i) {
            const auto [x0, y0] = curve.points[i - 1];
            const auto [x1, y1] = curve.points[i];
            CHECK(x1 >= x0);
            CHECK(y1 >= y0);
            trapezoid += (x1 - x0) * (y0 + y1) / 2.0;
        }
        CHECK(curve.auc == doctest::Approx(trapezoid).epsilon(1e-12));
    }
}

TEST_CASE("auc is invariant under strictly increasing transforms") {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    std::vector<double> scores(80);
    std::vector<std::uint8_t> truth(80);
    for (int i = 0; i < 80; ++i) {
        scores[i] = std::floor(unif(rng) * 6) / 6.0;
        truth[i] = i % 3 == 0 ? 1 : 0;
    }
    std::vector<double> warped(80);
    for (int i = 0; i < 80; ++i) warped[i] = std::exp(3.0 * scores[i]) - 1.0;
    CHECK(roc_from_samples(scores, truth).auc ==
          roc_from_samples(warped, truth).auc);
}

TEST_CASE("time_fit reports a small overhead floor and the result") {
    std::vector<double> samples;
    for (int i = 0; i < 11; ++i) {
        auto [value, ms] = time_fit([] { return 42; });
        CHECK(value == 42);
        samples.push_back(ms);
    }
    std::sort(samples.begin(), samples.end());
    CHECK(samples[5] < 1.0);  // median under a millisecond
}
