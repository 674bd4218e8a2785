#include "qgt/game.hpp"

#include <cmath>

namespace qgt {

namespace {

constexpr double kPayoffTol = 1e-9;

bool finite(const RMatrix& m) { return m.allFinite(); }

}  // namespace

MixedStrategy::MixedStrategy(RVector weights) : weights_(std::move(weights)) {
    if (weights_.size() < 1) throw std::invalid_argument("MixedStrategy: empty weight vector");
    double sum = 0.0;
    for (Eigen::Index i = 0; i < weights_.size(); ++i) {
        double w = weights_[i];
        if (!std::isfinite(w) || w < 0.0 || w > 1.0 + 1e-12)
            throw std::invalid_argument("MixedStrategy: weight outside [0, 1]");
        sum += w;
    }
    if (std::abs(sum - 1.0) > 1e-12)
        throw std::invalid_argument("MixedStrategy: weights sum to " + std::to_string(sum));
}

MixedStrategy MixedStrategy::pure(int dim, int index) {
    if (dim < 1 || index < 0 || index >= dim)
        throw std::invalid_argument("MixedStrategy::pure: index out of range");
    RVector w = RVector::Zero(dim);
    w[index] = 1.0;
    return MixedStrategy(std::move(w));
}

MixedStrategy MixedStrategy::uniform(int dim) {
    if (dim < 1) throw std::invalid_argument("MixedStrategy::uniform: dim must be >= 1");
    return MixedStrategy(RVector::Constant(dim, 1.0 / dim));
}

BimatrixGame::BimatrixGame(RMatrix a, RMatrix b, std::vector<std::string> labels)
    : a_(std::move(a)), b_(std::move(b)), labels_(std::move(labels)) {
    if (a_.rows() < 1 || a_.cols() < 1)
        throw std::invalid_argument("BimatrixGame: payoff matrix must be non-empty");
    if (b_.rows() != a_.cols() || b_.cols() != a_.rows())
        throw std::invalid_argument("BimatrixGame: B must be m x n when A is n x m");
    if (!finite(a_) || !finite(b_))
        throw std::invalid_argument("BimatrixGame: payoff entries must be finite");
    if (!labels_.empty() && labels_.size() != static_cast<std::size_t>(a_.rows()))
        throw std::invalid_argument("BimatrixGame: label count must match row strategies");
}

BimatrixGame BimatrixGame::symmetric(RMatrix a, std::vector<std::string> labels) {
    RMatrix b = a.transpose();
    return BimatrixGame(std::move(a), std::move(b), std::move(labels));
}

BimatrixGame BimatrixGame::prisoners_dilemma(double r, double s, double t, double p) {
    RMatrix a(2, 2);
    a << r, s, t, p;
    return symmetric(a, {"C", "D"});
}

bool BimatrixGame::is_symmetric(double tol) const {
    return a_.rows() == a_.cols() && max_abs(RMatrix(b_ - a_.transpose())) <= tol;
}

bool BimatrixGame::is_zero_sum(double tol) const {
    return max_abs(RMatrix(b_ + a_.transpose())) <= tol;
}

double expected_payoff(const BimatrixGame& game, const MixedStrategy& p, const MixedStrategy& q,
                       Player player) {
    if (p.dim() != game.rows() || q.dim() != game.cols())
        throw std::invalid_argument("expected_payoff: strategy dimensions do not match game");
    if (player == Player::A) return p.weights().dot(game.a() * q.weights());
    return q.weights().dot(game.b() * p.weights());
}

std::vector<std::pair<int, int>> pure_nash_equilibria(const BimatrixGame& game) {
    const RMatrix& a = game.a();
    const RMatrix& b = game.b();
    const int n = game.rows(), m = game.cols();

    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < m; ++j) {
            bool best_row = true;
            for (int k = 0; k < n && best_row; ++k)
                if (a(k, j) > a(i, j) + kPayoffTol) best_row = false;
            if (!best_row) continue;
            bool best_col = true;
            for (int l = 0; l < m && best_col; ++l)
                if (b(l, i) > b(j, i) + kPayoffTol) best_col = false;
            if (best_col) out.emplace_back(i, j);
        }
    }
    return out;
}

std::vector<std::pair<int, int>> pareto_optimal_outcomes(const BimatrixGame& game) {
    const RMatrix& a = game.a();
    const RMatrix& b = game.b();
    const int n = game.rows(), m = game.cols();

    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < m; ++j) {
            bool dominated = false;
            for (int k = 0; k < n && !dominated; ++k) {
                for (int l = 0; l < m && !dominated; ++l) {
                    if (k == i && l == j) continue;
                    bool weakly = a(k, l) >= a(i, j) - kPayoffTol && b(l, k) >= b(j, i) - kPayoffTol;
                    bool strictly = a(k, l) > a(i, j) + kPayoffTol || b(l, k) > b(j, i) + kPayoffTol;
                    if (weakly && strictly) dominated = true;
                }
            }
            if (!dominated) out.emplace_back(i, j);
        }
    }
    return out;
}

EssResult is_ess(const BimatrixGame& game, const MixedStrategy& p,
                 const std::vector<MixedStrategy>& candidates) {
    if (!game.is_symmetric()) throw std::invalid_argument("is_ess: game must be symmetric");
    if (p.dim() != game.rows()) throw std::invalid_argument("is_ess: strategy dimension mismatch");

    // E(x, y) = x^T A y: row-player payoff of x against y in the symmetric game.
    auto payoff = [&](const MixedStrategy& x, const MixedStrategy& y) {
        return x.weights().dot(game.a() * y.weights());
    };

    const double e_pp = payoff(p, p);
    for (const MixedStrategy& r : candidates) {
        if (r.dim() != p.dim()) throw std::invalid_argument("is_ess: candidate dimension mismatch");
        if (max_abs(RMatrix(r.weights() - p.weights())) < 1e-12) continue;

        const double e_rp = payoff(r, p);
        if (e_rp > e_pp + kPayoffTol)
            return {false, r, "invader earns strictly more against the incumbent"};
        if (std::abs(e_rp - e_pp) <= kPayoffTol) {
            // tied against the incumbent: stability hinges on play against the invader
            if (payoff(p, r) <= payoff(r, r) + kPayoffTol)
                return {false, r, "neutral invader is not beaten in self-play"};
        }
    }
    return {true, std::nullopt, ""};
}

MinimaxSolution minimax_value(const BimatrixGame& game) {
    if (game.rows() != 2 || game.cols() != 2)
        throw std::invalid_argument("minimax_value: only 2x2 games are supported");
    if (!game.is_zero_sum(1e-9)) throw std::invalid_argument("minimax_value: game is not zero-sum");

    const RMatrix& a = game.a();

    // Pure saddle: entry maximal in its column (row player) and minimal in its row.
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            bool col_max = a(i, j) >= a(1 - i, j) - kPayoffTol;
            bool row_min = a(i, j) <= a(i, 1 - j) + kPayoffTol;
            if (col_max && row_min) {
                return {a(i, j), MixedStrategy::pure(2, i), MixedStrategy::pure(2, j), true};
            }
        }
    }

    const double denom = a(0, 0) - a(0, 1) - a(1, 0) + a(1, 1);
    // no saddle implies strictly alternating preferences, so denom != 0
    const double p0 = (a(1, 1) - a(1, 0)) / denom;
    const double q0 = (a(1, 1) - a(0, 1)) / denom;
    const double value = (a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0)) / denom;

    RVector pr(2), qc(2);
    pr << p0, 1.0 - p0;
    qc << q0, 1.0 - q0;
    return {value, MixedStrategy(pr), MixedStrategy(qc), false};
}

}  // namespace qgt
