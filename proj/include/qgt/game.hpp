#ifndef QGT_GAME_HPP
#define QGT_GAME_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qgt/common.hpp"

namespace qgt {

enum class Player { A, B };

/// Probability distribution over a finite strategy set. Construction enforces
/// weights in [0,1] summing to 1 within 1e-12.
class MixedStrategy {
public:
    explicit MixedStrategy(RVector weights);

    static MixedStrategy pure(int dim, int index);
    static MixedStrategy uniform(int dim);

    int dim() const { return static_cast<int>(weights_.size()); }
    const RVector& weights() const { return weights_; }
    double operator[](int i) const { return weights_[i]; }

private:
    RVector weights_;
};

/// Finite two-player game. `a` is n x m (row player A), `b` is m x n
/// (column player B, rows indexed by B's own strategies).
class BimatrixGame {
public:
    BimatrixGame(RMatrix a, RMatrix b, std::vector<std::string> labels = {});

    /// Symmetric shorthand: B = A^T.
    static BimatrixGame symmetric(RMatrix a, std::vector<std::string> labels = {});

    /// Prisoner's dilemma with payoffs reward/sucker/temptation/punishment.
    static BimatrixGame prisoners_dilemma(double r = 3, double s = 0, double t = 5, double p = 1);

    int rows() const { return static_cast<int>(a_.rows()); }
    int cols() const { return static_cast<int>(a_.cols()); }
    const RMatrix& a() const { return a_; }
    const RMatrix& b() const { return b_; }
    const std::vector<std::string>& labels() const { return labels_; }

    bool is_symmetric(double tol = 1e-12) const;
    bool is_zero_sum(double tol = 1e-12) const;

private:
    RMatrix a_;
    RMatrix b_;
    std::vector<std::string> labels_;
};

/// p^T A q for player A, q^T B p for player B.
double expected_payoff(const BimatrixGame& game, const MixedStrategy& p, const MixedStrategy& q,
                       Player player);

/// All pure strategy pairs (i, j) that are mutual best replies; ties included
/// (comparison tolerance 1e-9).
std::vector<std::pair<int, int>> pure_nash_equilibria(const BimatrixGame& game);

/// Pure outcome cells not weakly Pareto-dominated (domination requires at
/// least one strict improvement). Never empty for a finite game.
std::vector<std::pair<int, int>> pareto_optimal_outcomes(const BimatrixGame& game);

/// Outcome of an evolutionary-stability test: when `stable` is false,
/// `violator` names a candidate that invades and `reason` says how.
struct EssResult {
    bool stable = false;
    std::optional<MixedStrategy> violator;
    std::string reason;
};

/// Checks the two stability conditions of a candidate p against every r in
/// `candidates` (r == p skipped): strictly better against itself, or equal
/// against itself (tolerance 1e-9) and strictly better against the invader.
/// The candidate set must include at least all pure strategies; for 2x2
/// games pure candidates are decisive, for larger games the verdict is
/// relative to the supplied set.
EssResult is_ess(const BimatrixGame& game, const MixedStrategy& p,
                 const std::vector<MixedStrategy>& candidates);

struct MinimaxSolution {
    double value = 0.0;
    MixedStrategy row;
    MixedStrategy column;
    bool pure_saddle = false;
};

/// Value and optimal strategies of a 2x2 zero-sum game (b = -a^T). Returns a
/// pure saddle point when one exists, otherwise the closed-form indifference mix.
MinimaxSolution minimax_value(const BimatrixGame& game);

}  // namespace qgt

#endif
