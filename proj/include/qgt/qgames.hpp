#ifndef QGT_QGAMES_HPP
#define QGT_QGAMES_HPP

#include <array>
#include <utility>
#include <vector>

#include "qgt/quantum.hpp"

namespace qgt {

// ---------------------------------------------------------------------------
// Penny flip
// ---------------------------------------------------------------------------

/// One round of the sequential coin game: the quantum player conjugates with
/// `q_first`, the classical player flips with probability `p_flip` (identity
/// otherwise), and the quantum player conjugates with `q_second`.
DensityMatrix pennyflip_round(const DensityMatrix& coin, const CMatrix& q_first,
                              const CMatrix& q_second, double p_flip);

/// Probability of finding the coin head up (basis state 0).
double head_probability(const DensityMatrix& coin);

// ---------------------------------------------------------------------------
// Entangling-gate protocol for 2x2 games (EWL)
// ---------------------------------------------------------------------------

/// Protocol parameters: the four payoff constants of the underlying bimatrix
/// game and the entanglement angle gamma in [0, pi/2].
struct EwlSpec {
    double reward = 3.0;
    double sucker = 0.0;
    double temptation = 5.0;
    double punishment = 1.0;
    double gamma = 0.0;
};

/// Two-parameter local move: theta in [0, pi], phi in [0, pi/2].
struct EwlStrategy {
    double theta = 0.0;
    double phi = 0.0;
};

inline EwlStrategy ewl_cooperate() { return {0.0, 0.0}; }
inline EwlStrategy ewl_defect() { return {M_PI, 0.0}; }
inline EwlStrategy ewl_quantum() { return {0.0, M_PI / 2.0}; }

/// The 2x2 unitary of a strategy:
/// [[e^{i phi} cos(theta/2), sin(theta/2)], [-sin(theta/2), e^{-i phi} cos(theta/2)]].
CMatrix ewl_strategy_matrix(const EwlStrategy& s);

/// The entangling gate exp(i gamma D⊗D / 2) where D is the defect unitary.
/// Commutes with D⊗D, D⊗I and I⊗D at every gamma.
CMatrix ewl_entangling_gate(double gamma);

/// Final 2-qubit state J^dag (U_A ⊗ U_B) J |00>, basis ordering
/// (CC, CD, DC, DD) with player A's qubit first.
StateVector ewl_final_state(const EwlSpec& spec, const EwlStrategy& sa, const EwlStrategy& sb);

/// Payoffs from the projection probabilities of the final state. Player B's
/// payoff swaps the temptation and sucker weights.
std::pair<double, double> ewl_payoffs(const EwlSpec& spec, const EwlStrategy& sa,
                                      const EwlStrategy& sb);

struct EwlEquilibrium {
    EwlStrategy a;
    EwlStrategy b;
    double payoff_a;
    double payoff_b;
};

struct EwlScanResult {
    std::vector<EwlStrategy> strategies;  // deduplicated grid
    std::vector<EwlEquilibrium> equilibria;
};

/// Grid scan over (theta, phi) for both players; a profile is an equilibrium
/// cell when no unilateral grid deviation gains more than `tol`. Strategies
/// whose unitaries coincide (all phi at theta = pi map to the same matrix)
/// are deduplicated before scanning. `resolution` >= 32 points per parameter.
EwlScanResult ewl_nash_scan(const EwlSpec& spec, int resolution, double tol = 1e-6,
                            int threads = 1);

/// Population mean payoffs when a fraction `epsilon` of mutants meets an
/// incumbent majority: W(s) = (1-eps) P(s, incumbent) + eps P(s, mutant).
/// Returns {W(incumbent), W(mutant)}; requires 0 < epsilon < 1/2.
std::pair<double, double> ewl_invasion_fitness(const EwlSpec& spec, const EwlStrategy& mutant,
                                               const EwlStrategy& incumbent, double epsilon);

/// Bisection on phi for the sign change of W(mutant) - W(incumbent) with
/// incumbent D and mutant U(0, phi). The bracket must straddle the change.
double ewl_invasion_threshold(const EwlSpec& spec, double epsilon, double phi_lo = 0.1,
                              double phi_hi = 1.2, double phi_tol = 1e-10);

// ---------------------------------------------------------------------------
// Probabilistic-tactic protocol on a shared initial state (Marinatto-Weber)
// ---------------------------------------------------------------------------

/// Shared 2-qubit initial state plus diagonal payoff coefficients
/// (alpha, beta, gamma, delta) over outcomes (00, 01, 10, 11) per player.
struct MwSpec {
    StateVector initial;
    std::array<double, 4> payoff_a;
    std::array<double, 4> payoff_b;
};

/// Four-term convex mixture of local identity/bit-flip tactics applied to
/// |initial><initial|; player A keeps their qubit with probability p, B with q.
DensityMatrix mw_final_state(const MwSpec& spec, double p, double q);

/// Traces of the diagonal payoff operators against the final state.
std::pair<double, double> mw_payoffs(const MwSpec& spec, double p, double q);

struct MwEquilibrium {
    double p;
    double q;
    double payoff_a;
    double payoff_b;
};

/// Grid scan over (p, q) in [0,1]^2; equilibrium cells allow no unilateral
/// grid deviation gaining more than `tol`. `grid` >= 101 points per axis.
std::vector<MwEquilibrium> mw_nash_scan(const MwSpec& spec, int grid, double tol = 1e-9);

}  // namespace qgt

#endif
