#ifndef QGT_REPLICATOR_HPP
#define QGT_REPLICATOR_HPP

#include <utility>
#include <vector>

#include "qgt/common.hpp"

namespace qgt {

/// Point on the probability simplex: the relative frequency of each strategy
/// in a population. Entries in [0,1], summing to 1 within 1e-10.
class FrequencyVector {
public:
    explicit FrequencyVector(RVector x);

    static FrequencyVector vertex(int dim, int index);
    static FrequencyVector uniform(int dim);

    /// Applies the integrator boundary policy: components in (-1e-9, 0) clamp
    /// to 0, then the vector is divided by its sum. Larger negatives or a sum
    /// drifting from 1 by more than `max_drift` are rejected.
    static FrequencyVector renormalized(RVector x, double max_drift = 1e-6);

    int dim() const { return static_cast<int>(x_.size()); }
    const RVector& values() const { return x_; }
    double operator[](int i) const { return x_[i]; }

private:
    FrequencyVector() = default;
    RVector x_;
};

/// f_i = (A x)_i.
RVector fitness(const RMatrix& payoff, const FrequencyVector& x);

/// x^T A x.
double mean_fitness(const RMatrix& payoff, const FrequencyVector& x);

/// dx_i/dt = [(Ax)_i - x^T A x] x_i. Components sum to zero (simplex tangent).
RVector replicator_rhs(const RMatrix& payoff, const FrequencyVector& x);

/// Two-population fields: dx_i/dt = [(Ay)_i - x^T A y] x_i and
/// dy_j/dt = [(Bx)_j - y^T B x] y_j, with A n x m and B m x n.
std::pair<RVector, RVector> asymmetric_rhs(const RMatrix& a, const RMatrix& b,
                                           const FrequencyVector& x, const FrequencyVector& y);

struct ReplicatorTrajectory {
    std::vector<double> times;
    std::vector<RVector> states;
    std::vector<double> entropy;  // Shannon entropy of the state, nats
};

/// Fixed-step RK4 integration of the replicator field. Every stored state is
/// renormalized onto the simplex; drift beyond 1e-6 or a component below
/// -1e-9 aborts with IntegrationError naming the step.
ReplicatorTrajectory integrate(const RMatrix& payoff, const FrequencyVector& x0, double t_end,
                               double dt);

/// Matrix lift of a simplex point together with the commutator generator of
/// its flow: X_ij = sqrt(x_i x_j), Q = diag((Ax)_i / 2), Lambda = [Q, X].
/// X is symmetric idempotent with unit trace; Lambda is antisymmetric.
struct LaxDecomposition {
    RMatrix x_mat;
    RMatrix q;
    RMatrix lambda;
};

LaxDecomposition lax_decomposition(const RMatrix& payoff, const FrequencyVector& x);

/// dX/dt = [Lambda, X]. Symmetric with zero trace; its diagonal equals
/// replicator_rhs componentwise.
RMatrix lax_rhs(const RMatrix& payoff, const FrequencyVector& x);

/// Shannon entropy -sum x_i ln x_i in nats, with 0 ln 0 = 0.
double shannon_entropy(const RVector& x);

/// Marginal, joint, conditional and mutual entropies of a joint distribution
/// over two strategy spaces. All values in nats.
struct GameEntropies {
    double h_a;
    double h_b;
    double h_joint;
    double h_a_given_b;
    double h_b_given_a;
    double mutual;
};

GameEntropies game_entropy_suite(const RMatrix& joint);

/// Kullback-Leibler divergence in bits (base 2). Returns +infinity when the
/// support of x is not contained in the support of y.
double relative_entropy(const FrequencyVector& x, const FrequencyVector& y);

/// dH/dt of the Shannon entropy along the replicator flow, by the chain rule
/// -sum (ln x_i + 1) dx_i/dt. Requires a strictly interior point.
double shannon_entropy_rate(const RMatrix& payoff, const FrequencyVector& x);

}  // namespace qgt

#endif
