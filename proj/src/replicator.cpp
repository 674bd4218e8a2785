#include "qgt/replicator.hpp"

#include <cmath>

namespace qgt {

namespace {

constexpr double kSimplexTol = 1e-10;
constexpr double kClampFloor = -1e-9;

void require_payoff(const RMatrix& a, int dim, const char* who) {
    if (a.rows() != a.cols() || a.rows() != dim)
        throw std::invalid_argument(std::string(who) + ": payoff matrix does not match state");
    if (!a.allFinite()) throw std::invalid_argument(std::string(who) + ": non-finite payoffs");
}

}  // namespace

FrequencyVector::FrequencyVector(RVector x) : x_(std::move(x)) {
    if (x_.size() < 1) throw std::invalid_argument("FrequencyVector: empty vector");
    double sum = 0.0;
    for (Eigen::Index i = 0; i < x_.size(); ++i) {
        if (!std::isfinite(x_[i]) || x_[i] < 0.0 || x_[i] > 1.0 + kSimplexTol)
            throw std::invalid_argument("FrequencyVector: component outside [0, 1]");
        sum += x_[i];
    }
    if (std::abs(sum - 1.0) > kSimplexTol)
        throw std::invalid_argument("FrequencyVector: components sum to " + std::to_string(sum));
}

FrequencyVector FrequencyVector::vertex(int dim, int index) {
    if (dim < 1 || index < 0 || index >= dim)
        throw std::invalid_argument("FrequencyVector::vertex: index out of range");
    RVector x = RVector::Zero(dim);
    x[index] = 1.0;
    return FrequencyVector(std::move(x));
}

FrequencyVector FrequencyVector::uniform(int dim) {
    if (dim < 1) throw std::invalid_argument("FrequencyVector::uniform: dim must be >= 1");
    return FrequencyVector(RVector::Constant(dim, 1.0 / dim));
}

FrequencyVector FrequencyVector::renormalized(RVector x, double max_drift) {
    double sum = 0.0;
    for (Eigen::Index i = 0; i < x.size(); ++i) {
        if (!std::isfinite(x[i])) throw std::invalid_argument("renormalized: non-finite component");
        if (x[i] < 0.0) {
            if (x[i] < kClampFloor)
                throw std::invalid_argument("renormalized: component " + std::to_string(x[i]) +
                                            " below clamp floor");
            x[i] = 0.0;
        }
        sum += x[i];
    }
    if (std::abs(sum - 1.0) > max_drift)
        throw std::invalid_argument("renormalized: simplex drift " + std::to_string(sum - 1.0));
    FrequencyVector out;
    out.x_ = x / sum;
    return out;
}

RVector fitness(const RMatrix& payoff, const FrequencyVector& x) {
    require_payoff(payoff, x.dim(), "fitness");
    return payoff * x.values();
}

double mean_fitness(const RMatrix& payoff, const FrequencyVector& x) {
    require_payoff(payoff, x.dim(), "mean_fitness");
    return x.values().dot(payoff * x.values());
}

RVector replicator_rhs(const RMatrix& payoff, const FrequencyVector& x) {
    require_payoff(payoff, x.dim(), "replicator_rhs");
    const RVector f = payoff * x.values();
    const double avg = x.values().dot(f);
    return (f.array() - avg) * x.values().array();
}

std::pair<RVector, RVector> asymmetric_rhs(const RMatrix& a, const RMatrix& b,
                                           const FrequencyVector& x, const FrequencyVector& y) {
    if (a.rows() != x.dim() || a.cols() != y.dim() || b.rows() != y.dim() || b.cols() != x.dim())
        throw std::invalid_argument("asymmetric_rhs: payoff dimensions do not match populations");
    if (!a.allFinite() || !b.allFinite())
        throw std::invalid_argument("asymmetric_rhs: non-finite payoffs");

    const RVector fx = a * y.values();
    const RVector fy = b * x.values();
    const double ax = x.values().dot(fx);
    const double ay = y.values().dot(fy);
    RVector dx = (fx.array() - ax) * x.values().array();
    RVector dy = (fy.array() - ay) * y.values().array();
    return {std::move(dx), std::move(dy)};
}

ReplicatorTrajectory integrate(const RMatrix& payoff, const FrequencyVector& x0, double t_end,
                               double dt) {
    require_payoff(payoff, x0.dim(), "integrate");
    if (dt <= 0.0) throw std::invalid_argument("integrate: dt must be positive");
    if (t_end < 0.0) throw std::invalid_argument("integrate: t_end must be non-negative");

    auto field = [&payoff](const RVector& x) -> RVector {
        const RVector f = payoff * x;
        const double avg = x.dot(f);
        return (f.array() - avg) * x.array();
    };

    const auto n_steps = static_cast<std::size_t>(std::llround(t_end / dt));
    ReplicatorTrajectory traj;
    traj.times.reserve(n_steps + 1);
    traj.states.reserve(n_steps + 1);
    traj.entropy.reserve(n_steps + 1);

    RVector x = x0.values();
    traj.times.push_back(0.0);
    traj.states.push_back(x);
    traj.entropy.push_back(shannon_entropy(x));

    for (std::size_t step = 1; step <= n_steps; ++step) {
        const RVector k1 = field(x);
        const RVector k2 = field(x + 0.5 * dt * k1);
        const RVector k3 = field(x + 0.5 * dt * k2);
        const RVector k4 = field(x + dt * k3);
        RVector next = x + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);

        try {
            x = FrequencyVector::renormalized(std::move(next)).values();
        } catch (const std::invalid_argument& e) {
            throw IntegrationError(step, e.what());
        }

        traj.times.push_back(static_cast<double>(step) * dt);
        traj.states.push_back(x);
        traj.entropy.push_back(shannon_entropy(x));
    }
    return traj;
}

LaxDecomposition lax_decomposition(const RMatrix& payoff, const FrequencyVector& x) {
    require_payoff(payoff, x.dim(), "lax_decomposition");
    const int n = x.dim();

    RVector sq(n);
    for (int i = 0; i < n; ++i) sq[i] = std::sqrt(x[i]);

    LaxDecomposition d;
    d.x_mat = sq * sq.transpose();
    d.q = RMatrix::Zero(n, n);
    const RVector f = payoff * x.values();
    for (int i = 0; i < n; ++i) d.q(i, i) = 0.5 * f[i];
    d.lambda = commutator(d.q, d.x_mat);
    return d;
}

RMatrix lax_rhs(const RMatrix& payoff, const FrequencyVector& x) {
    const LaxDecomposition d = lax_decomposition(payoff, x);
    return commutator(d.lambda, d.x_mat);
}

double shannon_entropy(const RVector& x) {
    double h = 0.0;
    for (Eigen::Index i = 0; i < x.size(); ++i)
        if (x[i] > 0.0) h -= x[i] * std::log(x[i]);
    return h;
}

GameEntropies game_entropy_suite(const RMatrix& joint) {
    if (joint.rows() < 1 || joint.cols() < 1)
        throw std::invalid_argument("game_entropy_suite: empty joint distribution");
    double sum = 0.0;
    for (Eigen::Index i = 0; i < joint.rows(); ++i) {
        for (Eigen::Index j = 0; j < joint.cols(); ++j) {
            if (!std::isfinite(joint(i, j)) || joint(i, j) < 0.0)
                throw std::invalid_argument("game_entropy_suite: invalid joint probability");
            sum += joint(i, j);
        }
    }
    if (std::abs(sum - 1.0) > 1e-9)
        throw std::invalid_argument("game_entropy_suite: joint distribution sums to " +
                                    std::to_string(sum));

    const RVector pa = joint.rowwise().sum();
    const RVector pb = joint.colwise().sum();

    double h_joint = 0.0;
    for (Eigen::Index i = 0; i < joint.rows(); ++i)
        for (Eigen::Index j = 0; j < joint.cols(); ++j)
            if (joint(i, j) > 0.0) h_joint -= joint(i, j) * std::log(joint(i, j));

    GameEntropies e{};
    e.h_a = shannon_entropy(pa);
    e.h_b = shannon_entropy(pb);
    e.h_joint = h_joint;
    e.h_a_given_b = h_joint - e.h_b;
    e.h_b_given_a = h_joint - e.h_a;
    e.mutual = e.h_a + e.h_b - h_joint;
    return e;
}

double relative_entropy(const FrequencyVector& x, const FrequencyVector& y) {
    if (x.dim() != y.dim()) throw std::invalid_argument("relative_entropy: dimension mismatch");
    double d = 0.0;
    for (int i = 0; i < x.dim(); ++i) {
        if (x[i] <= 0.0) continue;
        if (y[i] <= 0.0) return std::numeric_limits<double>::infinity();
        d += x[i] * std::log2(x[i] / y[i]);
    }
    return d;
}

double shannon_entropy_rate(const RMatrix& payoff, const FrequencyVector& x) {
    for (int i = 0; i < x.dim(); ++i)
        if (x[i] <= 0.0)
            throw std::invalid_argument("shannon_entropy_rate: state must be strictly interior");
    const RVector rhs = replicator_rhs(payoff, x);
    double rate = 0.0;
    for (int i = 0; i < x.dim(); ++i) rate -= (std::log(x[i]) + 1.0) * rhs[i];
    return rate;
}

}  // namespace qgt
