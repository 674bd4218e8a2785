#include "qgt/quantum.hpp"

#include <cmath>

namespace qgt {

namespace {

constexpr double kValidityTol = 1e-10;
constexpr double kSupportEps = 1e-12;

// Eigenvalue of a density matrix, clamped onto [0,1] to absorb round-off.
double clamp_probability(double lambda) {
    if (lambda < 0.0 && lambda > -kValidityTol) return 0.0;
    if (lambda > 1.0 && lambda < 1.0 + kValidityTol) return 1.0;
    return lambda;
}

}  // namespace

DensityMatrix::DensityMatrix(CMatrix rho) : rho_(std::move(rho)) {
    if (rho_.rows() < 1 || rho_.rows() != rho_.cols())
        throw std::invalid_argument("DensityMatrix: operator must be square and non-empty");
    if (!is_finite(rho_)) throw std::invalid_argument("DensityMatrix: non-finite entries");
    if (!is_hermitian(rho_, kValidityTol))
        throw std::invalid_argument("DensityMatrix: operator is not Hermitian within 1e-10");
    rho_ = 0.5 * (rho_ + rho_.adjoint().eval());

    const Complex tr = rho_.trace();
    if (std::abs(tr - Complex(1.0, 0.0)) > kValidityTol)
        throw std::invalid_argument("DensityMatrix: trace differs from 1 by more than 1e-10");

    const RVector evals = hermitian_eigenvalues(rho_);
    if (evals.minCoeff() < -kValidityTol)
        throw std::invalid_argument("DensityMatrix: operator is not positive semidefinite");
    if (purity() > 1.0 + kValidityTol)
        throw std::invalid_argument("DensityMatrix: purity exceeds 1");
}

DensityMatrix DensityMatrix::pure(const StateVector& psi) {
    return DensityMatrix(psi.amps() * psi.amps().adjoint());
}

DensityMatrix DensityMatrix::maximally_mixed(int dim) {
    if (dim < 1) throw std::invalid_argument("DensityMatrix: dim must be >= 1");
    return DensityMatrix(CMatrix::Identity(dim, dim) / static_cast<double>(dim));
}

double DensityMatrix::purity() const { return (rho_ * rho_).trace().real(); }

DensityMatrix density_from_ensemble(const std::vector<PureEnsembleMember>& members) {
    if (members.empty()) throw std::invalid_argument("density_from_ensemble: empty ensemble");
    const int dim = members.front().state.dim();
    double weight_sum = 0.0;
    for (const auto& m : members) {
        if (m.state.dim() != dim)
            throw std::invalid_argument("density_from_ensemble: mixed state dimensions");
        if (!std::isfinite(m.weight) || m.weight < 0.0 || m.weight > 1.0 + 1e-12)
            throw std::invalid_argument("density_from_ensemble: weight outside [0, 1]");
        weight_sum += m.weight;
    }
    if (std::abs(weight_sum - 1.0) > 1e-12)
        throw std::invalid_argument("density_from_ensemble: weights sum to " +
                                    std::to_string(weight_sum));

    CMatrix rho = CMatrix::Zero(dim, dim);
    for (const auto& m : members) rho += m.weight * (m.state.amps() * m.state.amps().adjoint());
    return DensityMatrix(std::move(rho));
}

double ensemble_average(const DensityMatrix& rho, const CMatrix& observable) {
    if (observable.rows() != rho.dim() || observable.cols() != rho.dim())
        throw std::invalid_argument("ensemble_average: observable dimension mismatch");
    if (!is_hermitian(observable))
        throw std::invalid_argument("ensemble_average: observable must be Hermitian");
    return (rho.matrix() * observable).trace().real();
}

CMatrix von_neumann_rhs(const CMatrix& hamiltonian, const DensityMatrix& rho, double hbar) {
    if (hbar <= 0.0) throw std::invalid_argument("von_neumann_rhs: hbar must be positive");
    if (hamiltonian.rows() != rho.dim() || hamiltonian.cols() != rho.dim())
        throw std::invalid_argument("von_neumann_rhs: Hamiltonian dimension mismatch");
    if (!is_hermitian(hamiltonian))
        throw std::invalid_argument("von_neumann_rhs: Hamiltonian must be Hermitian");
    return Complex(0.0, -1.0 / hbar) * commutator(hamiltonian, rho.matrix());
}

DensityMatrix evolve_unitary(const DensityMatrix& rho, const CMatrix& u) {
    if (u.rows() != rho.dim() || u.cols() != rho.dim())
        throw std::invalid_argument("evolve_unitary: dimension mismatch");
    if (!is_unitary(u, kValidityTol))
        throw std::invalid_argument("evolve_unitary: operator is not unitary within 1e-10");
    return DensityMatrix(u * rho.matrix() * u.adjoint());
}

double von_neumann_entropy(const DensityMatrix& rho) {
    const RVector evals = hermitian_eigenvalues(rho.matrix());
    double s = 0.0;
    for (Eigen::Index i = 0; i < evals.size(); ++i) {
        const double p = clamp_probability(evals[i]);
        if (p > 0.0) s -= p * std::log(p);
    }
    return s;
}

EntropyRateReport entropy_rate_series(const DensityMatrix& rho, const CMatrix& rho_dot) {
    if (rho_dot.rows() != rho.dim() || rho_dot.cols() != rho.dim())
        throw std::invalid_argument("entropy_rate_series: dimension mismatch");
    if (!is_hermitian(rho_dot))
        throw std::invalid_argument("entropy_rate_series: rho_dot must be Hermitian");
    if (std::abs(rho_dot.trace()) > kValidityTol)
        throw std::invalid_argument("entropy_rate_series: rho_dot must be traceless");

    const CMatrix& r = rho.matrix();
    const CMatrix r2 = r * r;
    // sum_ij rho_ij drho_ji = Tr(rho drho), and so on up the powers
    const double series = (11.0 / 6.0) * rho_dot.trace().real() -
                          6.0 * (r * rho_dot).trace().real() +
                          (9.0 / 2.0) * (r2 * rho_dot).trace().real() -
                          (4.0 / 3.0) * (r2 * r * rho_dot).trace().real();

    // -Tr(rho_dot ln rho) on the support of rho; dS/dt along the flow since
    // Tr(rho_dot) = 0 kills the normalization term.
    const CMatrix log_rho = matrix_function_hermitian(r, [](double lambda) -> Complex {
        const double p = clamp_probability(lambda);
        return p > kSupportEps ? Complex(std::log(p), 0.0) : Complex(0.0, 0.0);
    });
    const double exact = -(rho_dot * log_rho).trace().real();

    return {series, exact, series - exact};
}

SchmidtData separability_check(const StateVector& psi, int dim_first, int dim_second) {
    if (dim_first < 1 || dim_second < 1 || psi.dim() != dim_first * dim_second)
        throw std::invalid_argument("separability_check: dimensions do not factor the state");

    CMatrix grid(dim_first, dim_second);
    for (int i = 0; i < dim_first; ++i)
        for (int j = 0; j < dim_second; ++j) grid(i, j) = psi[i * dim_second + j];

    Eigen::JacobiSVD<CMatrix> svd(grid);
    RVector sv = svd.singularValues();
    const bool separable = sv.size() < 2 || sv[1] < 1e-10;
    return {separable, std::move(sv)};
}

double quantum_conditional_entropy(const DensityMatrix& rho_ab, int dim_first, int dim_second) {
    const DensityMatrix rho_b(
        partial_trace(rho_ab.matrix(), dim_first, dim_second, Subsystem::Second));
    return von_neumann_entropy(rho_ab) - von_neumann_entropy(rho_b);
}

DensityMatrix quantize_frequencies(const FrequencyVector& x) {
    const int n = x.dim();
    CVector sq(n);
    for (int i = 0; i < n; ++i) sq[i] = std::sqrt(x[i]);
    return DensityMatrix(sq * sq.adjoint());
}

ReplicatorCorrespondence quantum_replicator_correspondence(const RMatrix& payoff,
                                                           const FrequencyVector& x, double hbar) {
    if (hbar <= 0.0)
        throw std::invalid_argument("quantum_replicator_correspondence: hbar must be positive");
    const LaxDecomposition d = lax_decomposition(payoff, x);

    ReplicatorCorrespondence c;
    c.classical_rhs = commutator(d.lambda, d.x_mat);
    // Lambda is real antisymmetric, so i*hbar*Lambda is Hermitian.
    c.hamiltonian = Complex(0.0, hbar) * d.lambda.cast<Complex>();
    c.quantum_rhs = Complex(0.0, -1.0 / hbar) * commutator(c.hamiltonian, d.x_mat.cast<Complex>().eval());
    return c;
}

QuantumTrajectory evolve_von_neumann(const CMatrix& hamiltonian, const DensityMatrix& rho0,
                                     double t_end, double dt, double hbar) {
    if (dt <= 0.0) throw std::invalid_argument("evolve_von_neumann: dt must be positive");
    if (t_end < 0.0) throw std::invalid_argument("evolve_von_neumann: t_end must be non-negative");
    if (!is_hermitian(hamiltonian))
        throw std::invalid_argument("evolve_von_neumann: Hamiltonian must be Hermitian");
    if (hamiltonian.rows() != rho0.dim())
        throw std::invalid_argument("evolve_von_neumann: dimension mismatch");
    if (hbar <= 0.0) throw std::invalid_argument("evolve_von_neumann: hbar must be positive");

    const Complex coeff(0.0, -1.0 / hbar);
    auto field = [&](const CMatrix& r) -> CMatrix {
        return coeff * (hamiltonian * r - r * hamiltonian);
    };

    // Integrator drift can push pure-state eigenvalues slightly negative;
    // clamp within this budget, abort beyond it.
    constexpr double kDriftTol = 1e-6;
    auto drift_entropy = [&](const CMatrix& m, std::size_t step) {
        const RVector evals = hermitian_eigenvalues(0.5 * (m + m.adjoint().eval()));
        double s = 0.0;
        for (Eigen::Index i = 0; i < evals.size(); ++i) {
            if (evals[i] < -kDriftTol)
                throw IntegrationError(step, "state eigenvalue " + std::to_string(evals[i]));
            if (evals[i] > 0.0) s -= evals[i] * std::log(evals[i]);
        }
        return s;
    };

    const auto n_steps = static_cast<std::size_t>(std::llround(t_end / dt));
    QuantumTrajectory traj;

    CMatrix r = rho0.matrix();
    auto record = [&](double t, std::size_t step, const CMatrix& m) {
        traj.times.push_back(t);
        traj.entropy.push_back(drift_entropy(m, step));
        traj.purity.push_back((m * m).trace().real());
        traj.populations.push_back(m.diagonal().real());
    };
    record(0.0, 0, r);

    for (std::size_t step = 1; step <= n_steps; ++step) {
        const CMatrix k1 = field(r);
        const CMatrix k2 = field(r + 0.5 * dt * k1);
        const CMatrix k3 = field(r + 0.5 * dt * k2);
        const CMatrix k4 = field(r + dt * k3);
        r += (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        record(static_cast<double>(step) * dt, step, r);
    }
    traj.final_state = std::move(r);
    return traj;
}

}  // namespace qgt
