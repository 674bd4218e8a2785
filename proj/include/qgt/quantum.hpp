#ifndef QGT_QUANTUM_HPP
#define QGT_QUANTUM_HPP

#include <utility>
#include <vector>

#include "qgt/linalg.hpp"
#include "qgt/replicator.hpp"

namespace qgt {

/// Statistical operator of a mixed state. Construction enforces Hermiticity
/// (1e-10, then symmetrizes), unit trace (1e-10), positive semidefiniteness
/// (min eigenvalue >= -1e-10) and purity at most 1 (1e-10).
class DensityMatrix {
public:
    explicit DensityMatrix(CMatrix rho);

    static DensityMatrix pure(const StateVector& psi);
    static DensityMatrix maximally_mixed(int dim);

    int dim() const { return static_cast<int>(rho_.rows()); }
    const CMatrix& matrix() const { return rho_; }

    /// Tr rho^2.
    double purity() const;

private:
    CMatrix rho_;
};

struct PureEnsembleMember {
    double weight;
    StateVector state;
};

/// Convex combination of projectors sum_i p_i |psi_i><psi_i|. Weights must be
/// in [0,1] and sum to 1 within 1e-12; all states share one dimension.
DensityMatrix density_from_ensemble(const std::vector<PureEnsembleMember>& members);

/// Tr(rho A) for a Hermitian observable; the imaginary residue (< 1e-10 for
/// valid inputs) is discarded.
double ensemble_average(const DensityMatrix& rho, const CMatrix& observable);

/// (-i/hbar)[H, rho]: the generator of mixed-state evolution. The result is
/// Hermitian and traceless.
CMatrix von_neumann_rhs(const CMatrix& hamiltonian, const DensityMatrix& rho, double hbar = 1.0);

/// U rho U^dag. The spectrum, and hence the entropy, is unchanged.
DensityMatrix evolve_unitary(const DensityMatrix& rho, const CMatrix& u);

/// -sum lambda_i ln lambda_i over the spectrum, 0 ln 0 = 0. Eigenvalues within
/// 1e-10 of [0,1] are clamped before the logarithm. Result in [0, ln dim].
double von_neumann_entropy(const DensityMatrix& rho);

/// Two evaluations of the entropy production along a flow rho_dot:
/// `series_value` uses the truncated-series coefficients 11/6, -6, 9/2, -4/3
/// (remainder taken as zero); `exact_value` is -Tr(rho_dot ln rho) with the
/// logarithm restricted to the support of rho. `deviation` is their gap; the
/// two are reported side by side, not asserted equal.
struct EntropyRateReport {
    double series_value;
    double exact_value;
    double deviation;
};

EntropyRateReport entropy_rate_series(const DensityMatrix& rho, const CMatrix& rho_dot);

struct SchmidtData {
    bool separable;
    RVector coefficients;  // singular values of the amplitude grid, descending
};

/// Schmidt decomposition of a bipartite pure state: separable iff the second
/// singular value of the dim_first x dim_second amplitude grid is below 1e-10.
SchmidtData separability_check(const StateVector& psi, int dim_first, int dim_second);

/// S(AB) - S(B). Negative values certify entanglement.
double quantum_conditional_entropy(const DensityMatrix& rho_ab, int dim_first, int dim_second);

/// Lifts a classical frequency vector to the rank-1 density matrix with
/// rho_ij = sqrt(x_i x_j); the diagonal reproduces x.
DensityMatrix quantize_frequencies(const FrequencyVector& x);

/// The commutator flow of a frequency matrix next to the mixed-state flow
/// generated by the Hamiltonian H = i hbar Lambda; the two fields agree.
struct ReplicatorCorrespondence {
    RMatrix classical_rhs;  // [Lambda, X]
    CMatrix quantum_rhs;    // (-i/hbar)[H, X]
    CMatrix hamiltonian;    // i hbar Lambda, Hermitian
};

ReplicatorCorrespondence quantum_replicator_correspondence(const RMatrix& payoff,
                                                           const FrequencyVector& x,
                                                           double hbar = 1.0);

struct QuantumTrajectory {
    std::vector<double> times;
    std::vector<double> entropy;
    std::vector<double> purity;
    std::vector<RVector> populations;  // diagonal of rho, real parts
    CMatrix final_state;               // raw integrator output, drift included
};

/// Fixed-step RK4 integration of the mixed-state evolution under a constant
/// Hamiltonian. Trace and spectrum are conserved up to integrator error, so
/// the recorded states carry that drift rather than the strict DensityMatrix
/// tolerances; eigenvalues down to -1e-6 are clamped for the entropy column.
QuantumTrajectory evolve_von_neumann(const CMatrix& hamiltonian, const DensityMatrix& rho0,
                                     double t_end, double dt, double hbar = 1.0);

}  // namespace qgt

#endif
