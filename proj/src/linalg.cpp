#include "qgt/linalg.hpp"

#include <cmath>

namespace qgt {

namespace {

constexpr double kHermitianTol = 1e-10;

void require_square(const CMatrix& m, const char* who) {
    if (m.rows() < 1 || m.rows() != m.cols())
        throw std::invalid_argument(std::string(who) + ": matrix must be square and non-empty");
    if (!is_finite(m))
        throw std::invalid_argument(std::string(who) + ": matrix has non-finite entries");
}

}  // namespace

StateVector::StateVector(CVector amplitudes) : amps_(std::move(amplitudes)) {
    if (amps_.size() < 1)
        throw std::invalid_argument("StateVector: dimension must be >= 1");
    double norm2 = 0.0;
    for (Eigen::Index i = 0; i < amps_.size(); ++i) {
        if (!std::isfinite(amps_[i].real()) || !std::isfinite(amps_[i].imag()))
            throw std::invalid_argument("StateVector: non-finite amplitude");
        norm2 += std::norm(amps_[i]);
    }
    if (std::abs(norm2 - 1.0) > 1e-12)
        throw std::invalid_argument("StateVector: amplitudes not normalized (sum |a|^2 = " +
                                    std::to_string(norm2) + ")");
}

StateVector StateVector::basis(int dim, int index) {
    if (dim < 1 || index < 0 || index >= dim)
        throw std::invalid_argument("StateVector::basis: index out of range");
    CVector v = CVector::Zero(dim);
    v[index] = 1.0;
    return StateVector(std::move(v));
}

CMatrix pauli_x() {
    CMatrix m(2, 2);
    m << 0, 1, 1, 0;
    return m;
}

CMatrix pauli_y() {
    CMatrix m(2, 2);
    m << 0, Complex(0, -1), Complex(0, 1), 0;
    return m;
}

CMatrix pauli_z() {
    CMatrix m(2, 2);
    m << 1, 0, 0, -1;
    return m;
}

CMatrix hadamard() {
    CMatrix m(2, 2);
    const double s = 1.0 / std::sqrt(2.0);
    m << s, s, s, -s;
    return m;
}

CMatrix identity(int n) { return CMatrix::Identity(n, n); }

bool is_finite(const CMatrix& m) {
    for (Eigen::Index j = 0; j < m.cols(); ++j)
        for (Eigen::Index i = 0; i < m.rows(); ++i)
            if (!std::isfinite(m(i, j).real()) || !std::isfinite(m(i, j).imag())) return false;
    return true;
}

bool is_hermitian(const CMatrix& m, double tol) {
    if (m.rows() != m.cols()) return false;
    return max_abs(CMatrix(m - m.adjoint())) <= tol;
}

bool is_unitary(const CMatrix& m, double tol) {
    if (m.rows() != m.cols()) return false;
    return max_abs(CMatrix(m * m.adjoint() - CMatrix::Identity(m.rows(), m.cols()))) <= tol;
}

CMatrix tensor_product(const CMatrix& a, const CMatrix& b) {
    require_square(a, "tensor_product");
    require_square(b, "tensor_product");
    const Eigen::Index an = a.rows(), bn = b.rows();
    CMatrix out(an * bn, an * bn);
    for (Eigen::Index i = 0; i < an; ++i)
        for (Eigen::Index j = 0; j < an; ++j)
            out.block(i * bn, j * bn, bn, bn) = a(i, j) * b;
    return out;
}

CVector tensor_product(const CVector& a, const CVector& b) {
    CVector out(a.size() * b.size());
    for (Eigen::Index i = 0; i < a.size(); ++i)
        out.segment(i * b.size(), b.size()) = a[i] * b;
    return out;
}

CMatrix commutator(const CMatrix& a, const CMatrix& b) {
    require_square(a, "commutator");
    require_square(b, "commutator");
    if (a.rows() != b.rows()) throw std::invalid_argument("commutator: dimension mismatch");
    return a * b - b * a;
}

RMatrix commutator(const RMatrix& a, const RMatrix& b) {
    if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows())
        throw std::invalid_argument("commutator: dimension mismatch");
    return a * b - b * a;
}

CMatrix partial_trace(const CMatrix& rho, int dim_first, int dim_second, Subsystem keep) {
    require_square(rho, "partial_trace");
    if (dim_first < 1 || dim_second < 1 ||
        rho.rows() != static_cast<Eigen::Index>(dim_first) * dim_second)
        throw std::invalid_argument("partial_trace: dimensions do not factor the operator");

    if (keep == Subsystem::First) {
        CMatrix out = CMatrix::Zero(dim_first, dim_first);
        for (int i = 0; i < dim_first; ++i)
            for (int j = 0; j < dim_first; ++j)
                for (int k = 0; k < dim_second; ++k)
                    out(i, j) += rho(i * dim_second + k, j * dim_second + k);
        return out;
    }
    CMatrix out = CMatrix::Zero(dim_second, dim_second);
    for (int i = 0; i < dim_second; ++i)
        for (int j = 0; j < dim_second; ++j)
            for (int k = 0; k < dim_first; ++k)
                out(i, j) += rho(k * dim_second + i, k * dim_second + j);
    return out;
}

namespace {

// Shared eigendecomposition front end: validates Hermiticity to kHermitianTol,
// symmetrizes the residual round-off, and decomposes.
Eigen::SelfAdjointEigenSolver<CMatrix> decompose(const CMatrix& h, const char* who) {
    require_square(h, who);
    if (!is_hermitian(h, kHermitianTol))
        throw std::invalid_argument(std::string(who) + ": matrix is not Hermitian within 1e-10");
    CMatrix sym = 0.5 * (h + h.adjoint());
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(sym);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error(std::string(who) + ": eigendecomposition failed");
    return solver;
}

}  // namespace

CMatrix matrix_function_hermitian(const CMatrix& h, const std::function<Complex(double)>& f) {
    auto solver = decompose(h, "matrix_function_hermitian");
    const RVector& evals = solver.eigenvalues();
    CVector fvals(evals.size());
    for (Eigen::Index i = 0; i < evals.size(); ++i) fvals[i] = f(evals[i]);
    return solver.eigenvectors() * fvals.asDiagonal() * solver.eigenvectors().adjoint();
}

RVector hermitian_eigenvalues(const CMatrix& h) {
    return decompose(h, "hermitian_eigenvalues").eigenvalues();
}

}  // namespace qgt
