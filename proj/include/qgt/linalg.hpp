#ifndef QGT_LINALG_HPP
#define QGT_LINALG_HPP

#include <functional>
#include <utility>

#include "qgt/common.hpp"

namespace qgt {

/// Which factor of a bipartite system survives a partial trace.
enum class Subsystem { First, Second };

/// Normalized complex amplitude vector. Construction enforces
/// sum |a_i|^2 = 1 within 1e-12 and finiteness of every component.
class StateVector {
public:
    explicit StateVector(CVector amplitudes);

    /// Builds the computational basis state |index> of the given dimension.
    static StateVector basis(int dim, int index);

    int dim() const { return static_cast<int>(amps_.size()); }
    const CVector& amps() const { return amps_; }
    Complex operator[](int i) const { return amps_[i]; }

private:
    CVector amps_;
};

// Pauli matrices and friends, as 2x2 complex matrices.
CMatrix pauli_x();
CMatrix pauli_y();
CMatrix pauli_z();
CMatrix hadamard();
CMatrix identity(int n);

bool is_finite(const CMatrix& m);
bool is_hermitian(const CMatrix& m, double tol = 1e-10);
bool is_unitary(const CMatrix& m, double tol = 1e-10);

/// Kronecker product: dim = a.dim * b.dim, entry (i*bn+k, j*bn+l) = a(i,j)*b(k,l).
CMatrix tensor_product(const CMatrix& a, const CMatrix& b);
CVector tensor_product(const CVector& a, const CVector& b);

/// ab − ba. Dimensions must match.
CMatrix commutator(const CMatrix& a, const CMatrix& b);
RMatrix commutator(const RMatrix& a, const RMatrix& b);

/// Traces out one tensor factor of a (dim_first*dim_second)-dimensional operator.
/// The trace of the result equals the trace of the input.
CMatrix partial_trace(const CMatrix& rho, int dim_first, int dim_second, Subsystem keep);

/// Applies f to the spectrum of a Hermitian matrix: V f(diag) V^dag.
/// Inputs within 1e-10 of Hermitian are symmetrized first; anything worse is rejected.
CMatrix matrix_function_hermitian(const CMatrix& h, const std::function<Complex(double)>& f);

/// Eigenvalues of a Hermitian matrix, ascending. Same symmetrization policy
/// as matrix_function_hermitian.
RVector hermitian_eigenvalues(const CMatrix& h);

}  // namespace qgt

#endif
