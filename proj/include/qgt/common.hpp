#ifndef QGT_COMMON_HPP
#define QGT_COMMON_HPP

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace qgt {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RMatrix = Eigen::MatrixXd;
using RVector = Eigen::VectorXd;

/// Raised when a fixed-step integration leaves its admissible region.
/// Carries the step index at which the abort happened.
class IntegrationError : public std::runtime_error {
public:
    IntegrationError(std::size_t step, const std::string& what)
        : std::runtime_error("integration unstable at step " + std::to_string(step) + ": " + what),
          step_(step) {}
    std::size_t step() const { return step_; }

private:
    std::size_t step_;
};

/// Deterministic uniform double generator. mt19937_64 output is fixed by the
/// standard; the bit-to-double mapping here avoids std::uniform_real_distribution,
/// whose stream is implementation-defined.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    /// Uniform in [0, 1).
    double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Uniform point on the probability simplex of dimension n.
    RVector simplex(int n) {
        RVector x(n);
        double sum = 0.0;
        for (int i = 0; i < n; ++i) {
            // exponential spacings normalize to a uniform simplex sample
            double u = uniform();
            x[i] = -std::log1p(-u);
            sum += x[i];
        }
        return x / sum;
    }

    std::uint64_t raw() { return eng_(); }

private:
    std::mt19937_64 eng_;
};

inline double max_abs(const CMatrix& m) { return m.cwiseAbs().maxCoeff(); }
inline double max_abs(const RMatrix& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace qgt

#endif
