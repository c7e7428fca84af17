#ifndef MAGICLAB_CORE_STATES_H
#define MAGICLAB_CORE_STATES_H

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace magiclab {

using Complex = std::complex<double>;
using ComplexVector = Eigen::VectorXcd;
using ComplexMatrix = Eigen::MatrixXcd;

/// Default absolute tolerance for floating-point comparisons.
inline constexpr double kDefaultTol = 1e-10;
/// A PureState must have unit norm to within this tolerance.
inline constexpr double kNormTol = 1e-12;

/// Unit-norm vector in C^d. Immutable once constructed.
class PureState {
public:
    /// Wraps `amplitudes`; throws std::invalid_argument unless the vector is
    /// non-empty with norm 1 within `kNormTol`.
    explicit PureState(ComplexVector amplitudes);

    /// Rescales `amplitudes` to unit norm. Throws on empty or zero vectors.
    static PureState normalized(ComplexVector amplitudes);
    static PureState normalized(std::span<const Complex> amplitudes);

    /// Computational basis vector |k> in dimension d.
    static PureState basis(int d, int k);

    int dim() const { return static_cast<int>(amplitudes_.size()); }
    const ComplexVector& vector() const { return amplitudes_; }
    Complex operator[](int k) const { return amplitudes_[k]; }

private:
    ComplexVector amplitudes_;
};

/// <a|b>, conjugate-linear in the first argument.
Complex inner(const PureState& a, const PureState& b);

/// |<a|b>|^2.
double fidelity(const PureState& a, const PureState& b);

/// Kronecker product a ⊗ b. The index of `a` varies slowest, so
/// |i> ⊗ |j> = |i * b.dim() + j>.
PureState tensor(const PureState& a, const PureState& b);

/// Kronecker product of matrices with the same left-major ordering as tensor().
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Haar-random pure state: i.i.d. complex standard normal amplitudes, normalized.
/// The output is a deterministic function of (d, seed).
PureState haar_random_state(int d, std::uint64_t seed);

/// Rotates the global phase so the first largest-modulus amplitude is real positive.
PureState canonical_phase(const PureState& psi);

/// Compensated (Kahan) summation with a fixed accumulation order.
class KahanSum {
public:
    void add(double x) {
        double y = x - compensation_;
        double t = sum_ + y;
        compensation_ = (t - sum_) - y;
        sum_ = t;
    }
    double value() const { return sum_; }

private:
    double sum_ = 0.0;
    double compensation_ = 0.0;
};

}  // namespace magiclab

#endif
