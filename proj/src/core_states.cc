#include "magiclab/core_states.h"

#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

#include "magiclab/errors.h"

namespace magiclab {

PureState::PureState(ComplexVector amplitudes) : amplitudes_(std::move(amplitudes)) {
    if (amplitudes_.size() == 0) {
        throw std::invalid_argument("PureState: empty vector");
    }
    double n = amplitudes_.norm();
    if (!(std::abs(n - 1.0) <= kNormTol)) {
        throw std::invalid_argument("PureState: norm " + std::to_string(n) + " is not 1");
    }
}

PureState PureState::normalized(ComplexVector amplitudes) {
    double n = amplitudes.norm();
    if (amplitudes.size() == 0 || !(n > 0.0) || !std::isfinite(n)) {
        throw std::invalid_argument("PureState::normalized: vector cannot be normalized");
    }
    amplitudes /= n;
    return PureState(std::move(amplitudes));
}

PureState PureState::normalized(std::span<const Complex> amplitudes) {
    ComplexVector v(static_cast<Eigen::Index>(amplitudes.size()));
    for (std::size_t k = 0; k < amplitudes.size(); ++k) {
        v[static_cast<Eigen::Index>(k)] = amplitudes[k];
    }
    return normalized(std::move(v));
}

PureState PureState::basis(int d, int k) {
    if (d < 1 || k < 0 || k >= d) {
        throw std::invalid_argument("PureState::basis: index out of range");
    }
    ComplexVector v = ComplexVector::Zero(d);
    v[k] = 1.0;
    return PureState(std::move(v));
}

Complex inner(const PureState& a, const PureState& b) {
    if (a.dim() != b.dim()) {
        throw DimensionMismatch("inner: dimensions " + std::to_string(a.dim()) + " and " +
                                std::to_string(b.dim()));
    }
    return a.vector().dot(b.vector());  // Eigen's dot conjugates the left operand.
}

double fidelity(const PureState& a, const PureState& b) {
    return std::norm(inner(a, b));
}

PureState tensor(const PureState& a, const PureState& b) {
    const int da = a.dim();
    const int db = b.dim();
    ComplexVector v(static_cast<Eigen::Index>(da) * db);
    for (int i = 0; i < da; ++i) {
        for (int j = 0; j < db; ++j) {
            v[i * db + j] = a[i] * b[j];
        }
    }
    // Norm is multiplicative; renormalize to absorb rounding in the product.
    return PureState::normalized(std::move(v));
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

PureState haar_random_state(int d, std::uint64_t seed) {
    if (d < 1) {
        throw std::invalid_argument("haar_random_state: d must be positive");
    }
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    ComplexVector v(d);
    for (int k = 0; k < d; ++k) {
        double re = normal(rng);
        double im = normal(rng);
        v[k] = Complex(re, im);
    }
    return PureState::normalized(std::move(v));
}

PureState canonical_phase(const PureState& psi) {
    int best = 0;
    double best_mod = 0.0;
    for (int k = 0; k < psi.dim(); ++k) {
        double m = std::abs(psi[k]);
        if (m > best_mod + 1e-12) {
            best = k;
            best_mod = m;
        }
    }
    Complex rot = std::conj(psi[best]) / best_mod;
    ComplexVector v = psi.vector() * rot;
    v[best] = Complex(v[best].real(), 0.0);
    return PureState::normalized(std::move(v));
}

}  // namespace magiclab
