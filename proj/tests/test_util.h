#ifndef MAGICLAB_TEST_UTIL_H
#define MAGICLAB_TEST_UTIL_H

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>

#include <Eigen/QR>

#include "magiclab/core_states.h"

namespace magiclab::testutil {

// Haar-random unitary via QR of a complex Gaussian matrix with the phases of
// R's diagonal divided out.
inline ComplexMatrix random_unitary(int d, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal;
    ComplexMatrix z(d, d);
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) z(i, j) = Complex(normal(rng), normal(rng));
    }
    Eigen::HouseholderQR<ComplexMatrix> qr(z);
    ComplexMatrix q = qr.householderQ();
    ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int j = 0; j < d; ++j) q.col(j) *= r(j, j) / std::abs(r(j, j));
    return q;
}

// Largest |m(i,j) - c * n(i,j)| after choosing the global phase c from the
// largest entry of n.
inline double distance_up_to_phase(const ComplexMatrix& m, const ComplexMatrix& n) {
    Eigen::Index r = 0, c = 0;
    n.cwiseAbs().maxCoeff(&r, &c);
    const Complex phase = m(r, c) / n(r, c);
    return (m - phase * n).cwiseAbs().maxCoeff();
}

inline ComplexVector perturb(const ComplexVector& v, double scale, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal;
    ComplexVector out = v;
    for (Eigen::Index k = 0; k < v.size(); ++k) out[k] += scale * Complex(normal(rng), normal(rng));
    return out / out.norm();
}

}  // namespace magiclab::testutil

#endif
