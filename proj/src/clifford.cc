#include "magiclab/clifford.h"

#include <cmath>

#include "magiclab/errors.h"
#include "magiclab/stabilizer.h"

namespace magiclab {

namespace {

constexpr double kMatchTol = 1e-8;

// I_{left} ⊗ m ⊗ I_{right}
ComplexMatrix embed(const ComplexMatrix& m, int left, int right) {
    return kron(kron(ComplexMatrix::Identity(left, left), m), ComplexMatrix::Identity(right, right));
}

// Permutation exchanging tensor factors i < j (equal sizes) of `f`.
ComplexMatrix swap_factors(const Factorization& f, int i, int j) {
    const int d = f.dim();
    ComplexMatrix p = ComplexMatrix::Zero(d, d);
    std::vector<int> digits(f.size());
    for (int k = 0; k < d; ++k) {
        int rest = k;
        for (int t = f.size() - 1; t >= 0; --t) {
            digits[t] = rest % f[t];
            rest /= f[t];
        }
        std::swap(digits[i], digits[j]);
        int image = 0;
        for (int t = 0; t < f.size(); ++t) image = image * f[t] + digits[t];
        p(image, k) = 1.0;
    }
    return p;
}

}  // namespace

ComplexMatrix fourier_matrix(int n) {
    ComplexMatrix f(n, n);
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    for (int j = 0; j < n; ++j) {
        for (int k = 0; k < n; ++k) f(j, k) = scale * root_of_unity(n, 1LL * j * k);
    }
    return f;
}

ComplexMatrix phase_gate(int n) {
    ComplexMatrix s = ComplexMatrix::Zero(n, n);
    for (long long k = 0; k < n; ++k) {
        if (n % 2 == 0) {
            // tau^{k^2} with tau = exp(2 pi i (n+1) / 2n)
            s(k, k) = root_of_unity(2 * n, (n + 1) * k * k);
        } else {
            const long long half = (n + 1) / 2;
            s(k, k) = root_of_unity(n, half * k * (k + 1));
        }
    }
    return s;
}

std::vector<CliffordElement> generators(const WHGroup& g) {
    const Factorization& f = g.factorization();
    for (int n : f.factors()) {
        if (!is_prime(n)) {
            throw UnsupportedDimension("Clifford generators need prime factors, got " + std::to_string(n));
        }
    }
    std::vector<CliffordElement> out;
    if (f.size() == 1) {
        out.push_back({fourier_matrix(f[0]), "F"});
        out.push_back({phase_gate(f[0]), "S"});
    } else {
        int left = 1;
        for (int i = 0; i < f.size(); ++i) {
            const int right = f.dim() / (left * f[i]);
            out.push_back({embed(fourier_matrix(f[i]), left, right), "F@" + std::to_string(i)});
            out.push_back({embed(phase_gate(f[i]), left, right), "S@" + std::to_string(i)});
            left *= f[i];
        }
        for (int i = 0; i < f.size(); ++i) {
            for (int j = i + 1; j < f.size(); ++j) {
                if (f[i] == f[j]) {
                    out.push_back({swap_factors(f, i, j),
                                   "SWAP(" + std::to_string(i) + "," + std::to_string(j) + ")"});
                }
            }
        }
    }
    for (int a = 1; a < g.size(); ++a) {
        out.push_back({g.op(a), "D" + g.index(a).str()});
    }
    return out;
}

ConjugatedIndex conjugate_index(const CliffordElement& c, const WHGroup& g, const DisplacementIndex& a) {
    const int d = g.dim();
    if (c.matrix.rows() != d || c.matrix.cols() != d) {
        throw DimensionMismatch("conjugate_index: element and group dimensions differ");
    }
    const ComplexMatrix image = c.matrix.adjoint() * g.op(a) * c.matrix;
    for (int b = 0; b < g.size(); ++b) {
        // tr(D_b^dagger M) = sum of conj(D_b) .* M
        const Complex overlap = g.op(b).cwiseProduct(image.conjugate()).sum();
        if (std::abs(std::abs(overlap) - d) <= kMatchTol) {
            return ConjugatedIndex{g.index(b), std::conj(overlap) / static_cast<double>(d)};
        }
    }
    throw NoMatch("U^dagger D_" + a.str() + " U is not proportional to a displacement operator");
}

PureState apply(const CliffordElement& c, const PureState& psi) {
    if (c.matrix.cols() != psi.dim()) {
        throw DimensionMismatch("apply: element and state dimensions differ");
    }
    return PureState::normalized(ComplexVector(c.matrix * psi.vector()));
}

}  // namespace magiclab
