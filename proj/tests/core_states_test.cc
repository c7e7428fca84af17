#include <cmath>

#include <gtest/gtest.h>

#include "magiclab/core_states.h"
#include "magiclab/errors.h"

using namespace magiclab;

TEST(core_states, inner_basis_and_superposition) {
    const PureState e0 = PureState::basis(2, 0);
    const PureState e1 = PureState::basis(2, 1);
    EXPECT_NEAR(std::abs(inner(e0, e0) - Complex(1.0)), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(inner(e0, e1)), 0.0, 1e-15);

    const PureState plus = PureState::normalized(ComplexVector::Ones(2));
    EXPECT_NEAR(std::abs(inner(plus, e0) - Complex(1.0 / std::sqrt(2.0))), 0.0, 1e-15);
}

TEST(core_states, inner_conjugates_first_argument) {
    ComplexVector v(2);
    v << Complex(0.0, 1.0), 0.0;
    const PureState i0 = PureState::normalized(v);
    EXPECT_NEAR(std::abs(inner(i0, PureState::basis(2, 0)) - Complex(0.0, -1.0)), 0.0, 1e-15);
}

TEST(core_states, inner_dimension_mismatch) {
    EXPECT_THROW(inner(PureState::basis(2, 0), PureState::basis(3, 0)), DimensionMismatch);
}

TEST(core_states, inner_self_is_real_unit) {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const PureState psi = haar_random_state(5, seed);
        const Complex z = inner(psi, psi);
        EXPECT_NEAR(z.real(), 1.0, 1e-12);
        EXPECT_NEAR(z.imag(), 0.0, 1e-12);
    }
}

TEST(core_states, pure_state_rejects_unnormalized) {
    EXPECT_THROW(PureState(ComplexVector::Ones(2)), std::invalid_argument);
    EXPECT_THROW(PureState::normalized(ComplexVector::Zero(3)), std::invalid_argument);
    EXPECT_THROW(PureState::basis(2, 2), std::invalid_argument);
}

TEST(core_states, tensor_basis_and_dimension) {
    const PureState t = tensor(PureState::basis(2, 0), PureState::basis(2, 0));
    EXPECT_EQ(t.dim(), 4);
    EXPECT_NEAR(fidelity(t, PureState::basis(4, 0)), 1.0, 1e-15);

    // Left factor varies slowest: |1> ⊗ |2> in 2 x 3 is |5>.
    const PureState u = tensor(PureState::basis(2, 1), PureState::basis(3, 2));
    EXPECT_EQ(u.dim(), 6);
    EXPECT_NEAR(fidelity(u, PureState::basis(6, 5)), 1.0, 1e-15);
}

TEST(core_states, tensor_norm_and_associativity) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const PureState a = haar_random_state(2, seed);
        const PureState b = haar_random_state(3, seed + 100);
        const PureState c = haar_random_state(2, seed + 200);
        EXPECT_NEAR(tensor(a, b).vector().norm(), 1.0, 1e-12);
        const ComplexVector left = tensor(tensor(a, b), c).vector();
        const ComplexVector right = tensor(a, tensor(b, c)).vector();
        EXPECT_LT((left - right).cwiseAbs().maxCoeff(), 1e-14);
    }
}

TEST(core_states, kron_matches_tensor_ordering) {
    ComplexMatrix x(2, 2);
    x << 0, 1, 1, 0;
    const ComplexMatrix ix = kron(ComplexMatrix::Identity(2, 2), x);
    const PureState image = PureState::normalized(ComplexVector(ix * PureState::basis(4, 0).vector()));
    EXPECT_NEAR(fidelity(image, tensor(PureState::basis(2, 0), PureState::basis(2, 1))), 1.0, 1e-15);
}

TEST(core_states, haar_state_shape_and_determinism) {
    const PureState a = haar_random_state(4, 17);
    EXPECT_EQ(a.dim(), 4);
    EXPECT_NEAR(a.vector().norm(), 1.0, 1e-12);
    const PureState b = haar_random_state(4, 17);
    for (int k = 0; k < 4; ++k) {
        EXPECT_EQ(a[k], b[k]);
    }
    const PureState c = haar_random_state(4, 18);
    EXPECT_GT((a.vector() - c.vector()).norm(), 1e-3);
    EXPECT_THROW(haar_random_state(0, 1), std::invalid_argument);
}

// For Haar-random qubit states |<e0|phi>|^2 is uniform on [0, 1]: mean 1/2,
// variance 1/12.
TEST(core_states, haar_first_moment_monte_carlo) {
    constexpr int kSamples = 100000;
    const PureState e0 = PureState::basis(2, 0);
    KahanSum sum;
    for (int s = 0; s < kSamples; ++s) {
        sum.add(fidelity(e0, haar_random_state(2, static_cast<std::uint64_t>(s))));
    }
    const double mean = sum.value() / kSamples;
    const double sigma = std::sqrt(1.0 / 12.0 / kSamples);
    EXPECT_NEAR(mean, 0.5, 3.0 * sigma);
}

TEST(core_states, canonical_phase_makes_largest_amplitude_real) {
    const PureState psi = haar_random_state(5, 3);
    const PureState c = canonical_phase(psi);
    EXPECT_NEAR(fidelity(psi, c), 1.0, 1e-14);
    int best = 0;
    for (int k = 1; k < 5; ++k) {
        if (std::abs(c[k]) > std::abs(c[best])) best = k;
    }
    EXPECT_GT(c[best].real(), 0.0);
    EXPECT_EQ(c[best].imag(), 0.0);
}

TEST(core_states, kahan_sum_recovers_small_terms) {
    KahanSum s;
    s.add(1.0);
    for (int i = 0; i < 1000; ++i) s.add(1e-16);
    EXPECT_NEAR(s.value(), 1.0 + 1e-13, 1e-16);
}
