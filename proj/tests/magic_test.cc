#include <algorithm>
#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "magiclab/catalog.h"
#include "magiclab/errors.h"
#include "magiclab/magic.h"

using namespace magiclab;

namespace {

PureState fiducial(int d) { return PureState::normalized(builtin_fiducial(d).vector); }

}  // namespace

TEST(magic, char_distribution_of_ket0) {
    const WHGroup g(Factorization::single(2));
    const CharDistribution p = char_distribution(g, PureState::basis(2, 0));
    // flat order: (0,0), (0,1), (1,0), (1,1)
    EXPECT_NEAR(p.probs[0], 0.5, 1e-15);
    EXPECT_NEAR(p.probs[1], 0.5, 1e-15);
    EXPECT_NEAR(p.probs[2], 0.0, 1e-15);
    EXPECT_NEAR(p.probs[3], 0.0, 1e-15);
}

TEST(magic, char_distribution_of_qubit_fiducial) {
    const WHGroup g(Factorization::single(2));
    const CharDistribution p = char_distribution(g, fiducial(2));
    EXPECT_NEAR(p.probs[0], 0.5, 1e-15);
    for (int a = 1; a < 4; ++a) EXPECT_NEAR(p.probs[a], 1.0 / 6.0, 1e-15);
}

TEST(magic, char_distribution_is_normalized) {
    for (const auto& factors : std::vector<std::vector<int>>{{2}, {3}, {4}, {6}, {2, 3}, {2, 2, 2}}) {
        const WHGroup g(Factorization{factors});
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            const CharDistribution p = char_distribution(g, haar_random_state(g.dim(), seed));
            double total = 0.0;
            for (double x : p.probs) {
                EXPECT_GE(x, -1e-12);
                total += x;
            }
            EXPECT_NEAR(total, 1.0, 1e-9);
            EXPECT_NEAR(p.probs[0], 1.0 / g.dim(), 1e-15);
        }
    }
}

TEST(magic, characteristic_function_matches_trace) {
    const WHGroup g(Factorization::single(3));
    const PureState psi = haar_random_state(3, 9);
    const ComplexMatrix rho = psi.vector() * psi.vector().adjoint();
    const std::vector<Complex> chi = characteristic_function(g, psi);
    for (int a = 0; a < g.size(); ++a) {
        EXPECT_LT(std::abs(chi[a] - (g.op(a) * rho).trace() / 3.0), 1e-15);
    }
}

TEST(magic, entropy_of_stabilizer_state_is_zero) {
    const WHGroup g(Factorization::single(2));
    EXPECT_EQ(stabilizer_entropy(g, PureState::basis(2, 0), 2.0).value, 0.0);
}

// Sum of P^2 for the qubit fiducial is 1/4 + 3/36 = 1/3, so M_2 = log 3 - log 2.
TEST(magic, qubit_fiducial_saturates_bound) {
    const WHGroup g(Factorization::single(2));
    const EntropyReport r = stabilizer_entropy(g, fiducial(2), 2.0);
    EXPECT_NEAR(r.value, std::log(1.5), 1e-14);
    EXPECT_NEAR(r.value, 0.405465, 1e-6);
    ASSERT_TRUE(r.bound.has_value());
    EXPECT_NEAR(r.value, *r.bound, 1e-12);
    EXPECT_NEAR(*r.saturation_gap, 0.0, 1e-12);
}

TEST(magic, qutrit_fiducial_saturates_bound) {
    const WHGroup g(Factorization::single(3));
    for (double alpha : {2.0, 3.0, 4.0, 2.5}) {
        const EntropyReport r = stabilizer_entropy(g, fiducial(3), alpha);
        EXPECT_NEAR(r.value, magic_bound(3, alpha), 1e-12);
    }
}

TEST(magic, bound_closed_form_values) {
    EXPECT_NEAR(magic_bound(2, 2.0), std::log(1.5), 1e-15);
    EXPECT_NEAR(magic_bound(3, 2.0), std::log(2.0), 1e-15);
    // d = 2, alpha = 3: -1/2 log((1 + 1/9) / 2) = 1/2 log(9/5)
    EXPECT_NEAR(magic_bound(2, 3.0), 0.5 * std::log(1.8), 1e-15);
}

TEST(magic, bound_decreases_in_alpha_and_increases_in_d) {
    for (int d = 2; d <= 10; ++d) {
        EXPECT_GT(magic_bound(d, 2.0), magic_bound(d, 3.0));
        EXPECT_GT(magic_bound(d, 3.0), magic_bound(d, 4.0));
        EXPECT_GT(magic_bound(d, 2.0), 0.0);
        if (d > 2) EXPECT_GT(magic_bound(d, 2.0), magic_bound(d - 1, 2.0));
    }
}

TEST(magic, bound_domain_errors) {
    EXPECT_THROW(magic_bound(2, 1.5), std::domain_error);
    EXPECT_THROW(magic_bound(1, 2.0), std::domain_error);
}

TEST(magic, entropy_errors) {
    const WHGroup g(Factorization::single(2));
    EXPECT_THROW(stabilizer_entropy(g, PureState::basis(3, 0), 2.0), DimensionMismatch);
    EXPECT_THROW(stabilizer_entropy(g, PureState::basis(2, 0), -1.0), std::domain_error);
}

TEST(magic, low_orders_have_no_bound) {
    const WHGroup g(Factorization::single(3));
    const PureState psi = haar_random_state(3, 1);
    for (double alpha : {0.0, 0.5, 1.0, 1.5}) {
        const EntropyReport r = stabilizer_entropy(g, psi, alpha);
        EXPECT_FALSE(r.bound.has_value());
        EXPECT_GE(r.value, -1e-9);
    }
}

TEST(magic, shannon_limit_is_continuous) {
    const WHGroup g(Factorization::single(3));
    const PureState psi = haar_random_state(3, 2);
    const double m1 = stabilizer_entropy(g, psi, 1.0).value;
    const double below = stabilizer_entropy(g, psi, 1.0 - 1e-6).value;
    const double above = stabilizer_entropy(g, psi, 1.0 + 1e-6).value;
    EXPECT_NEAR(m1, below, 1e-5);
    EXPECT_NEAR(m1, above, 1e-5);
}

TEST(magic, support_entropy_of_stabilizer_is_zero) {
    const WHGroup g(Factorization::single(3));
    EXPECT_EQ(stabilizer_entropy(g, PureState::basis(3, 1), 0.0).value, 0.0);
}

TEST(magic, bound_holds_on_random_states) {
    for (int d = 2; d <= 6; ++d) {
        const WHGroup g(Factorization::single(d));
        for (std::uint64_t seed = 0; seed < 1000; ++seed) {
            const CharDistribution p = char_distribution(g, haar_random_state(d, seed));
            for (double alpha : {2.0, 3.0, 4.0}) {
                const EntropyReport r = entropy_from_distribution(p, alpha);
                ASSERT_LE(r.value, *r.bound + 1e-9);
                ASSERT_GT(*r.saturation_gap, 1e-9) << "random state saturated the bound";
            }
        }
    }
}

TEST(magic, additivity_under_composite_group) {
    const WHGroup g2(Factorization::single(2));
    const WHGroup g3(Factorization::single(3));
    const WHGroup g23(Factorization({2, 3}));
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const PureState a = haar_random_state(2, seed);
        const PureState b = haar_random_state(3, seed + 1000);
        for (double alpha : {2.0, 3.0}) {
            const double joint = stabilizer_entropy(g23, tensor(a, b), alpha).value;
            const double sum = stabilizer_entropy(g2, a, alpha).value + stabilizer_entropy(g3, b, alpha).value;
            EXPECT_NEAR(joint, sum, 1e-10);
        }
    }
}

TEST(magic, permutation_invariance) {
    const WHGroup g(Factorization::single(4));
    CharDistribution p = char_distribution(g, haar_random_state(4, 5));
    const double before = entropy_from_distribution(p, 2.0).value;
    std::mt19937 rng(1);
    std::shuffle(p.probs.begin(), p.probs.end(), rng);
    EXPECT_NEAR(entropy_from_distribution(p, 2.0).value, before, 1e-14);
}
