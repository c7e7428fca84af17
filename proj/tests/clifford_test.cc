#include <cmath>
#include <set>

#include <gtest/gtest.h>

#include "magiclab/catalog.h"
#include "magiclab/clifford.h"
#include "magiclab/errors.h"
#include "magiclab/magic.h"
#include "magiclab/sic.h"
#include "magiclab/stabilizer.h"
#include "test_util.h"

using namespace magiclab;

namespace {

DisplacementIndex idx(int a1, int a2) { return DisplacementIndex{{{a1, a2}}}; }

const CliffordElement& find(const std::vector<CliffordElement>& gens, const std::string& label) {
    for (const CliffordElement& c : gens) {
        if (c.label == label) return c;
    }
    throw std::runtime_error("missing generator " + label);
}

const std::vector<std::vector<int>> kFactorizations{{2}, {3}, {5}, {2, 2}, {2, 3}};

}  // namespace

TEST(clifford, qubit_fourier_is_hadamard) {
    ComplexMatrix h(2, 2);
    h << 1, 1, 1, -1;
    h /= std::sqrt(2.0);
    EXPECT_LT(testutil::distance_up_to_phase(fourier_matrix(2), h), 1e-15);
}

TEST(clifford, fourier_exchanges_clock_and_shift) {
    const WHGroup g(Factorization::single(2));
    const CliffordElement f{fourier_matrix(2), "F"};
    EXPECT_EQ(conjugate_index(f, g, idx(0, 1)).index, idx(1, 0));
    EXPECT_EQ(conjugate_index(f, g, idx(1, 0)).index, idx(0, 1));

    // Direct check for d = 3: F^dagger X F = Z^{-1}, F^dagger Z F = X.
    const WHGroup g3(Factorization::single(3));
    const ComplexMatrix f3 = fourier_matrix(3);
    const CliffordElement c3{f3, "F"};
    const ConjugatedIndex x_image = conjugate_index(c3, g3, idx(1, 0));
    EXPECT_EQ(x_image.index, idx(0, 2));
    EXPECT_LT((f3.adjoint() * g3.op(idx(1, 0)) * f3 - x_image.phase * g3.op(idx(0, 2))).cwiseAbs().maxCoeff(),
              1e-12);
    EXPECT_EQ(conjugate_index(c3, g3, idx(0, 1)).index, idx(1, 0));
}

TEST(clifford, generators_are_unitary_and_normalize_the_group) {
    for (const auto& factors : kFactorizations) {
        const WHGroup g(Factorization{factors});
        const int d = g.dim();
        for (const CliffordElement& c : generators(g)) {
            ASSERT_LT((c.matrix.adjoint() * c.matrix - ComplexMatrix::Identity(d, d)).cwiseAbs().maxCoeff(), 1e-10)
                << c.label;
            std::set<int> images;
            for (int a = 0; a < g.size(); ++a) {
                const ConjugatedIndex r = conjugate_index(c, g, g.index(a));
                EXPECT_NEAR(std::abs(r.phase), 1.0, 1e-9);
                const ComplexMatrix lhs = c.matrix.adjoint() * g.op(a) * c.matrix;
                EXPECT_LT((lhs - r.phase * g.op(r.index)).cwiseAbs().maxCoeff(), 1e-9) << c.label;
                images.insert(g.flat_index(r.index));
            }
            EXPECT_EQ(static_cast<int>(images.size()), g.size()) << c.label << " is not a bijection";
        }
    }
}

TEST(clifford, generator_labels) {
    const auto single = generators(WHGroup(Factorization::single(3)));
    EXPECT_EQ(single.size(), 2u + 8u);
    EXPECT_NO_THROW(find(single, "F"));
    EXPECT_NO_THROW(find(single, "S"));
    EXPECT_NO_THROW(find(single, "D(1,2)"));
    const auto pair = generators(WHGroup(Factorization({2, 2})));
    EXPECT_NO_THROW(find(pair, "F@1"));
    EXPECT_NO_THROW(find(pair, "SWAP(0,1)"));
}

TEST(clifford, identity_maps_every_index_to_itself) {
    const WHGroup g(Factorization::single(5));
    const CliffordElement id{ComplexMatrix::Identity(5, 5), "I"};
    for (int a = 0; a < g.size(); ++a) {
        const ConjugatedIndex r = conjugate_index(id, g, g.index(a));
        EXPECT_EQ(r.index, g.index(a));
        EXPECT_LT(std::abs(r.phase - Complex(1.0)), 1e-12);
    }
}

TEST(clifford, random_unitary_is_not_clifford) {
    for (int d : {2, 3}) {
        const WHGroup g(Factorization::single(d));
        const CliffordElement u{testutil::random_unitary(d, 11), "U"};
        EXPECT_THROW(conjugate_index(u, g, idx(1, 0)), NoMatch);
    }
}

TEST(clifford, non_prime_factor_is_unsupported) {
    EXPECT_THROW(generators(WHGroup(Factorization::single(4))), UnsupportedDimension);
}

TEST(clifford, magic_is_invariant) {
    for (int d : {2, 3, 5}) {
        const WHGroup g(Factorization::single(d));
        for (const CliffordElement& c : generators(g)) {
            for (std::uint64_t seed = 0; seed < 20; ++seed) {
                const PureState psi = haar_random_state(d, seed);
                const PureState image = apply(c, psi);
                for (double alpha : {2.0, 3.0}) {
                    ASSERT_LT(std::abs(stabilizer_entropy(g, image, alpha).value -
                                       stabilizer_entropy(g, psi, alpha).value),
                              1e-10)
                        << c.label;
                }
            }
        }
    }
}

TEST(clifford, stabilizer_states_map_to_stabilizer_states) {
    for (const auto& factors : std::vector<std::vector<int>>{{2}, {3}, {2, 3}}) {
        const WHGroup g(Factorization{factors});
        const auto states = enumerate_stabilizer_states(g);
        for (const CliffordElement& c : generators(g)) {
            for (const StabilizerState& s : states) {
                const PureState image = apply(c, s.state);
                int matches = 0;
                for (const StabilizerState& t : states) {
                    if (fidelity(image, t.state) > 1.0 - 1e-9) ++matches;
                }
                ASSERT_EQ(matches, 1) << c.label;
            }
        }
    }
}

TEST(clifford, apply_checks_dimension) {
    const CliffordElement f{fourier_matrix(2), "F"};
    EXPECT_THROW(apply(f, PureState::basis(3, 0)), DimensionMismatch);
    const PureState out = apply(f, PureState::basis(2, 0));
    EXPECT_NEAR(std::abs(out[0]), 1.0 / std::sqrt(2.0), 1e-15);
}
