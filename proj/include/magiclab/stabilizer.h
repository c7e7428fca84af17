#ifndef MAGICLAB_STABILIZER_H
#define MAGICLAB_STABILIZER_H

#include <vector>

#include "magiclab/core_states.h"
#include "magiclab/wh_group.h"

namespace magiclab {

/// A maximal set of d pairwise-commuting displacement indices together with
/// the eigenvalue assigned to each operator. The phase list parallels
/// `indices`; an empty phase list means all ones.
struct IsotropicSubset {
    std::vector<DisplacementIndex> indices;
    std::vector<Complex> phases;

    Complex phase(std::size_t i) const { return phases.empty() ? Complex(1.0, 0.0) : phases[i]; }
};

/// Throws std::invalid_argument unless `s` has exactly d members, contains the
/// zero index, is closed under addition, has pairwise vanishing symplectic
/// form, and carries unit-modulus phases.
void validate_subset(const WHGroup& g, const IsotropicSubset& s);

/// (1/d) sum_a conj(phase_a) D_a, so that D_a P = phase_a P. Throws NotAProjector unless the result is a
/// Hermitian rank-1 projector (idempotent within 1e-9, spectrum in
/// [-1e-9, 1+1e-9], trace 1).
ComplexMatrix projector_from_subset(const WHGroup& g, const IsotropicSubset& s);

struct StabilizerState {
    PureState state;
    /// Stabilizer group with D_a |state> = phase_a |state>.
    IsotropicSubset subset;
};

/// All pure stabilizer states of `g`, deduplicated up to global phase.
///
/// Every factor must be prime. For a prime factor p the d(d+1) states are the
/// eigenvectors of Z followed by those of X Z^m for m = 0..p-1; within a family
/// eigenvectors are ordered by the argument of their eigenvalue in [0, 2 pi).
/// Composite groups give every tensor product of factor states, first factor
/// slowest. Throws UnsupportedDimension on a non-prime factor.
std::vector<StabilizerState> enumerate_stabilizer_states(const WHGroup& g);

bool is_prime(int n);

}  // namespace magiclab

#endif
