#ifndef MAGICLAB_CLIFFORD_H
#define MAGICLAB_CLIFFORD_H

#include <string>
#include <vector>

#include "magiclab/core_states.h"
#include "magiclab/wh_group.h"

namespace magiclab {

/// A unitary in the normalizer of the WH group. Global phase is not canonical.
struct CliffordElement {
    ComplexMatrix matrix;
    /// Generator word, e.g. "F", "S", "D(1,0)", "F@1" (Fourier on factor 1), "SWAP(0,1)".
    std::string label;
};

/// Generating set for the Clifford group of `g`.
///
/// Single prime factor: the Fourier matrix F_jk = omega^{jk}/sqrt d, the
/// quadratic phase gate S (S_kk = tau^{k^2} for even d, omega^{k(k+1)/2} for
/// odd d), and every displacement operator. Composite groups of prime
/// factors get per-factor F and S padded with identities, every composite
/// displacement, and a swap for each pair of equal factors. Throws
/// UnsupportedDimension for non-prime factors.
std::vector<CliffordElement> generators(const WHGroup& g);

ComplexMatrix fourier_matrix(int n);
ComplexMatrix phase_gate(int n);

struct ConjugatedIndex {
    DisplacementIndex index;
    Complex phase;
};

/// Finds a' and gamma with U^dagger D_a U = gamma D_{a'} by projecting onto
/// the displacement basis. Throws NoMatch when no basis element has overlap
/// modulus d within 1e-8, i.e. U is not Clifford.
ConjugatedIndex conjugate_index(const CliffordElement& c, const WHGroup& g,
                                const DisplacementIndex& a);

/// U |psi>.
PureState apply(const CliffordElement& c, const PureState& psi);

}  // namespace magiclab

#endif
