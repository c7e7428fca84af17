#ifndef MAGICLAB_SIC_H
#define MAGICLAB_SIC_H

#include <vector>

#include "magiclab/core_states.h"
#include "magiclab/wh_group.h"

namespace magiclab {

/// Ordered list of pure states of a common dimension. Repeated states are allowed.
class StateSet {
public:
    /// Throws DimensionMismatch when the states do not share a dimension.
    explicit StateSet(std::vector<PureState> states);

    int dim() const { return states_.empty() ? 0 : states_.front().dim(); }
    int size() const { return static_cast<int>(states_.size()); }
    const PureState& operator[](int i) const { return states_[i]; }
    const std::vector<PureState>& states() const { return states_; }

private:
    std::vector<PureState> states_;
};

/// sum over ordered pairs i != j of |<phi_i|phi_j>|^{4 alpha}. Requires exactly
/// d^2 states (std::invalid_argument otherwise) and real alpha >= 1
/// (std::domain_error otherwise).
double k_alpha(const StateSet& v, double alpha);

/// The minimum of k_alpha over d^2-element sets: d^2 (d-1) / (d+1)^{2 alpha - 1}.
/// Attained exactly by SICs.
double k_alpha_bound(int d, double alpha);

/// sum over all ordered pairs j, k (diagonal included) of |<phi_j|phi_k>|^{2t}.
/// Any cardinality; t must be a positive integer.
double frame_potential(const StateSet& v, int t);

/// The d^2 states D_a|phi> in flat index order.
StateSet wh_orbit(const WHGroup& g, const PureState& phi);

struct SicReport {
    bool is_sic = false;
    /// max over i != j of | |<phi_i|phi_j>|^2 - 1/(d+1) |
    double max_residual = 0.0;
};

/// Checks the equiangular SIC overlap condition on a d^2-element set.
SicReport verify_sic(const StateSet& v, double tol);

/// max over a != 0 of | |<phi|D_a|phi>|^2 - 1/(d+1) |. Zero exactly for
/// fiducials of a WH-covariant SIC.
double fiducial_residual(const WHGroup& g, const PureState& phi);

struct Lemma2Sides {
    double lhs;
    double rhs;
};

/// Two independent evaluations of K_alpha on the WH orbit of phi:
///   lhs = k_alpha(wh_orbit(g, phi), alpha)   (brute-force double sum)
///   rhs = d^3 exp((1 - 2 alpha) M_{2 alpha}(phi)) - d^2
Lemma2Sides lemma2_lhs_rhs(const WHGroup& g, const PureState& phi, double alpha);

}  // namespace magiclab

#endif
