#ifndef MAGICLAB_MAGIC_H
#define MAGICLAB_MAGIC_H

#include <optional>
#include <vector>

#include "magiclab/core_states.h"
#include "magiclab/wh_group.h"

namespace magiclab {

/// P_a(psi) = |<psi|D_a|psi>|^2 / d over the d^2 displacement indices, in the
/// group's flat index order.
struct CharDistribution {
    int dim = 0;
    std::vector<double> probs;
};

/// chi_a(psi) = tr(D_a psi) / d = <psi|D_a|psi> / d, flat index order.
std::vector<Complex> characteristic_function(const WHGroup& g, const PureState& psi);

CharDistribution char_distribution(const WHGroup& g, const PureState& psi);

struct EntropyReport {
    double alpha = 0.0;
    /// Stabilizer entropy in nats.
    double value = 0.0;
    /// Upper bound for this (d, alpha); empty when alpha < 2.
    std::optional<double> bound;
    /// bound - value; empty when alpha < 2.
    std::optional<double> saturation_gap;
};

/// Renyi-alpha entropy of P(psi) minus log d, in nats. alpha = 1 is the Shannon
/// limit and alpha = 0 the log of the support size. Entries of P below 1e-14
/// are treated as zero and results in [-1e-9, 0) are clamped to 0.
/// Throws std::domain_error for negative alpha, DimensionMismatch if
/// psi.dim() != g.dim().
EntropyReport stabilizer_entropy(const WHGroup& g, const PureState& psi, double alpha);

/// Same, from a precomputed distribution.
EntropyReport entropy_from_distribution(const CharDistribution& p, double alpha);

/// Closed-form maximum of the stabilizer entropy over pure states of dimension
/// d for alpha >= 2:
///   1/(1-alpha) * log[(1 + (d-1)(d+1)^{1-alpha}) / d].
/// Throws std::domain_error for alpha < 2 or d < 2.
double magic_bound(int d, double alpha);

}  // namespace magiclab

#endif
