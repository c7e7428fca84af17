#ifndef MAGICLAB_SEARCH_H
#define MAGICLAB_SEARCH_H

#include <cstdint>
#include <optional>
#include <vector>

#include "magiclab/core_states.h"
#include "magiclab/wh_group.h"

namespace magiclab {

struct SearchConfig {
    Factorization factorization = Factorization::single(2);
    int restarts = 20;
    int max_iters = 5000;
    double grad_tol = 1e-10;
    double target_gap_tol = 1e-10;
    std::uint64_t seed = 0;
    /// Worker threads for independent restarts; 0 means hardware concurrency.
    int threads = 0;

    int dim() const { return factorization.dim(); }
    /// Throws std::invalid_argument on non-positive counts or tolerances.
    void validate() const;
};

struct SearchResult {
    PureState best_state = PureState::basis(1, 0);
    double objective = 0.0;
    double target = 0.0;
    double sic_residual = 0.0;
    double entropy_at_2 = 0.0;
    double bound_at_2 = 0.0;
    int restarts_used = 0;
    int best_restart = 0;
    int iterations = 0;  // of the best restart
    bool converged = false;
    /// Final objective of every restart, in restart order.
    std::vector<double> restart_objectives;
};

/// Why a single descent stopped.
enum class StopReason { GradientTolerance, LineSearchStall, MaxIterations };

struct DescentOutcome {
    PureState state;
    double objective;
    double projected_gradient_norm;
    int iterations;
    StopReason reason;
    /// target + objective_gap after each accepted step, starting with the
    /// initial value. Only filled when requested.
    std::vector<double> history;
};

/// f(phi) = sum over a != 0 of |<phi|D_a|phi>|^4. On the unit sphere f >=
/// (d-1)/(d+1), with equality exactly on WH-SIC fiducials, and
/// M_2(phi) = -log((1 + f(phi)) / d).
double objective(const WHGroup& g, const PureState& phi);

/// Same formula evaluated on an arbitrary (not necessarily normalized) vector.
double objective_raw(const WHGroup& g, const ComplexVector& phi);

/// Euclidean gradient of objective_raw with respect to the 2d real
/// coordinates, laid out as [Re phi_0 .. Re phi_{d-1}, Im phi_0 .. Im phi_{d-1}].
/// Not projected onto the sphere's tangent space.
std::vector<double> gradient(const WHGroup& g, const PureState& phi);
std::vector<double> gradient_raw(const WHGroup& g, const ComplexVector& phi);

/// Removes the radial component: g - <phi, g> phi in the real inner product.
std::vector<double> project_to_tangent(const PureState& phi, const std::vector<double>& grad);

/// (d-1)/(d+1).
double objective_target(int d);

/// sum over a != 0 of (|<phi|D_a|phi>|^2 - 1/(d+1))^2. On unit vectors this
/// equals objective - objective_target exactly, but it is evaluated from the
/// small SIC residuals and so keeps full relative precision near a fiducial.
double objective_gap(const WHGroup& g, const PureState& phi);
double objective_gap_raw(const WHGroup& g, const ComplexVector& phi);

/// Euclidean gradient of objective_gap_raw, same layout as gradient().
std::vector<double> gap_gradient_raw(const WHGroup& g, const ComplexVector& phi);

/// One projected-gradient descent from `start`. Armijo backtracking (c = 1e-4,
/// shrink 0.5) with a Barzilai-Borwein trial step; the iterate is renormalized
/// after each step. The line search works on objective_gap, which agrees with
/// objective - target on the sphere. Runs until the projected gradient norm
/// drops below grad_tol, the line search can no longer decrease the
/// objective, or max_iters. Reaching the target gap does not stop the descent:
/// the gap is quadratic in the distance to a fiducial while the SIC residual is
/// linear, so the iterate is polished until the gradient vanishes.
DescentOutcome descend(const WHGroup& g, const PureState& start, const SearchConfig& config,
                       bool record_history = false);

/// Multi-restart search for a state maximizing M_2 under the group of
/// `config.factorization`. Restart i starts from haar_random_state(d, seed + i);
/// the lowest objective wins with ties to the lowest restart index, so the
/// result does not depend on the thread count. converged <=> objective -
/// target < target_gap_tol. The best state's global phase is canonicalized.
SearchResult find_fiducial(const SearchConfig& config);

}  // namespace magiclab

#endif
