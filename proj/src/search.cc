#include "magiclab/search.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <thread>

#include "magiclab/errors.h"
#include "magiclab/magic.h"
#include "magiclab/sic.h"

namespace magiclab {

namespace {

constexpr double kArmijo = 1e-4;
constexpr double kShrink = 0.5;
constexpr int kMaxHalvings = 80;
constexpr double kMaxStep = 1e3;

void check_dim(const WHGroup& g, Eigen::Index n) {
    if (n != g.dim()) {
        throw DimensionMismatch("search: state and group dimensions differ");
    }
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

ComplexVector step_along(const ComplexVector& phi, const std::vector<double>& dir, double step) {
    const Eigen::Index d = phi.size();
    ComplexVector out(d);
    for (Eigen::Index k = 0; k < d; ++k) {
        out[k] = phi[k] - step * Complex(dir[k], dir[k + d]);
    }
    return out / out.norm();
}

}  // namespace

void SearchConfig::validate() const {
    if (restarts < 1) throw std::invalid_argument("restarts must be >= 1");
    if (max_iters < 1) throw std::invalid_argument("max_iters must be >= 1");
    if (!(grad_tol > 0.0)) throw std::invalid_argument("grad_tol must be > 0");
    if (!(target_gap_tol > 0.0)) throw std::invalid_argument("target_gap_tol must be > 0");
    if (threads < 0) throw std::invalid_argument("threads must be >= 0");
}

double objective_raw(const WHGroup& g, const ComplexVector& phi) {
    check_dim(g, phi.size());
    double f = 0.0;
    for (int a = 1; a < g.size(); ++a) {
        const double p = std::norm(g.monomial(a).expectation(phi));
        f += p * p;
    }
    return f;
}

double objective(const WHGroup& g, const PureState& phi) { return objective_raw(g, phi.vector()); }

std::vector<double> gradient_raw(const WHGroup& g, const ComplexVector& phi) {
    check_dim(g, phi.size());
    const int d = g.dim();
    std::vector<Complex> w(d, Complex(0.0, 0.0));
    for (int a = 1; a < g.size(); ++a) {
        const Monomial& m = g.monomial(a);
        const Complex c = m.expectation(phi);
        const double weight = 4.0 * std::norm(c);
        if (weight == 0.0) continue;
        // (D phi)_{t_k} = p_k phi_k and (D^dagger phi)_k = conj(p_k) phi_{t_k}.
        for (int k = 0; k < d; ++k) {
            const int t = m.target[k];
            w[t] += weight * std::conj(c) * m.phase[k] * phi[k];
            w[k] += weight * c * std::conj(m.phase[k]) * phi[t];
        }
    }
    std::vector<double> out(2 * d);
    for (int k = 0; k < d; ++k) {
        out[k] = w[k].real();
        out[k + d] = w[k].imag();
    }
    return out;
}

std::vector<double> gradient(const WHGroup& g, const PureState& phi) { return gradient_raw(g, phi.vector()); }

double objective_gap_raw(const WHGroup& g, const ComplexVector& phi) {
    check_dim(g, phi.size());
    const double overlap = 1.0 / (g.dim() + 1.0);
    double gap = 0.0;
    for (int a = 1; a < g.size(); ++a) {
        const double r = std::norm(g.monomial(a).expectation(phi)) - overlap;
        gap += r * r;
    }
    return gap;
}

double objective_gap(const WHGroup& g, const PureState& phi) { return objective_gap_raw(g, phi.vector()); }

std::vector<double> gap_gradient_raw(const WHGroup& g, const ComplexVector& phi) {
    check_dim(g, phi.size());
    const int d = g.dim();
    const double overlap = 1.0 / (d + 1.0);
    std::vector<Complex> w(d, Complex(0.0, 0.0));
    for (int a = 1; a < g.size(); ++a) {
        const Monomial& m = g.monomial(a);
        const Complex c = m.expectation(phi);
        const double weight = 4.0 * (std::norm(c) - overlap);
        for (int k = 0; k < d; ++k) {
            const int t = m.target[k];
            w[t] += weight * std::conj(c) * m.phase[k] * phi[k];
            w[k] += weight * c * std::conj(m.phase[k]) * phi[t];
        }
    }
    std::vector<double> out(2 * d);
    for (int k = 0; k < d; ++k) {
        out[k] = w[k].real();
        out[k + d] = w[k].imag();
    }
    return out;
}

std::vector<double> project_to_tangent(const PureState& phi, const std::vector<double>& grad) {
    const int d = phi.dim();
    if (static_cast<int>(grad.size()) != 2 * d) {
        throw DimensionMismatch("project_to_tangent: gradient has wrong length");
    }
    double radial = 0.0;
    for (int k = 0; k < d; ++k) radial += phi[k].real() * grad[k] + phi[k].imag() * grad[k + d];
    std::vector<double> out(grad);
    for (int k = 0; k < d; ++k) {
        out[k] -= radial * phi[k].real();
        out[k + d] -= radial * phi[k].imag();
    }
    return out;
}

double objective_target(int d) { return (d - 1.0) / (d + 1.0); }

DescentOutcome descend(const WHGroup& g, const PureState& start, const SearchConfig& config,
                       bool record_history) {
    check_dim(g, start.dim());
    const int d = g.dim();
    const double target = objective_target(d);
    ComplexVector phi = start.vector();
    double f = objective_gap_raw(g, phi);
    std::vector<double> grad = project_to_tangent(PureState::normalized(phi), gap_gradient_raw(g, phi));
    double grad_norm = std::sqrt(dot(grad, grad));

    DescentOutcome out{start, target + f, grad_norm, 0, StopReason::MaxIterations, {}};
    if (record_history) out.history.push_back(target + f);

    std::vector<double> prev_x;
    std::vector<double> prev_grad;
    double step = grad_norm > 0.0 ? 0.1 / grad_norm : 1.0;

    int iter = 0;
    for (; iter < config.max_iters; ++iter) {
        if (grad_norm < config.grad_tol) {
            out.reason = StopReason::GradientTolerance;
            break;
        }
        std::vector<double> x(2 * d);
        for (int k = 0; k < d; ++k) {
            x[k] = phi[k].real();
            x[k + d] = phi[k].imag();
        }
        if (!prev_x.empty()) {
            // Barzilai-Borwein trial step from the last accepted move.
            std::vector<double> dx(2 * d), dg(2 * d);
            for (int k = 0; k < 2 * d; ++k) {
                dx[k] = x[k] - prev_x[k];
                dg[k] = grad[k] - prev_grad[k];
            }
            const double curvature = dot(dx, dg);
            step = curvature > 0.0 ? dot(dx, dx) / curvature : 2.0 * step;
        }
        step = std::min(step, kMaxStep);

        const double decrease = kArmijo * grad_norm * grad_norm;
        bool accepted = false;
        ComplexVector candidate;
        double f_candidate = f;
        for (int h = 0; h < kMaxHalvings; ++h) {
            candidate = step_along(phi, grad, step);
            f_candidate = objective_gap_raw(g, candidate);
            if (f_candidate <= f - step * decrease) {
                accepted = true;
                break;
            }
            step *= kShrink;
        }
        if (!accepted) {
            out.reason = StopReason::LineSearchStall;
            break;
        }
        prev_x = std::move(x);
        prev_grad = grad;
        phi = std::move(candidate);
        f = f_candidate;
        grad = project_to_tangent(PureState::normalized(phi), gap_gradient_raw(g, phi));
        grad_norm = std::sqrt(dot(grad, grad));
        if (record_history) out.history.push_back(target + f);
    }
    out.state = PureState::normalized(phi);
    out.objective = objective(g, out.state);
    out.projected_gradient_norm = grad_norm;
    out.iterations = iter;
    return out;
}

SearchResult find_fiducial(const SearchConfig& config) {
    config.validate();
    const WHGroup g(config.factorization);
    const int d = g.dim();

    std::vector<std::optional<DescentOutcome>> outcomes(config.restarts);
    std::atomic<int> next{0};
    auto worker = [&] {
        for (int i = next++; i < config.restarts; i = next++) {
            const PureState start = haar_random_state(d, config.seed + static_cast<std::uint64_t>(i));
            outcomes[i] = descend(g, start, config);
        }
    };
    int threads = config.threads > 0 ? config.threads
                                     : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    threads = std::min(threads, config.restarts);
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    }

    SearchResult result;
    result.restarts_used = config.restarts;
    result.target = objective_target(d);
    int best = 0;
    for (int i = 0; i < config.restarts; ++i) {
        result.restart_objectives.push_back(outcomes[i]->objective);
        if (outcomes[i]->objective < outcomes[best]->objective) best = i;
    }
    result.best_restart = best;
    result.iterations = outcomes[best]->iterations;
    result.best_state = canonical_phase(outcomes[best]->state);
    result.objective = objective(g, result.best_state);
    result.sic_residual = fiducial_residual(g, result.best_state);
    result.entropy_at_2 = stabilizer_entropy(g, result.best_state, 2.0).value;
    result.bound_at_2 = magic_bound(d, 2.0);
    result.converged = result.objective - result.target < config.target_gap_tol;
    return result;
}

}  // namespace magiclab
