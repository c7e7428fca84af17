#include "magiclab/sic.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "magiclab/errors.h"
#include "magiclab/magic.h"

namespace magiclab {

StateSet::StateSet(std::vector<PureState> states) : states_(std::move(states)) {
    for (const PureState& s : states_) {
        if (s.dim() != states_.front().dim()) {
            throw DimensionMismatch("StateSet members must share a dimension");
        }
    }
}

namespace {

void require_d_squared(const StateSet& v, const char* what) {
    const long long d = v.dim();
    if (v.size() == 0 || v.size() != d * d) {
        throw std::invalid_argument(std::string(what) + ": need d^2 = " + std::to_string(d * d) +
                                    " states, got " + std::to_string(v.size()));
    }
}

}  // namespace

double k_alpha(const StateSet& v, double alpha) {
    require_d_squared(v, "k_alpha");
    if (!(alpha >= 1.0) || !std::isfinite(alpha)) {
        throw std::domain_error("k_alpha needs real alpha >= 1");
    }
    const int m = v.size();
    KahanSum sum;
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            if (i == j) continue;
            double overlap = std::norm(inner(v[i], v[j]));  // tr(phi_i phi_j)
            sum.add(std::pow(overlap, 2.0 * alpha));
        }
    }
    return sum.value();
}

double k_alpha_bound(int d, double alpha) {
    if (d < 2) {
        throw std::domain_error("k_alpha_bound needs d >= 2");
    }
    const double dd = d;
    return dd * dd * (dd - 1.0) / std::pow(dd + 1.0, 2.0 * alpha - 1.0);
}

double frame_potential(const StateSet& v, int t) {
    if (t < 1) {
        throw std::domain_error("frame_potential needs integer t >= 1");
    }
    const int m = v.size();
    if (m == 0) return 0.0;
    ComplexMatrix columns(v.dim(), m);
    for (int j = 0; j < m; ++j) columns.col(j) = v[j].vector();
    const ComplexMatrix gram = columns.adjoint() * columns;
    KahanSum sum;
    for (int j = 0; j < m; ++j) {
        for (int k = 0; k < m; ++k) {
            double g = std::abs(gram(j, k));
            double term = 1.0;
            for (int p = 0; p < 2 * t; ++p) term *= g;
            sum.add(term);
        }
    }
    return sum.value();
}

StateSet wh_orbit(const WHGroup& g, const PureState& phi) {
    if (phi.dim() != g.dim()) {
        throw DimensionMismatch("wh_orbit: state and group dimensions differ");
    }
    std::vector<PureState> orbit;
    orbit.reserve(g.size());
    ComplexVector image;
    for (int a = 0; a < g.size(); ++a) {
        g.monomial(a).apply(phi.vector(), image);
        orbit.push_back(PureState::normalized(image));
    }
    return StateSet(std::move(orbit));
}

SicReport verify_sic(const StateSet& v, double tol) {
    require_d_squared(v, "verify_sic");
    const double target = 1.0 / (v.dim() + 1.0);
    double worst = 0.0;
    for (int i = 0; i < v.size(); ++i) {
        for (int j = i + 1; j < v.size(); ++j) {
            worst = std::max(worst, std::abs(fidelity(v[i], v[j]) - target));
        }
    }
    return SicReport{worst <= tol, worst};
}

double fiducial_residual(const WHGroup& g, const PureState& phi) {
    if (phi.dim() != g.dim()) {
        throw DimensionMismatch("fiducial_residual: state and group dimensions differ");
    }
    const double target = 1.0 / (g.dim() + 1.0);
    double worst = 0.0;
    for (int a = 1; a < g.size(); ++a) {
        worst = std::max(worst, std::abs(std::norm(g.monomial(a).expectation(phi.vector())) - target));
    }
    return worst;
}

Lemma2Sides lemma2_lhs_rhs(const WHGroup& g, const PureState& phi, double alpha) {
    if (phi.dim() != g.dim()) {
        throw DimensionMismatch("lemma2_lhs_rhs: state and group dimensions differ");
    }
    const double d = g.dim();
    const double lhs = k_alpha(wh_orbit(g, phi), alpha);
    const double m2a = stabilizer_entropy(g, phi, 2.0 * alpha).value;
    const double rhs = d * d * d * std::exp((1.0 - 2.0 * alpha) * m2a) - d * d;
    return Lemma2Sides{lhs, rhs};
}

}  // namespace magiclab
