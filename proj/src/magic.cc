#include "magiclab/magic.h"

#include <cmath>
#include <stdexcept>
#include <string>

#include "magiclab/errors.h"

namespace magiclab {

namespace {

constexpr double kZeroProbability = 1e-14;
constexpr double kNegativeClamp = 1e-9;

}  // namespace

std::vector<Complex> characteristic_function(const WHGroup& g, const PureState& psi) {
    if (psi.dim() != g.dim()) {
        throw DimensionMismatch("state has dimension " + std::to_string(psi.dim()) +
                                ", group has " + std::to_string(g.dim()));
    }
    const double d = g.dim();
    std::vector<Complex> chi(g.size());
    for (int a = 0; a < g.size(); ++a) {
        chi[a] = g.monomial(a).expectation(psi.vector()) / d;
    }
    return chi;
}

CharDistribution char_distribution(const WHGroup& g, const PureState& psi) {
    if (psi.dim() != g.dim()) {
        throw DimensionMismatch("state has dimension " + std::to_string(psi.dim()) +
                                ", group has " + std::to_string(g.dim()));
    }
    const double d = g.dim();
    CharDistribution out{g.dim(), std::vector<double>(g.size())};
    for (int a = 0; a < g.size(); ++a) {
        out.probs[a] = std::norm(g.monomial(a).expectation(psi.vector())) / d;
    }
    return out;
}

EntropyReport entropy_from_distribution(const CharDistribution& p, double alpha) {
    if (!(alpha >= 0.0) || !std::isfinite(alpha)) {
        throw std::domain_error("stabilizer entropy needs finite alpha >= 0");
    }
    const double log_d = std::log(static_cast<double>(p.dim));
    double value;
    if (alpha == 1.0) {
        KahanSum h;
        for (double x : p.probs) {
            if (x > kZeroProbability) h.add(-x * std::log(x));
        }
        value = h.value() - log_d;
    } else if (alpha == 0.0) {
        int support = 0;
        for (double x : p.probs) {
            if (x > kZeroProbability) ++support;
        }
        value = std::log(static_cast<double>(support)) - log_d;
    } else {
        KahanSum s;
        for (double x : p.probs) {
            if (x > kZeroProbability) s.add(std::pow(x, alpha));
        }
        value = std::log(s.value()) / (1.0 - alpha) - log_d;
    }
    if (value < 0.0 && value >= -kNegativeClamp) value = 0.0;

    EntropyReport report{alpha, value, std::nullopt, std::nullopt};
    if (alpha >= 2.0 && p.dim >= 2) {
        report.bound = magic_bound(p.dim, alpha);
        report.saturation_gap = *report.bound - value;
    }
    return report;
}

EntropyReport stabilizer_entropy(const WHGroup& g, const PureState& psi, double alpha) {
    return entropy_from_distribution(char_distribution(g, psi), alpha);
}

double magic_bound(int d, double alpha) {
    if (d < 2) {
        throw std::domain_error("magic_bound needs d >= 2");
    }
    if (!(alpha >= 2.0) || !std::isfinite(alpha)) {
        throw std::domain_error("magic_bound holds for alpha >= 2 only");
    }
    const double dd = d;
    const double inner = (1.0 + (dd - 1.0) * std::pow(dd + 1.0, 1.0 - alpha)) / dd;
    return std::log(inner) / (1.0 - alpha);
}

}  // namespace magiclab
