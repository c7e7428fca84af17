#include "magiclab/stabilizer.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <stdexcept>

#include <Eigen/Eigenvalues>

#include "magiclab/errors.h"

namespace magiclab {

namespace {

constexpr double kProjectorTol = 1e-9;
constexpr double kDuplicateFidelity = 1.0 - 1e-9;

double phase_angle(Complex z) {
    double a = std::arg(z);
    if (a < 0.0) a += 2.0 * std::numbers::pi;
    if (a >= 2.0 * std::numbers::pi - 1e-12) a = 0.0;
    return a;
}

struct LocalState {
    PureState state;
    std::vector<std::pair<int, int>> indices;  // single-factor pairs
    std::vector<Complex> phases;
};

// Eigenvalues of a stabilizer element on its own eigenvector are unit modulus;
// strip the rounding.
Complex unit(Complex z) { return z / std::abs(z); }

std::vector<LocalState> prime_stabilizer_states(int p) {
    const WHGroup local(Factorization::single(p));
    std::vector<LocalState> out;
    out.reserve(static_cast<std::size_t>(p) * (p + 1));

    auto collect = [&](const std::vector<std::pair<int, int>>& members, std::vector<PureState> vecs) {
        for (PureState& v : vecs) {
            LocalState s{canonical_phase(v), members, {}};
            for (auto [a1, a2] : members) {
                int flat = a1 * p + a2;
                s.phases.push_back(unit(local.monomial(flat).expectation(s.state.vector())));
            }
            out.push_back(std::move(s));
        }
    };

    // Z eigenbasis, stabilized by {(0, s)}. Eigenvalue of Z on |j> is omega^j,
    // so the computational basis is already in argument order.
    std::vector<std::pair<int, int>> z_members;
    for (int s = 0; s < p; ++s) z_members.push_back({0, s});
    std::vector<PureState> basis;
    for (int j = 0; j < p; ++j) basis.push_back(PureState::basis(p, j));
    collect(z_members, std::move(basis));

    // X Z^m eigenbases, stabilized by {(k, k m)}.
    for (int m = 0; m < p; ++m) {
        std::vector<std::pair<int, int>> members;
        for (int k = 0; k < p; ++k) members.push_back({k, (k * m) % p});
        Eigen::ComplexEigenSolver<ComplexMatrix> solver(local.op(1 * p + m));
        if (solver.info() != Eigen::Success) {
            throw std::runtime_error("eigendecomposition failed");
        }
        std::vector<int> order(p);
        for (int j = 0; j < p; ++j) order[j] = j;
        std::sort(order.begin(), order.end(), [&](int x, int y) {
            return phase_angle(solver.eigenvalues()[x]) < phase_angle(solver.eigenvalues()[y]);
        });
        std::vector<PureState> vecs;
        for (int j : order) vecs.push_back(PureState::normalized(ComplexVector(solver.eigenvectors().col(j))));
        collect(members, std::move(vecs));
    }
    return out;
}

}  // namespace

bool is_prime(int n) {
    if (n < 2) return false;
    for (int q = 2; q * q <= n; ++q) {
        if (n % q == 0) return false;
    }
    return true;
}

void validate_subset(const WHGroup& g, const IsotropicSubset& s) {
    const int d = g.dim();
    if (static_cast<int>(s.indices.size()) != d) {
        throw std::invalid_argument("isotropic subset must have exactly d members");
    }
    if (!s.phases.empty() && s.phases.size() != s.indices.size()) {
        throw std::invalid_argument("isotropic subset phase list has wrong length");
    }
    std::set<DisplacementIndex> members;
    for (const DisplacementIndex& a : s.indices) {
        g.check_index(a);
        members.insert(a);
    }
    if (static_cast<int>(members.size()) != d) {
        throw std::invalid_argument("isotropic subset has repeated members");
    }
    if (!members.contains(DisplacementIndex::zero(g.factorization()))) {
        throw std::invalid_argument("isotropic subset must contain the zero index");
    }
    for (const DisplacementIndex& a : s.indices) {
        for (const DisplacementIndex& b : s.indices) {
            if (!commutes(g, a, b)) {
                throw std::invalid_argument("indices " + a.str() + " and " + b.str() + " do not commute");
            }
            if (!members.contains(compose_indices(g, a, b).index)) {
                throw std::invalid_argument("isotropic subset is not closed under addition");
            }
        }
    }
    for (std::size_t i = 0; i < s.indices.size(); ++i) {
        if (std::abs(std::abs(s.phase(i)) - 1.0) > kDefaultTol) {
            throw std::invalid_argument("isotropic subset phases must have unit modulus");
        }
    }
}

ComplexMatrix projector_from_subset(const WHGroup& g, const IsotropicSubset& s) {
    validate_subset(g, s);
    const int d = g.dim();
    ComplexMatrix proj = ComplexMatrix::Zero(d, d);
    for (std::size_t i = 0; i < s.indices.size(); ++i) {
        proj += std::conj(s.phase(i)) * g.op(s.indices[i]);
    }
    proj /= static_cast<double>(d);

    if ((proj - proj.adjoint()).cwiseAbs().maxCoeff() > kProjectorTol) {
        throw NotAProjector("subset operator is not Hermitian");
    }
    if ((proj * proj - proj).cwiseAbs().maxCoeff() > kProjectorTol) {
        throw NotAProjector("subset operator is not idempotent");
    }
    if (std::abs(proj.trace() - Complex(1.0, 0.0)) > kProjectorTol) {
        throw NotAProjector("subset operator does not have unit trace");
    }
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(proj, Eigen::EigenvaluesOnly);
    int rank = 0;
    for (double lambda : solver.eigenvalues()) {
        if (lambda < -kProjectorTol || lambda > 1.0 + kProjectorTol) {
            throw NotAProjector("subset operator has eigenvalue outside [0, 1]");
        }
        if (lambda > 0.5) ++rank;
    }
    if (rank != 1) {
        throw NotAProjector("subset operator has rank " + std::to_string(rank));
    }
    return proj;
}

std::vector<StabilizerState> enumerate_stabilizer_states(const WHGroup& g) {
    const Factorization& f = g.factorization();
    for (int n : f.factors()) {
        if (!is_prime(n)) {
            throw UnsupportedDimension("stabilizer enumeration needs prime factors, got " +
                                       std::to_string(n));
        }
    }

    std::vector<std::vector<LocalState>> per_factor;
    for (int n : f.factors()) per_factor.push_back(prime_stabilizer_states(n));

    // Seed with the first factor, then extend by each further factor on the right.
    struct Partial {
        PureState state;
        std::vector<DisplacementIndex> indices;
        std::vector<Complex> phases;
    };
    std::vector<Partial> partial;
    for (const LocalState& s : per_factor[0]) {
        Partial p{s.state, {}, s.phases};
        for (auto pair : s.indices) p.indices.push_back(DisplacementIndex{{pair}});
        partial.push_back(std::move(p));
    }
    for (std::size_t i = 1; i < per_factor.size(); ++i) {
        std::vector<Partial> next;
        next.reserve(partial.size() * per_factor[i].size());
        for (const Partial& left : partial) {
            for (const LocalState& right : per_factor[i]) {
                Partial p{tensor(left.state, right.state), {}, {}};
                for (std::size_t x = 0; x < left.indices.size(); ++x) {
                    for (std::size_t y = 0; y < right.indices.size(); ++y) {
                        DisplacementIndex a = left.indices[x];
                        a.pairs.push_back(right.indices[y]);
                        p.indices.push_back(std::move(a));
                        p.phases.push_back(left.phases[x] * right.phases[y]);
                    }
                }
                next.push_back(std::move(p));
            }
        }
        partial = std::move(next);
    }

    std::vector<StabilizerState> out;
    out.reserve(partial.size());
    for (Partial& p : partial) {
        bool duplicate = false;
        for (const StabilizerState& kept : out) {
            if (fidelity(kept.state, p.state) > kDuplicateFidelity) {
                duplicate = true;
                break;
            }
        }
        if (duplicate) continue;
        out.push_back(StabilizerState{std::move(p.state),
                                      IsotropicSubset{std::move(p.indices), std::move(p.phases)}});
    }
    return out;
}

}  // namespace magiclab
