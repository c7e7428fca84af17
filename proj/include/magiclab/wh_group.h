#ifndef MAGICLAB_WH_GROUP_H
#define MAGICLAB_WH_GROUP_H

#include <compare>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "magiclab/core_states.h"

namespace magiclab {

/// Ordered tensor factorization d = n_1 * ... * n_k of a Hilbert space.
class Factorization {
public:
    /// Throws std::invalid_argument if empty, if any factor is < 2, or if the
    /// product overflows int.
    explicit Factorization(std::vector<int> factors);

    /// The single-qudit factorization [d].
    static Factorization single(int d) { return Factorization({d}); }

    const std::vector<int>& factors() const { return factors_; }
    int size() const { return static_cast<int>(factors_.size()); }
    int operator[](int i) const { return factors_[i]; }
    int dim() const { return dim_; }
    std::string str() const;  // "2,2,2"

    bool operator==(const Factorization&) const = default;

private:
    std::vector<int> factors_;
    int dim_;
};

/// Parses "2,3" style lists.
Factorization parse_factorization(const std::string& text);

/// One (a1, a2) pair per tensor factor, each reduced modulo its factor.
struct DisplacementIndex {
    std::vector<std::pair<int, int>> pairs;

    static DisplacementIndex zero(const Factorization& f);
    bool is_zero() const;
    std::string str() const;  // "(1,0)" or "(1,0)(0,1)"

    auto operator<=>(const DisplacementIndex&) const = default;
};

/// How the a1*a2 phase of a single-factor displacement is fixed.
enum class PhaseConvention {
    /// D_a = tau^{a1 a2} X^{a1} Z^{a2}, tau = -exp(i pi / n). Valid for every n.
    Tau,
    /// D_a = omega^{h a1 a2} X^{a1} Z^{a2}, h = 2^{-1} mod n. Odd n only.
    HalfInverse,
};

/// A displacement operator stored as a generalized permutation:
/// D |k> = phase[k] |target[k]>.
struct Monomial {
    std::vector<int> target;
    std::vector<Complex> phase;

    /// D * v
    void apply(const ComplexVector& v, ComplexVector& out) const;
    /// <v| D |v>
    Complex expectation(const ComplexVector& v) const;
};

/// Phase-quotiented Weyl-Heisenberg group for a factorization of d: the d^2
/// displacement operators, materialized densely.
///
/// Operators are addressed either by DisplacementIndex or by a flat integer in
/// [0, d^2). The flat order is mixed-radix with the first factor most
/// significant and, within a factor of size n, position a1 * n + a2. Flat index
/// 0 is the identity, and flat order coincides with sorted DisplacementIndex
/// order.
class WHGroup {
public:
    explicit WHGroup(Factorization factorization,
                     PhaseConvention convention = PhaseConvention::Tau);

    const Factorization& factorization() const { return factorization_; }
    PhaseConvention convention() const { return convention_; }
    int dim() const { return factorization_.dim(); }
    /// d^2.
    int size() const { return static_cast<int>(operators_.size()); }

    const ComplexMatrix& op(int flat) const { return operators_.at(flat); }
    const ComplexMatrix& op(const DisplacementIndex& a) const { return op(flat_index(a)); }
    const Monomial& monomial(int flat) const { return monomials_.at(flat); }

    int flat_index(const DisplacementIndex& a) const;
    DisplacementIndex index(int flat) const;
    int flat_negate(int flat) const { return negation_.at(flat); }

    /// Throws std::out_of_range unless `a` has one in-range pair per factor.
    void check_index(const DisplacementIndex& a) const;

private:
    Factorization factorization_;
    PhaseConvention convention_;
    std::vector<ComplexMatrix> operators_;
    std::vector<Monomial> monomials_;
    std::vector<int> negation_;
};

/// Builds the group. Equivalent to the WHGroup constructor.
WHGroup build_group(const Factorization& factorization,
                    PhaseConvention convention = PhaseConvention::Tau);

/// Shift X|k> = |k+1> in dimension n.
ComplexMatrix shift_matrix(int n);
/// Clock Z|k> = omega^k |k> in dimension n.
ComplexMatrix clock_matrix(int n);
/// exp(2 pi i k / n) with k reduced mod n first.
Complex root_of_unity(int n, long long k);

struct ComposedIndex {
    DisplacementIndex index;
    Complex phase;
};

/// a + b together with the phase gamma of D_a D_b = gamma D_{a+b}. The phase is
/// evaluated from exact integer exponents.
ComposedIndex compose_indices(const WHGroup& g, const DisplacementIndex& a,
                              const DisplacementIndex& b);

/// Per factor i, (a1 b2 - a2 b1) mod n_i.
std::vector<int> symplectic_form(const WHGroup& g, const DisplacementIndex& a,
                                 const DisplacementIndex& b);

/// True when every factor's symplectic residue vanishes, i.e. D_a and D_b commute.
bool commutes(const WHGroup& g, const DisplacementIndex& a, const DisplacementIndex& b);

/// The scalar c with D_a D_b = c D_b D_a, namely prod_i omega_i^{-[a,b]_i}.
Complex commutation_phase(const WHGroup& g, const DisplacementIndex& a,
                          const DisplacementIndex& b);

/// -a, componentwise.
DisplacementIndex negate(const WHGroup& g, const DisplacementIndex& a);

}  // namespace magiclab

#endif
