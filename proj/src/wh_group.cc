#include "magiclab/wh_group.h"

#include <climits>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace magiclab {

namespace {

long long mod(long long x, long long n) {
    long long r = x % n;
    return r < 0 ? r + n : r;
}

// Multiplicative inverse of 2 modulo odd n.
int half_mod(int n) { return (n + 1) / 2; }

// Phase of column k of D_(a1,a2) for a single factor of size n, as an exact
// exponent of the (2n)-th root of unity.
long long column_phase_exponent(int n, int a1, int a2, int k, PhaseConvention convention) {
    const long long twice_n = 2LL * n;
    if (convention == PhaseConvention::Tau) {
        // tau = -exp(i pi/n) = exp(2 pi i (n+1) / 2n); omega = tau^2.
        return mod(static_cast<long long>(n + 1) * a1 * a2 + 2LL * a2 * k, twice_n);
    }
    return mod(2LL * (static_cast<long long>(half_mod(n)) * a1 * a2 + static_cast<long long>(a2) * k),
               twice_n);
}

ComplexMatrix single_displacement(int n, int a1, int a2, PhaseConvention convention) {
    ComplexMatrix m = ComplexMatrix::Zero(n, n);
    for (int k = 0; k < n; ++k) {
        m((k + a1) % n, k) = root_of_unity(2 * n, column_phase_exponent(n, a1, a2, k, convention));
    }
    return m;
}

Monomial monomial_from_dense(const ComplexMatrix& m) {
    const int d = static_cast<int>(m.rows());
    Monomial out;
    out.target.assign(d, -1);
    out.phase.assign(d, Complex(0.0, 0.0));
    for (int col = 0; col < d; ++col) {
        for (int row = 0; row < d; ++row) {
            if (m(row, col) != Complex(0.0, 0.0)) {
                out.target[col] = row;
                out.phase[col] = m(row, col);
                break;
            }
        }
    }
    return out;
}

}  // namespace

Factorization::Factorization(std::vector<int> factors) : factors_(std::move(factors)), dim_(1) {
    if (factors_.empty()) {
        throw std::invalid_argument("Factorization: no factors");
    }
    for (int n : factors_) {
        if (n < 2) {
            throw std::invalid_argument("Factorization: factor " + std::to_string(n) + " < 2");
        }
        if (dim_ > INT_MAX / n) {
            throw std::invalid_argument("Factorization: product overflows");
        }
        dim_ *= n;
    }
}

std::string Factorization::str() const {
    std::string s;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(factors_[i]);
    }
    return s;
}

Factorization parse_factorization(const std::string& text) {
    std::vector<int> factors;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(item, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad factor '" + item + "'");
        }
        if (used != item.size()) {
            throw std::invalid_argument("bad factor '" + item + "'");
        }
        factors.push_back(v);
    }
    return Factorization(std::move(factors));
}

DisplacementIndex DisplacementIndex::zero(const Factorization& f) {
    return DisplacementIndex{std::vector<std::pair<int, int>>(f.size(), {0, 0})};
}

bool DisplacementIndex::is_zero() const {
    for (auto [p, q] : pairs) {
        if (p != 0 || q != 0) return false;
    }
    return true;
}

std::string DisplacementIndex::str() const {
    std::string s;
    for (auto [p, q] : pairs) {
        s += "(" + std::to_string(p) + "," + std::to_string(q) + ")";
    }
    return s;
}

void Monomial::apply(const ComplexVector& v, ComplexVector& out) const {
    const int d = static_cast<int>(target.size());
    out.resize(d);
    for (int k = 0; k < d; ++k) {
        out[target[k]] = phase[k] * v[k];
    }
}

Complex Monomial::expectation(const ComplexVector& v) const {
    const int d = static_cast<int>(target.size());
    Complex acc(0.0, 0.0);
    for (int k = 0; k < d; ++k) {
        acc += std::conj(v[target[k]]) * phase[k] * v[k];
    }
    return acc;
}

Complex root_of_unity(int n, long long k) {
    long long r = mod(k, n);
    if (r == 0) return Complex(1.0, 0.0);
    if (2 * r == n) return Complex(-1.0, 0.0);
    if (4 * r == n) return Complex(0.0, 1.0);
    if (4 * r == 3LL * n) return Complex(0.0, -1.0);
    double angle = 2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(n);
    return Complex(std::cos(angle), std::sin(angle));
}

ComplexMatrix shift_matrix(int n) { return single_displacement(n, 1, 0, PhaseConvention::Tau); }

ComplexMatrix clock_matrix(int n) { return single_displacement(n, 0, 1, PhaseConvention::Tau); }

WHGroup::WHGroup(Factorization factorization, PhaseConvention convention)
    : factorization_(std::move(factorization)), convention_(convention) {
    if (convention_ == PhaseConvention::HalfInverse) {
        for (int n : factorization_.factors()) {
            if (n % 2 == 0) {
                throw std::invalid_argument("HalfInverse phase convention needs odd factors");
            }
        }
    }
    const int d = factorization_.dim();
    if (d > 46340 / d) {
        throw std::invalid_argument("WHGroup: dimension too large to materialize");
    }
    const int count = d * d;
    operators_.reserve(count);
    monomials_.reserve(count);
    for (int flat = 0; flat < count; ++flat) {
        DisplacementIndex a = index(flat);
        ComplexMatrix m;
        for (int i = 0; i < factorization_.size(); ++i) {
            auto [a1, a2] = a.pairs[i];
            ComplexMatrix local = single_displacement(factorization_[i], a1, a2, convention_);
            m = (i == 0) ? local : kron(m, local);
        }
        monomials_.push_back(monomial_from_dense(m));
        operators_.push_back(std::move(m));
    }
    negation_.resize(count);
    for (int flat = 0; flat < count; ++flat) {
        DisplacementIndex a = index(flat);
        for (int i = 0; i < factorization_.size(); ++i) {
            const int n = factorization_[i];
            a.pairs[i] = {(n - a.pairs[i].first) % n, (n - a.pairs[i].second) % n};
        }
        negation_[flat] = flat_index(a);
    }
}

void WHGroup::check_index(const DisplacementIndex& a) const {
    if (static_cast<int>(a.pairs.size()) != factorization_.size()) {
        throw std::out_of_range("displacement index " + a.str() + " has wrong factor count");
    }
    for (int i = 0; i < factorization_.size(); ++i) {
        const int n = factorization_[i];
        auto [p, q] = a.pairs[i];
        if (p < 0 || p >= n || q < 0 || q >= n) {
            throw std::out_of_range("displacement index " + a.str() + " out of range");
        }
    }
}

int WHGroup::flat_index(const DisplacementIndex& a) const {
    check_index(a);
    int flat = 0;
    for (int i = 0; i < factorization_.size(); ++i) {
        const int n = factorization_[i];
        flat = flat * n * n + a.pairs[i].first * n + a.pairs[i].second;
    }
    return flat;
}

DisplacementIndex WHGroup::index(int flat) const {
    const int k = factorization_.size();
    DisplacementIndex a{std::vector<std::pair<int, int>>(k)};
    for (int i = k - 1; i >= 0; --i) {
        const int n = factorization_[i];
        int local = flat % (n * n);
        flat /= n * n;
        a.pairs[i] = {local / n, local % n};
    }
    return a;
}

WHGroup build_group(const Factorization& factorization, PhaseConvention convention) {
    return WHGroup(factorization, convention);
}

ComposedIndex compose_indices(const WHGroup& g, const DisplacementIndex& a,
                              const DisplacementIndex& b) {
    g.check_index(a);
    g.check_index(b);
    const Factorization& f = g.factorization();
    ComposedIndex out{DisplacementIndex{std::vector<std::pair<int, int>>(f.size())},
                      Complex(1.0, 0.0)};
    for (int i = 0; i < f.size(); ++i) {
        const long long n = f[i];
        auto [a1, a2] = a.pairs[i];
        auto [b1, b2] = b.pairs[i];
        const long long c1 = (a1 + b1) % n;
        const long long c2 = (a2 + b2) % n;
        out.index.pairs[i] = {static_cast<int>(c1), static_cast<int>(c2)};
        // D_a D_b = t(a) t(b) omega^{a2 b1} X^{c1} Z^{c2}, and X^{c1} Z^{c2} = t(c)^{-1} D_c,
        // where t(.) is the convention's a1*a2 phase.
        long long exponent;  // in units of exp(2 pi i / 2n)
        if (g.convention() == PhaseConvention::Tau) {
            exponent = (n + 1) * (1LL * a1 * a2 + 1LL * b1 * b2 - c1 * c2) + 2LL * a2 * b1;
        } else {
            const long long h = half_mod(static_cast<int>(n));
            exponent = 2 * (h * (1LL * a1 * a2 + 1LL * b1 * b2 - c1 * c2) + 1LL * a2 * b1);
        }
        out.phase *= root_of_unity(static_cast<int>(2 * n), exponent);
    }
    return out;
}

std::vector<int> symplectic_form(const WHGroup& g, const DisplacementIndex& a,
                                 const DisplacementIndex& b) {
    g.check_index(a);
    g.check_index(b);
    const Factorization& f = g.factorization();
    std::vector<int> out(f.size());
    for (int i = 0; i < f.size(); ++i) {
        auto [a1, a2] = a.pairs[i];
        auto [b1, b2] = b.pairs[i];
        out[i] = static_cast<int>(mod(1LL * a1 * b2 - 1LL * a2 * b1, f[i]));
    }
    return out;
}

bool commutes(const WHGroup& g, const DisplacementIndex& a, const DisplacementIndex& b) {
    for (int r : symplectic_form(g, a, b)) {
        if (r != 0) return false;
    }
    return true;
}

Complex commutation_phase(const WHGroup& g, const DisplacementIndex& a,
                          const DisplacementIndex& b) {
    std::vector<int> form = symplectic_form(g, a, b);
    Complex phase(1.0, 0.0);
    for (int i = 0; i < g.factorization().size(); ++i) {
        phase *= root_of_unity(g.factorization()[i], -form[i]);
    }
    return phase;
}

DisplacementIndex negate(const WHGroup& g, const DisplacementIndex& a) {
    return g.index(g.flat_negate(g.flat_index(a)));
}

}  // namespace magiclab
