#pragma once

#include <complex>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "altlin/catalog.hpp"

namespace altlin {

/// Sparse polynomial in two phase-space variables, keyed by monomial
/// exponents (i,j) <-> q^i p^j. Coefficients are complex so star products are
/// representable; real inputs keep brackets real to rounding. Arithmetic is
/// exact for polynomials (no coefficient truncation).
class PhasePoly {
public:
    using Key = std::pair<int, int>;
    using Coeff = std::complex<double>;

    PhasePoly() = default;

    static PhasePoly constant(Coeff c);
    static PhasePoly monomial(int i, int j, Coeff c = 1.0);
    static PhasePoly q();
    static PhasePoly p();

    PhasePoly& operator+=(const PhasePoly& o);
    PhasePoly& operator-=(const PhasePoly& o);
    PhasePoly& operator*=(Coeff c);
    friend PhasePoly operator+(PhasePoly a, const PhasePoly& b) { return a += b; }
    friend PhasePoly operator-(PhasePoly a, const PhasePoly& b) { return a -= b; }
    friend PhasePoly operator*(PhasePoly a, Coeff c) { return a *= c; }
    friend PhasePoly operator*(Coeff c, PhasePoly a) { return a *= c; }
    friend PhasePoly operator*(const PhasePoly& a, const PhasePoly& b);

    PhasePoly dq() const;  // partial derivative in the first variable
    PhasePoly dp() const;

    Coeff eval(double q, double p) const;
    /// f(qs(.,.), ps(.,.)): exact polynomial composition.
    PhasePoly substitute(const PhasePoly& qs, const PhasePoly& ps) const;

    int degree() const;
    bool empty() const { return c_.empty(); }
    const std::map<Key, Coeff>& coefficients() const { return c_; }

    /// Largest coefficient-wise distance to another polynomial.
    double coeff_distance(const PhasePoly& o) const;
    double max_imag_coeff() const;

    /// Sorted "(i,j):re<sign>im i" lines, 17 significant digits. Stable golden
    /// format.
    std::string serialize() const;

private:
    std::map<Key, Coeff> c_;
    void trim(const Key& k);
};

/// Moyal star product: exact terminating bidifferential series for
/// polynomials,
///   f * g = sum_k (i hbar / 2)^k / k! sum_j C(k,j) (-1)^(k-j)
///           (dq^j dp^(k-j) f) (dp^j dq^(k-j) g).
/// Leading correction to f g is (i hbar / 2) {f,g}.
PhasePoly star(const PhasePoly& f, const PhasePoly& g, double hbar);

/// (f*g - g*f)/(i hbar). Real for real inputs; equals the Poisson bracket
/// exactly when both arguments have degree <= 2. hbar = 0 -> DivisionByZero.
PhasePoly moyal_bracket(const PhasePoly& f, const PhasePoly& g, double hbar);

/// Classical bracket df/dq dg/dp - df/dp dg/dq.
PhasePoly poisson_bracket(const PhasePoly& f, const PhasePoly& g);

enum class Chart { qp, QP };

/// Star product with derivatives taken in the named chart's variables. The
/// polynomial algebra is chart-blind, so this is `star` in both cases; the
/// chart tag documents which variables the arguments live in.
PhasePoly star_in_chart(const PhasePoly& f, const PhasePoly& g, double hbar, Chart chart);

/// Base-chart polynomial f(q,p) rewritten in the deformed chart: exact
/// composition with (q,p) = (1 + lambda R^2)(Q,P), which is polynomial.
PhasePoly compose_into_chart(const PhasePoly& f_qp, const KTransform& t);

/// Classical limit of the deformed-chart Moyal bracket of two base-chart
/// polynomials, evaluated at a base-chart point: compute the bracket at each
/// finite hbar, evaluate at the mapped point, Richardson-extrapolate in
/// hbar^2. Converges to det(chart Jacobian) times the base bracket.
double chart_limit_bracket(const PhasePoly& f_qp, const PhasePoly& g_qp, const KTransform& t,
                           const Eigen::Vector2d& qp_point, const std::vector<double>& hbars);

/// Log-log slope of ||{f,g}_M - {f,g}_PB||_coeff against hbar (least squares
/// over the supplied values). Order 2 for any polynomial pair with a
/// nonvanishing correction.
double fitted_classical_order(const PhasePoly& f, const PhasePoly& g,
                              const std::vector<double>& hbars);

/// Pointwise star product of sampled (not necessarily polynomial) functions:
/// series truncated at `max_order`, derivatives from order-4 centered
/// finite-difference stencils with the given step. Approximate by nature.
std::complex<double> sampled_star(const std::function<double(double, double)>& f,
                                  const std::function<double(double, double)>& g,
                                  double q, double p, double hbar,
                                  int max_order = 3, double step = 1e-3);

}  // namespace altlin
