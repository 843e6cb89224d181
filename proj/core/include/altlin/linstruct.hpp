#pragma once

#include <Eigen/Dense>
#include <functional>
#include <span>
#include <string>

#include "altlin/errors.hpp"

namespace altlin {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

// Tolerances for the structure-axiom checks. All residual comparisons scale
// multiplicatively with max(1, |point|), so the thresholds are relative for
// large points and absolute near the origin.
struct ToleranceConfig {
    double eps_round = 1e-12;  // forward/inverse round trip
    double eps_fd    = 1e-6;   // finite-difference agreement (step 1e-5)
    double eps_assoc = 1e-9;   // associativity / commutativity / distributivity
    double eps_flow  = 1e-8;   // dilation flow group law
    double eps_lin   = 1e-8;   // linearity test on the dilation field

    ToleranceConfig scaled(double s) const {
        return {eps_round * s, eps_fd * s, eps_assoc * s, eps_flow * s, eps_lin * s};
    }
};

/// An invertible smooth map of R^n with forward, inverse and Jacobian
/// evaluation. Domains are declared per map; evaluation outside them (or a
/// diverging inverse iteration) raises DomainError.
class Diffeo {
public:
    using MapFn    = std::function<Vec(const Vec&)>;
    using JacFn    = std::function<Mat(const Vec&)>;
    using DomainFn = std::function<bool(const Vec&)>;

    /// Map with a closed-form inverse. Domain predicates default to all of R^n.
    Diffeo(int dim, MapFn forward, MapFn inverse, JacFn jacobian,
           std::string domain_note = "R^n",
           DomainFn preimage_domain = {}, DomainFn image_domain = {});

    /// Map whose inverse is evaluated by damped Newton iteration on `forward`
    /// (initial guess = target point, at most 50 steps, 1e-12 relative
    /// convergence; divergence raises DomainError).
    static Diffeo with_newton_inverse(int dim, MapFn forward, JacFn jacobian,
                                      std::string domain_note = "R^n",
                                      DomainFn preimage_domain = {},
                                      DomainFn image_domain = {});

    static Diffeo identity(int dim);

    int dim() const { return dim_; }
    const std::string& domain_note() const { return domain_note_; }

    Vec forward(const Vec& w) const;
    Vec inverse(const Vec& u) const;
    Mat jacobian(const Vec& w) const;

    bool in_preimage_domain(const Vec& w) const;
    bool in_image_domain(const Vec& u) const;

private:
    Diffeo() = default;

    int dim_ = 0;
    MapFn forward_;
    MapFn inverse_;  // empty => Newton fallback
    JacFn jacobian_;
    DomainFn preimage_domain_;
    DomainFn image_domain_;
    std::string domain_note_;

    Vec newton_inverse(const Vec& u) const;
};

struct LinearityResult {
    bool linear = true;
    bool empty_samples = false;  // warning flag: vacuous true
};

/// Linear structure transported through a diffeomorphism phi:
///   u (+) v      = phi(phi^-1(u) + phi^-1(v))
///   lam (*) u    = phi(lam * phi^-1(u))
/// The origin of the deformed structure is phi(0).
class LinearStructure {
public:
    explicit LinearStructure(Diffeo d);

    const Diffeo& diffeo() const { return diffeo_; }
    const Vec& origin() const { return origin_; }

    Vec add(const Vec& u, const Vec& v) const;
    Vec scale(double lam, const Vec& u) const;
    /// add(u, scale(-1, v)); subtract(u, u) == origin.
    Vec subtract(const Vec& u, const Vec& v) const;

    /// Dilation (Liouville) field: Dphi(w) * w with w = phi^-1(u). Equals the
    /// t-derivative at 0 of the flow below.
    Vec liouville_field(const Vec& u) const;

    /// One-parameter dilation group phi(e^t * phi^-1(u)).
    Vec dilation_flow(const Vec& u, double t) const;

    /// True iff the dilation field equals the undeformed one (u itself) at
    /// every sample, i.e. iff phi is linear. An empty sample list returns
    /// true with the warning flag set.
    LinearityResult is_linear(std::span<const Vec> samples, double tol = 1e-8) const;

private:
    Diffeo diffeo_;
    Vec origin_;
};

}  // namespace altlin
