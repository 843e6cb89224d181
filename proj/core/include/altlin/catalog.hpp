#pragma once

#include <functional>
#include <random>
#include <string>
#include <vector>

#include "altlin/linstruct.hpp"

namespace altlin {

/// Radial deformation of the plane,
///   (Q,P) -> (q,p) = (1 + lambda R^2) (Q,P),  R^2 = Q^2 + P^2,
/// inverted through the unique positive root K(r) of
///   lambda r^2 K^3 + K - 1 = 0,  r^2 = q^2 + p^2,
/// so that (Q,P) = K(r) (q,p). A global diffeomorphism for lambda >= 0.
class KTransform {
public:
    explicit KTransform(double lambda);  // lambda < 0 is rejected (DomainError)

    double lambda() const { return lambda_; }

    /// Positive root of the cubic above; K(0) = 1, strictly decreasing in r
    /// for lambda > 0. Safeguarded Newton with a bisection fallback on [0,1].
    double solve_K(double r) const;

    Eigen::Vector2d forward(const Eigen::Vector2d& QP) const;
    Eigen::Vector2d inverse(const Eigen::Vector2d& qp) const;

    /// Jacobian d(q,p)/d(Q,P):
    ///   [ 1 + lambda (3Q^2 + P^2)    2 lambda P Q              ]
    ///   [ 2 lambda P Q               1 + lambda (Q^2 + 3P^2)   ]
    Eigen::Matrix2d jacobian(const Eigen::Vector2d& QP) const;

    /// Restriction to the p = P = 0 line: Q(q) = q K(|q|).
    double chart_1d(double q) const;
    /// dq/dQ on that line: 1 + 3 lambda Q^2.
    double chart_1d_deriv(double Q) const { return 1.0 + 3.0 * lambda_ * Q * Q; }

    Diffeo as_diffeo() const;
    LinearStructure structure() const;

private:
    double lambda_;
};

/// x -> X = tanh x, mapping R onto (-1,1). The deformed addition is the 1D
/// relativistic composition of velocities (X+Y)/(1+XY).
class TanhStructure {
public:
    static double add_closed_form(double X, double Y);
    /// (X+Y+Z+XYZ) / (1+XY+XZ+YZ)
    static double triple_add_closed_form(double X, double Y, double Z);

    static Diffeo as_diffeo();
    static LinearStructure structure();
};

/// Fiber translation by a vector potential: (q,u) -> (Q,U) = (q, u + A(q)).
/// The induced addition and scaling pick up gauge-dependent bracket terms
/// that vanish exactly when A is linear in q.
class MagneticGauge {
public:
    using Potential    = std::function<Eigen::Vector3d(const Eigen::Vector3d&)>;
    using PotentialJac = std::function<Eigen::Matrix3d(const Eigen::Vector3d&)>;

    /// Analytic potential Jacobian optional; fallback is central differences
    /// with step 1e-6.
    explicit MagneticGauge(Potential A);
    MagneticGauge(Potential A, PotentialJac dA);

    /// Symmetric gauge for a constant field B along z: A = (B/2)(-q2, q1, 0).
    static MagneticGauge symmetric(double B);
    /// Nonlinear example gauge A = (0, (q1)^2, 0).
    static MagneticGauge quadratic();

    Eigen::Vector3d potential(const Eigen::Vector3d& q) const;
    Eigen::Matrix3d potential_jacobian(const Eigen::Vector3d& q) const;

    /// Deformed operations written directly in the (Q,U) chart:
    ///   add:   (Q+Q', U+U' + [A(Q+Q') - A(Q) - A(Q')])
    ///   scale: (lam Q, lam U + [A(lam Q) - lam A(Q)])
    Vec add(const Vec& x1, const Vec& x2) const;
    Vec scale(double lam, const Vec& x) const;

    Diffeo as_diffeo() const;
    LinearStructure structure() const;

private:
    Potential A_;
    PotentialJac dA_;
};

/// A catalog structure plus a sampler drawing points from a domain where all
/// deformed operations are well defined (used by the axiom suite).
struct CatalogEntry {
    std::string id;
    LinearStructure structure;
    std::function<Vec(std::mt19937_64&)> sample;
};

/// ids: "k-transform", "tanh", "magnetic-symmetric", "magnetic-custom"
/// (the custom entry is the quadratic example gauge). Unknown id -> ConfigError.
CatalogEntry make_catalog_entry(const std::string& id, double lambda = 0.1, double B = 1.0);
std::vector<std::string> catalog_ids();

}  // namespace altlin
