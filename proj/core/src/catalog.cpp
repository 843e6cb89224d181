#include "altlin/catalog.hpp"

#include <cmath>

namespace altlin {

// ---------------------------------------------------------------------------
// KTransform
// ---------------------------------------------------------------------------

KTransform::KTransform(double lambda) : lambda_(lambda) {
    if (!(lambda >= 0.0))
        throw DomainError("KTransform: lambda must be >= 0 (global invertibility)");
}

double KTransform::solve_K(double r) const {
    if (!(r >= 0.0)) throw DomainError("solve_K: r must be >= 0");
    const double a = lambda_ * r * r;
    if (a == 0.0) return 1.0;

    // g(K) = a K^3 + K - 1 is strictly increasing with g(0) = -1, g(1) = a >= 0,
    // so the root is bracketed in (0, 1].
    double lo = 0.0, hi = 1.0;
    double K = 1.0 / (1.0 + a);  // decent starting guess: ignores the cubic bend
    for (int iter = 0; iter < 100; ++iter) {
        double g = a * K * K * K + K - 1.0;
        if (g > 0.0) hi = K; else lo = K;
        double dg = 3.0 * a * K * K + 1.0;
        double Kn = K - g / dg;
        if (!(Kn > lo && Kn < hi)) Kn = 0.5 * (lo + hi);  // bisection safeguard
        if (std::abs(Kn - K) <= 1e-16 * K) { K = Kn; break; }
        K = Kn;
    }
    return K;
}

Eigen::Vector2d KTransform::forward(const Eigen::Vector2d& QP) const {
    double R2 = QP.squaredNorm();
    return (1.0 + lambda_ * R2) * QP;
}

Eigen::Vector2d KTransform::inverse(const Eigen::Vector2d& qp) const {
    return solve_K(qp.norm()) * qp;
}

Eigen::Matrix2d KTransform::jacobian(const Eigen::Vector2d& QP) const {
    const double Q = QP(0), P = QP(1);
    Eigen::Matrix2d A;
    A << 1.0 + lambda_ * (3.0 * Q * Q + P * P), 2.0 * lambda_ * P * Q,
         2.0 * lambda_ * P * Q,                 1.0 + lambda_ * (Q * Q + 3.0 * P * P);
    return A;
}

double KTransform::chart_1d(double q) const { return q * solve_K(std::abs(q)); }

Diffeo KTransform::as_diffeo() const {
    KTransform t = *this;
    return Diffeo(
        2,
        [t](const Vec& w) -> Vec { return t.forward(Eigen::Vector2d(w)); },
        [t](const Vec& u) -> Vec { return t.inverse(Eigen::Vector2d(u)); },
        [t](const Vec& w) -> Mat { return t.jacobian(Eigen::Vector2d(w)); },
        "R^2, radial deformation 1 + lambda R^2");
}

LinearStructure KTransform::structure() const { return LinearStructure(as_diffeo()); }

// ---------------------------------------------------------------------------
// TanhStructure
// ---------------------------------------------------------------------------

double TanhStructure::add_closed_form(double X, double Y) {
    return (X + Y) / (1.0 + X * Y);
}

double TanhStructure::triple_add_closed_form(double X, double Y, double Z) {
    return (X + Y + Z + X * Y * Z) / (1.0 + X * Y + X * Z + Y * Z);
}

Diffeo TanhStructure::as_diffeo() {
    const double margin = 1.0 - 1e-12;
    return Diffeo(
        1,
        [](const Vec& w) -> Vec { Vec u(1); u(0) = std::tanh(w(0)); return u; },
        [](const Vec& u) -> Vec { Vec w(1); w(0) = std::atanh(u(0)); return w; },
        [](const Vec& w) -> Mat {
            Mat J(1, 1);
            double th = std::tanh(w(0));
            J(0, 0) = 1.0 - th * th;
            return J;
        },
        "x in R onto X in (-1,1)",
        /*preimage*/ {},
        /*image*/ [margin](const Vec& u) { return std::abs(u(0)) <= margin; });
}

LinearStructure TanhStructure::structure() { return LinearStructure(as_diffeo()); }

// ---------------------------------------------------------------------------
// MagneticGauge
// ---------------------------------------------------------------------------

MagneticGauge::MagneticGauge(Potential A) : A_(std::move(A)) {
    Potential f = A_;
    dA_ = [f](const Eigen::Vector3d& q) {
        const double h = 1e-6;
        Eigen::Matrix3d J;
        for (int j = 0; j < 3; ++j) {
            Eigen::Vector3d qp = q, qm = q;
            qp(j) += h;
            qm(j) -= h;
            J.col(j) = (f(qp) - f(qm)) / (2.0 * h);
        }
        return J;
    };
}

MagneticGauge::MagneticGauge(Potential A, PotentialJac dA)
    : A_(std::move(A)), dA_(std::move(dA)) {}

MagneticGauge MagneticGauge::symmetric(double B) {
    return MagneticGauge(
        [B](const Eigen::Vector3d& q) { return Eigen::Vector3d(-0.5 * B * q(1), 0.5 * B * q(0), 0.0); },
        [B](const Eigen::Vector3d&) {
            Eigen::Matrix3d J = Eigen::Matrix3d::Zero();
            J(0, 1) = -0.5 * B;
            J(1, 0) = 0.5 * B;
            return J;
        });
}

MagneticGauge MagneticGauge::quadratic() {
    return MagneticGauge(
        [](const Eigen::Vector3d& q) { return Eigen::Vector3d(0.0, q(0) * q(0), 0.0); },
        [](const Eigen::Vector3d& q) {
            Eigen::Matrix3d J = Eigen::Matrix3d::Zero();
            J(1, 0) = 2.0 * q(0);
            return J;
        });
}

Eigen::Vector3d MagneticGauge::potential(const Eigen::Vector3d& q) const { return A_(q); }
Eigen::Matrix3d MagneticGauge::potential_jacobian(const Eigen::Vector3d& q) const { return dA_(q); }

Vec MagneticGauge::add(const Vec& x1, const Vec& x2) const {
    Eigen::Vector3d Q1 = x1.head<3>(), U1 = x1.tail<3>();
    Eigen::Vector3d Q2 = x2.head<3>(), U2 = x2.tail<3>();
    Vec out(6);
    out.head<3>() = Q1 + Q2;
    out.tail<3>() = U1 + U2 + (A_(Q1 + Q2) - A_(Q1) - A_(Q2));
    return out;
}

Vec MagneticGauge::scale(double lam, const Vec& x) const {
    Eigen::Vector3d Q = x.head<3>(), U = x.tail<3>();
    Vec out(6);
    out.head<3>() = lam * Q;
    out.tail<3>() = lam * U + (A_(lam * Q) - lam * A_(Q));
    return out;
}

Diffeo MagneticGauge::as_diffeo() const {
    Potential A = A_;
    PotentialJac dA = dA_;
    return Diffeo(
        6,
        [A](const Vec& w) -> Vec {
            Vec u(6);
            u.head<3>() = w.head<3>();
            u.tail<3>() = w.tail<3>() + A(w.head<3>());
            return u;
        },
        [A](const Vec& u) -> Vec {
            Vec w(6);
            w.head<3>() = u.head<3>();
            w.tail<3>() = u.tail<3>() - A(u.head<3>());
            return w;
        },
        [dA](const Vec& w) -> Mat {
            Mat J = Mat::Identity(6, 6);
            J.block<3, 3>(3, 0) = dA(w.head<3>());
            return J;
        },
        "TQ = R^3 x R^3, fiber shift by A(q)");
}

LinearStructure MagneticGauge::structure() const { return LinearStructure(as_diffeo()); }

// ---------------------------------------------------------------------------
// registry
// ---------------------------------------------------------------------------

namespace {

std::function<Vec(std::mt19937_64&)> box_sampler(int dim, double half_width) {
    return [dim, half_width](std::mt19937_64& rng) {
        std::uniform_real_distribution<double> dist(-half_width, half_width);
        Vec v(dim);
        for (int i = 0; i < dim; ++i) v(i) = dist(rng);
        return v;
    };
}

}  // namespace

CatalogEntry make_catalog_entry(const std::string& id, double lambda, double B) {
    if (id == "k-transform")
        return {id, KTransform(lambda).structure(), box_sampler(2, 2.0)};
    if (id == "tanh")
        return {id, TanhStructure::structure(), box_sampler(1, 0.99)};
    if (id == "magnetic-symmetric")
        return {id, MagneticGauge::symmetric(B).structure(), box_sampler(6, 2.0)};
    if (id == "magnetic-custom")
        return {id, MagneticGauge::quadratic().structure(), box_sampler(6, 2.0)};
    throw ConfigError("unknown catalog id: " + id);
}

std::vector<std::string> catalog_ids() {
    return {"k-transform", "tanh", "magnetic-symmetric", "magnetic-custom"};
}

}  // namespace altlin
