#include "altlin/lagrangian.hpp"

#include <cmath>
#include <utility>

namespace altlin {

namespace {

double fd_step(double x) { return 1e-5 * std::max(1.0, std::abs(x)); }

void check_regular(const Mat& H) {
    if (std::abs(H.determinant()) <= 1e-10)
        throw SingularHessian("velocity Hessian is singular at the queried point");
}

}  // namespace

LagrangianModel::LagrangianModel(int n, ScalarFn L) : n_(n), L_(std::move(L)) {}

LagrangianModel::LagrangianModel(int n, ScalarFn L, VectorFn momenta, MatrixFn hessian,
                                 MatrixFn mixed, bool momenta_globally_invertible)
    : n_(n),
      L_(std::move(L)),
      momenta_(std::move(momenta)),
      hessian_(std::move(hessian)),
      mixed_(std::move(mixed)),
      global_momenta_(momenta_globally_invertible) {}

Vec LagrangianModel::momenta(const Vec& q, const Vec& u) const {
    if (momenta_) return momenta_(q, u);
    Vec p(n_);
    for (int i = 0; i < n_; ++i) {
        double h = fd_step(u(i));
        Vec up = u, um = u;
        up(i) += h;
        um(i) -= h;
        p(i) = (L_(q, up) - L_(q, um)) / (2.0 * h);
    }
    return p;
}

Mat LagrangianModel::hessian(const Vec& q, const Vec& u) const {
    if (hessian_) return hessian_(q, u);
    // Central differences of the momenta map; symmetrized.
    Mat H(n_, n_);
    for (int k = 0; k < n_; ++k) {
        double h = fd_step(u(k));
        Vec up = u, um = u;
        up(k) += h;
        um(k) -= h;
        H.col(k) = (momenta(q, up) - momenta(q, um)) / (2.0 * h);
    }
    return 0.5 * (H + H.transpose());
}

Mat LagrangianModel::mixed(const Vec& q, const Vec& u) const {
    if (mixed_) return mixed_(q, u);
    Mat M(n_, n_);
    for (int j = 0; j < n_; ++j) {
        double h = fd_step(q(j));
        Vec qp = q, qm = q;
        qp(j) += h;
        qm(j) -= h;
        M.col(j) = (momenta(qp, u) - momenta(qm, u)) / (2.0 * h);
    }
    return M;
}

LagrangianModel LagrangianModel::free_particle(int n) {
    return LagrangianModel(
        n, [](const Vec&, const Vec& u) { return 0.5 * u.squaredNorm(); },
        [](const Vec&, const Vec& u) { return u; },
        [n](const Vec&, const Vec&) { return Mat::Identity(n, n); },
        [n](const Vec&, const Vec&) { return Mat::Zero(n, n); });
}

LagrangianModel LagrangianModel::magnetic(MagneticGauge gauge) {
    MagneticGauge g = std::move(gauge);
    return LagrangianModel(
        3,
        [g](const Vec& q, const Vec& u) {
            return 0.5 * u.squaredNorm() + u.dot(Vec(g.potential(q)));
        },
        [g](const Vec& q, const Vec& u) -> Vec { return u + Vec(g.potential(q)); },
        [](const Vec&, const Vec&) { return Mat::Identity(3, 3); },
        // M_ij = d/dq^j (u_i + A_i) = (dA)_ij
        [g](const Vec& q, const Vec&) -> Mat { return g.potential_jacobian(q); });
}

LagrangianModel LagrangianModel::anisotropic(Mat mass) {
    const int n = static_cast<int>(mass.rows());
    Mat m = 0.5 * (mass + mass.transpose());
    return LagrangianModel(
        n, [m](const Vec&, const Vec& u) { return 0.5 * u.dot(m * u); },
        [m](const Vec&, const Vec& u) -> Vec { return m * u; },
        [m](const Vec&, const Vec&) { return m; },
        [n](const Vec&, const Vec&) { return Mat::Zero(n, n); });
}

LagrangianModel LagrangianModel::by_id(const std::string& id, double B) {
    if (id == "free") return free_particle(3);
    if (id == "magnetic-symmetric") return magnetic(MagneticGauge::symmetric(B));
    if (id == "magnetic-quadratic-gauge") return magnetic(MagneticGauge::quadratic());
    throw ConfigError("unknown Lagrangian id: " + id);
}

Vec AdaptedFrame::X(int j) const {
    Vec v = Vec::Zero(2 * n());
    v(j) = 1.0;
    v.tail(n()) = X_u.col(j);
    return v;
}

Vec AdaptedFrame::Y(int j) const {
    Vec v = Vec::Zero(2 * n());
    v.tail(n()) = Y_u.col(j);
    return v;
}

Vec AdaptedFrame::alpha(int i) const {
    Vec v = Vec::Zero(2 * n());
    v(i) = 1.0;
    return v;
}

Vec AdaptedFrame::beta(int i) const {
    Vec v(2 * n());
    v.head(n()) = beta_q.row(i);
    v.tail(n()) = beta_u.row(i);
    return v;
}

AdaptedFrame adapted_frame(const LagrangianModel& m, const Vec& q, const Vec& u) {
    Mat H = m.hessian(q, u);
    check_regular(H);
    Mat M = m.mixed(q, u);
    Mat Hinv = H.inverse();

    AdaptedFrame f;
    f.q = q;
    f.u = u;
    f.Y_u = Hinv;        // symmetric, so column j is (Y^j)^k
    f.X_u = -Hinv * M;   // solves M_ij + H_ik (X_j)^k = 0
    f.beta_q = M;
    f.beta_u = H;
    return f;
}

Mat lagrangian_two_form(const LagrangianModel& m, const Vec& q, const Vec& u) {
    const int n = m.n();
    Mat H = m.hessian(q, u);
    Mat M = m.mixed(q, u);
    Mat W = Mat::Zero(2 * n, 2 * n);
    W.topLeftCorner(n, n) = M.transpose() - M;
    W.topRightCorner(n, n) = -H;
    W.bottomLeftCorner(n, n) = H;
    return W;
}

Mat two_form_from_frame(const AdaptedFrame& f) {
    const int d = 2 * f.n();
    Mat W = Mat::Zero(d, d);
    for (int i = 0; i < f.n(); ++i) {
        Vec b = f.beta(i), a = f.alpha(i);
        W += b * a.transpose() - a * b.transpose();
    }
    return W;
}

DarbouxPoint darboux_chart(const LagrangianModel& m, const Vec& q, const Vec& u) {
    check_regular(m.hessian(q, u));
    return {q, m.momenta(q, u), !m.momenta_globally_invertible()};
}

CommutatorReport commutator_check(const LagrangianModel& m, const Vec& q, const Vec& u, double h) {
    const int n = m.n();
    const int dim = 2 * n;

    // All 2n frame fields as functions of the phase-space point.
    auto field = [&](int idx, const Vec& x) -> Vec {
        AdaptedFrame f = adapted_frame(m, x.head(n), x.tail(n));
        return idx < n ? f.X(idx) : f.Y(idx - n);
    };

    Vec x0(dim);
    x0 << q, u;

    // Jacobians of the field components by central differences.
    auto field_jacobian = [&](int idx) {
        Mat J(dim, dim);
        for (int c = 0; c < dim; ++c) {
            Vec xp = x0, xm = x0;
            xp(c) += h;
            xm(c) -= h;
            J.col(c) = (field(idx, xp) - field(idx, xm)) / (2.0 * h);
        }
        return J;
    };

    std::vector<Vec> values(2 * n);
    std::vector<Mat> jacobians(2 * n);
    for (int i = 0; i < 2 * n; ++i) {
        values[i] = field(i, x0);
        jacobians[i] = field_jacobian(i);
    }

    double worst = 0.0;
    for (int i = 0; i < 2 * n; ++i)
        for (int j = i + 1; j < 2 * n; ++j) {
            Vec bracket = jacobians[j] * values[i] - jacobians[i] * values[j];
            worst = std::max(worst, bracket.norm());
        }
    return {worst};
}

}  // namespace altlin
