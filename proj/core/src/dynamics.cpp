#include "altlin/dynamics.hpp"

#include <cmath>

namespace altlin {

Trajectory integrate(const FlowProblem& p) {
    if (!(p.dt > 0.0)) throw DomainError("integrate: dt must be positive");
    if (!(p.t1 >= p.t0)) throw DomainError("integrate: empty time span");

    // Full steps of dt plus one shortened step so the trajectory lands on t1
    // exactly even when the span is not a multiple of dt.
    const double span = p.t1 - p.t0;
    auto steps = static_cast<long>(std::floor(span / p.dt + 1e-9));
    double tail = span - steps * p.dt;
    if (tail <= 1e-12 * p.dt) tail = 0.0;

    Trajectory traj;
    traj.t.reserve(steps + 2);
    traj.x.reserve(steps + 2);

    Vec x = p.initial;
    traj.t.push_back(p.t0);
    traj.x.push_back(x);

    auto advance = [&](double h, double t_next) {
        Vec k1 = p.field(x);
        Vec k2 = p.field(x + 0.5 * h * k1);
        Vec k3 = p.field(x + 0.5 * h * k2);
        Vec k4 = p.field(x + h * k3);
        x = x + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        if (!x.allFinite() || x.norm() > p.bound)
            throw NonFiniteState("integrate: state left the configured bound");
        traj.t.push_back(t_next);
        traj.x.push_back(x);
    };

    for (long s = 0; s < steps; ++s) advance(p.dt, p.t0 + (s + 1) * p.dt);
    if (tail > 0.0) advance(tail, p.t1);
    return traj;
}

Mat expm(const Mat& A) {
    const int n = static_cast<int>(A.rows());
    double norm = A.cwiseAbs().rowwise().sum().maxCoeff();  // inf-norm
    int s = 0;
    while (norm > 0.5) {
        norm *= 0.5;
        ++s;
    }
    Mat B = A / std::pow(2.0, s);

    Mat result = Mat::Identity(n, n);
    Mat term = Mat::Identity(n, n);
    for (int k = 1; k <= 40; ++k) {
        term = term * B / static_cast<double>(k);
        result += term;
        if (term.cwiseAbs().maxCoeff() < 1e-20 * result.cwiseAbs().maxCoeff()) break;
    }
    for (int k = 0; k < s; ++k) result = result * result;
    return result;
}

MagneticSystem magnetic_matrices(double B) {
    MagneticSystem sys;
    sys.B = B;
    sys.G << 0.0, B / 2.0, 1.0, 0.0,
             -B / 2.0, 0.0, 0.0, 1.0,
             -B * B / 4.0, 0.0, 0.0, B / 2.0,
             0.0, -B * B / 4.0, -B / 2.0, 0.0;
    return sys;
}

Eigen::Matrix4d MagneticSystem::F(double t) const {
    const double x = B * t;
    // c1 = sin(x)/x and c2 = (1 - cos x)/x^2; series branch near x = 0 keeps
    // the 1/B entries finite through B -> 0.
    double c1, c2;
    if (std::abs(x) < 1e-6) {
        c1 = 1.0 - x * x / 6.0;
        c2 = 0.5 - x * x / 24.0;
    } else {
        c1 = std::sin(x) / x;
        c2 = (1.0 - std::cos(x)) / (x * x);
    }
    const double s = x * c1;              // sin(Bt)
    const double omc = x * x * c2;        // 1 - cos(Bt)
    const double diag = 1.0 - 0.5 * omc;  // (1 + cos(Bt))/2
    const double sin_over_B = t * c1;     // sin(Bt)/B
    const double omc_over_B = B * t * t * c2;  // (1 - cos(Bt))/B

    Eigen::Matrix4d F;
    F << diag, s / 2.0, sin_over_B, omc_over_B,
         -s / 2.0, diag, -omc_over_B, sin_over_B,
         -B * s / 4.0, -B * omc / 4.0, diag, s / 2.0,
         B * omc / 4.0, -B * s / 4.0, -s / 2.0, diag;
    return F;
}

std::pair<double, double> larmor_constants(const Eigen::Vector4d& x, double B) {
    return {x(2) - 0.5 * B * x(1), x(3) + 0.5 * B * x(0)};
}

Vec magnetic_pushforward_field(const MagneticGauge& m, const Vec& QU) {
    Eigen::Vector3d Q = QU.head<3>(), U = QU.tail<3>();
    Eigen::Vector3d rel = U - m.potential(Q);
    Eigen::Matrix3d dA = m.potential_jacobian(Q);
    Vec out(6);
    out.head<3>() = rel;
    // dU^i/dt = (U^k - A^k) dA^k/dQ^i  (columns of dA pair with the Q index)
    out.tail<3>() = dA.transpose() * rel;
    return out;
}

double magnetic_hamiltonian(const MagneticGauge& m, const Vec& QU) {
    Eigen::Vector3d Q = QU.head<3>(), U = QU.tail<3>();
    return 0.5 * (U - m.potential(Q)).squaredNorm();
}

CurveSet figure1_curves(const KTransform& t, const std::vector<Eigen::Vector2d>& seeds,
                        double t0, double t1, double dt) {
    CurveSet set;
    for (int col = 0; col < 2; ++col) {
        auto field = [&t, col](const Vec& qp) -> Vec {
            Eigen::Vector2d w = t.inverse(Eigen::Vector2d(qp));
            return t.jacobian(w).col(col);
        };
        for (const auto& seed : seeds) {
            FlowProblem p;
            p.field = field;
            p.t0 = t0;
            p.t1 = t1;
            p.dt = dt;
            p.initial = seed;
            (col == 0 ? set.dQ_curves : set.dP_curves).push_back(integrate(p));
        }
    }
    return set;
}

}  // namespace altlin
