#include "altlin/geometry.hpp"

#include <cmath>

namespace altlin {

namespace {

Mat canonical_omega(int dim) {
    int n = dim / 2;
    Mat w = Mat::Zero(dim, dim);
    w.block(0, n, n, n) = Mat::Identity(n, n);
    w.block(n, 0, n, n) = -Mat::Identity(n, n);
    return w;
}

}  // namespace

TensorFrame standard_frame(const Vec& point) {
    const int dim = static_cast<int>(point.size());
    if (dim % 2 != 0) throw DomainError("standard_frame: odd-dimensional point");
    TensorFrame f;
    f.point = point;
    f.delta = point;
    f.omega = canonical_omega(dim);
    f.J = f.omega;      // same numeric matrix in these coordinates
    f.g = Mat::Identity(dim, dim);
    f.lambda_tensor = f.omega;  // (-omega)^{-1} equals omega here
    f.D = 1.0;
    return f;
}

TensorFrame pushforward_frame_general(const Diffeo& d, const Vec& point) {
    Vec w = d.inverse(point);
    Mat A = d.jacobian(w);
    const int dim = d.dim();

    double detA = A.determinant();
    if (std::abs(detA) < 1e-14)
        throw SingularJacobian("pushforward_frame: |det A| < 1e-14");

    Mat Ainv = A.inverse();
    Mat J0 = canonical_omega(dim);

    TensorFrame f;
    f.point = point;
    f.delta = A * w;
    f.J = A * J0 * Ainv;
    f.g = Ainv.transpose() * Ainv;
    f.omega = Ainv.transpose() * J0 * Ainv;
    f.lambda_tensor = (-f.omega).inverse();
    f.D = detA;
    return f;
}

TensorFrame pushforward_frame(const Diffeo& d, const Vec& point) {
    if (d.dim() != 2) return pushforward_frame_general(d, point);

    // 2D fast path with explicit Jacobian entries A = [[a,b],[d,c]].
    Vec w = d.inverse(point);
    Mat A = d.jacobian(w);
    const double a = A(0, 0), b = A(0, 1), dd = A(1, 0), c = A(1, 1);
    const double D = a * c - b * dd;
    if (std::abs(D) < 1e-14) throw SingularJacobian("pushforward_frame: |det A| < 1e-14");

    TensorFrame f;
    f.point = point;
    f.delta = A * w;

    f.J = Mat(2, 2);
    f.J << -(a * dd + b * c) / D, (a * a + b * b) / D,
           -(c * c + dd * dd) / D, (a * dd + b * c) / D;

    f.g = Mat(2, 2);
    f.g << (c * c + dd * dd) / (D * D), -(a * dd + b * c) / (D * D),
           -(a * dd + b * c) / (D * D), (a * a + b * b) / (D * D);

    Mat J0 = canonical_omega(2);
    f.omega = J0 / D;            // A^{-T} J A^{-1} collapses to det^{-1} J in 2D
    f.lambda_tensor = D * J0;
    f.D = D;
    return f;
}

double poisson_bracket(const TensorFrame& f, const Vec& df, const Vec& dg) {
    return df.dot(f.lambda_tensor * dg);
}

std::complex<double> hermitian_product(const TensorFrame& f,
                                       const Eigen::Vector2d& v1,
                                       const Eigen::Vector2d& v2) {
    double re = v1.dot(f.g * v2);
    double im = v1.dot(f.omega * v2);
    return {re, im};
}

double CompatibilityReport::max() const {
    return std::max(std::max(gJ_vs_omega, J_squared_plus_identity),
                    std::max(omega_antisymmetry, g_symmetry));
}

CompatibilityReport compatibility_check(const TensorFrame& f) {
    const int dim = static_cast<int>(f.omega.rows());
    Mat I = Mat::Identity(dim, dim);
    CompatibilityReport r;
    r.gJ_vs_omega = (f.g * f.J - f.omega).cwiseAbs().maxCoeff();
    r.J_squared_plus_identity = (f.J * f.J + I).cwiseAbs().maxCoeff();
    r.omega_antisymmetry = (f.omega + f.omega.transpose()).cwiseAbs().maxCoeff();
    r.g_symmetry = (f.g - f.g.transpose()).cwiseAbs().maxCoeff();
    return r;
}

}  // namespace altlin
