#pragma once

#include <complex>

#include "altlin/linstruct.hpp"

namespace altlin {

/// Pointwise values of the structure tensors (dilation field, symplectic
/// form, complex structure, metric, Poisson tensor) in a fixed chart. For
/// transported frames all components are expressed in the original chart.
struct TensorFrame {
    Vec point;
    Vec delta;          // dilation field components
    Mat omega;          // antisymmetric, nondegenerate
    Mat J;              // J*J = -I
    Mat g;              // symmetric positive definite, g*J = omega
    Mat lambda_tensor;  // Poisson tensor, (-omega)^{-1}
    double D = 1.0;     // det of the chart-change Jacobian
};

/// Canonical frame at a point of R^{2n} (coordinates ordered q^1..q^n,
/// p_1..p_n): delta = point, omega = J = [[0,I],[-I,0]], g = I, D = 1.
TensorFrame standard_frame(const Vec& point);

/// Frame transported by a diffeomorphism, evaluated at `point` in the image
/// chart. Convention: A = Jacobian of the map at w = inverse(point) sends
/// new-chart tangent components to original-chart ones. Then
///   J' = A J A^{-1},  g' = A^{-T} A^{-1},  omega' = A^{-T} J A^{-1},
///   delta' = A w,     Lambda' = (-omega')^{-1},  D = det A.
/// In 2D omega' reduces to D^{-1} omega and Lambda' to D Lambda; the 2D entry
/// formulas are used there (pushforward_frame_general always takes the matrix
/// route, and the two agree to machine precision).
TensorFrame pushforward_frame(const Diffeo& d, const Vec& point);
TensorFrame pushforward_frame_general(const Diffeo& d, const Vec& point);

/// df^T Lambda dg for gradients evaluated at the frame point.
double poisson_bracket(const TensorFrame& f, const Vec& df, const Vec& dg);

/// h(v1,v2) = g(v1,v2) + i omega(v1,v2); for the canonical frame this is
/// conj(z1) z2 with z = q + i p.
std::complex<double> hermitian_product(const TensorFrame& f,
                                       const Eigen::Vector2d& v1,
                                       const Eigen::Vector2d& v2);

struct CompatibilityReport {
    double gJ_vs_omega;              // max |g J - omega|
    double J_squared_plus_identity;  // max |J J + I|
    double omega_antisymmetry;       // max |omega + omega^T|
    double g_symmetry;               // max |g - g^T|
    double max() const;
};
CompatibilityReport compatibility_check(const TensorFrame& f);

}  // namespace altlin
