#pragma once

#include <utility>
#include <vector>

#include "altlin/catalog.hpp"
#include "altlin/linstruct.hpp"

namespace altlin {

struct FlowProblem {
    std::function<Vec(const Vec&)> field;
    double t0 = 0.0;
    double t1 = 1.0;
    double dt = 1e-3;
    Vec initial;
    double bound = 1e9;  // NonFiniteState when |state| exceeds this
};

struct Trajectory {
    std::vector<double> t;
    std::vector<Vec> x;
};

/// Classical fixed-step RK4 (deterministic output; no adaptive stepping).
Trajectory integrate(const FlowProblem& p);

/// Matrix exponential by scaling-and-squaring of the Taylor series. Reference
/// route for the closed-form flow below; adequate for the small matrices here.
Mat expm(const Mat& A);

/// Planar charged particle in the adapted chart, state x = (Q1,Q2,U1,U2):
/// dx/dt = G x with
///   G = [ 0     B/2   1    0  ]
///       [ -B/2  0     0    1  ]
///       [ -B^2/4 0    0    B/2]
///       [ 0   -B^2/4 -B/2  0  ],
/// and F(t) = exp(tG) in closed form (entries in cos(Bt), sin(Bt), with a
/// series branch for |Bt| < 1e-6 covering B -> 0). F(t) is symplectic and a
/// one-parameter group.
struct MagneticSystem {
    double B = 0.0;
    Eigen::Matrix4d G;
    Eigen::Matrix4d F(double t) const;
};
MagneticSystem magnetic_matrices(double B);

/// Conserved combinations (chi1, chi2) = (U1 - B/2 Q2, U2 + B/2 Q1). For
/// B != 0 they are B times the Larmor-orbit center coordinates (chi2/B, -chi1/B).
std::pair<double, double> larmor_constants(const Eigen::Vector4d& x, double B);

/// Gauge-transported dynamics evaluated at a (Q,U) point (6 components):
///   (U - A(Q)) d/dQ + [(U - A(Q)) . dA/dQ^i] d/dU^i,
/// Hamiltonian for dQ^i ^ dU_i with H = 1/2 |U - A(Q)|^2. Not second order:
/// the dQ/dt components differ from U whenever A != 0.
Vec magnetic_pushforward_field(const MagneticGauge& m, const Vec& QU);
double magnetic_hamiltonian(const MagneticGauge& m, const Vec& QU);

/// Integral curves in the (q,p) plane of the transported frame fields (the
/// two columns of the chart-change Jacobian evaluated along the curve).
struct CurveSet {
    std::vector<Trajectory> dQ_curves;  // field = first Jacobian column
    std::vector<Trajectory> dP_curves;  // field = second Jacobian column
};
CurveSet figure1_curves(const KTransform& t, const std::vector<Eigen::Vector2d>& seeds,
                        double t0, double t1, double dt);

}  // namespace altlin
