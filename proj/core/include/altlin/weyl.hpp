#pragma once

#include <array>
#include <complex>
#include <utility>
#include <vector>

#include "altlin/catalog.hpp"
#include "altlin/dynamics.hpp"
#include "altlin/linstruct.hpp"

namespace altlin {

using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;

/// Uniform periodic grid x_k = -extent + k*delta, delta = 2*extent/N,
/// k = 0..N-1. Continuum-style operators need N >= 8 and even.
struct Grid1D {
    int N;
    double extent;

    Grid1D(int N, double extent);
    double delta() const { return 2.0 * extent / N; }
    double x(int k) const { return -extent + k * delta(); }
    Eigen::VectorXd points() const;
};

/// Finite matrix acting on sampled wavefunctions. Adjoints are taken with
/// respect to an explicit measure vector (diagonal of W = diag(w_k * delta)).
struct GridOperator {
    CMat matrix;

    GridOperator() = default;
    explicit GridOperator(CMat m) : matrix(std::move(m)) {}
    Eigen::Index dim() const { return matrix.rows(); }
    CVec apply(const CVec& psi) const { return matrix * psi; }

    friend GridOperator operator*(const GridOperator& a, const GridOperator& b) {
        return GridOperator(a.matrix * b.matrix);
    }
    friend GridOperator operator+(const GridOperator& a, const GridOperator& b) {
        return GridOperator(a.matrix + b.matrix);
    }
    friend GridOperator operator-(const GridOperator& a, const GridOperator& b) {
        return GridOperator(a.matrix - b.matrix);
    }
    friend GridOperator operator*(std::complex<double> c, const GridOperator& a) {
        return GridOperator(c * a.matrix);
    }
};

/// Exact clock/shift pair on Z_N (N >= 2): U = diag(exp(2 pi i k / N)),
/// (V psi)_k = psi_{k-1 mod N}. They satisfy U V = exp(2 pi i / N) V U
/// exactly and U^N = V^N = I.
std::pair<GridOperator, GridOperator> finite_weyl_pair(int N);

/// Displacement operator (W(x,pi) psi)(Q) = exp(-i pi (Q + x/2)/hbar) psi(Q+x)
/// with periodic wraparound; x snaps to the nearest grid multiple. Unitary for
/// the uniform weight.
GridOperator weyl_operator(const Grid1D& g, double x, double pi, double hbar);
double snap_displacement(const Grid1D& g, double x);

/// Pairing in the composition law
///   W(e1) W(e2) = exp( (i/2 hbar) (pi1 x2 - pi2 x1) ) W(e1+e2),
/// exact on the grid when the x are grid multiples and the pi are multiples
/// of pi*hbar/extent (so phases are ring-periodic).
double weyl_phase_pairing(double x1, double pi1, double x2, double pi2);

/// x_hat = multiplication by the grid values; pi_hat = -i hbar * central
/// difference (periodic). [x,pi] acts as i hbar times a second-order-accurate
/// averaging of the identity on smooth vectors.
std::pair<GridOperator, GridOperator> position_momentum(const Grid1D& g, double hbar);
/// Spectral (DFT-based) momentum variant for convergence studies.
GridOperator momentum_spectral(const Grid1D& g, double hbar);

enum class Measure { dq, dQ };

/// Measure vector w_k * delta. Measure::dq has weight 1; Measure::dQ carries
/// the deformed-chart comparison weight 1 + 3 lambda Q(x_k)^2, with Q(x) the
/// 1D restriction of the radial transform.
Eigen::VectorXd measure_vector(const Grid1D& g, Measure m, double lambda = 0.0);

/// A* = W^{-1} A^H W. Involution; reverses products.
GridOperator adjoint_wrt(const GridOperator& op, const Eigen::VectorXd& measure);

std::complex<double> inner(const CVec& f, const CVec& g, const Eigen::VectorXd& measure);
double norm_wrt(const CVec& f, const Eigen::VectorXd& measure);

/// lower = (x_hat + i pi_hat)/sqrt(2 hbar); raise = its adjoint for the given
/// measure. [lower, raise] is the identity up to grid resolution.
std::pair<GridOperator, GridOperator> fock_ladder(const Grid1D& g, double hbar,
                                                  const Eigen::VectorXd& measure);

/// Kernel vector of `lower` by SVD (smallest singular vector), normalized for
/// the measure, phase-fixed. DegenerateKernel when the two smallest singular
/// values are within 1e-8.
CVec ground_state(const GridOperator& lower, const Eigen::VectorXd& measure);

/// |n> = raise^n |0> / norm, n = 0..count-1.
std::vector<CVec> fock_states(const GridOperator& raise, const CVec& ground, int count,
                              const Eigen::VectorXd& measure);

/// exp(-(x-center)^2 / (2 sigma^2)) * exp(i k0 x), normalized for the uniform
/// measure.
CVec gaussian_state(const Grid1D& g, double center, double sigma, double k0 = 0.0);

/// Diagnostics of the two-measure construction at deformation lambda:
///  - worst |(pi^*' - pi) psi - m(x') psi| over a family of interior Gaussian
///    states, where m(x') = -6 i lambda hbar x' (1 + 3 lambda x'^2)^{-2} and
///    x' is multiplication by Q(x);
///  - largest deviation of the dQ-norm from 1 over dq-normalized Gaussians
///    (the identity map between the two Hilbert structures is no isometry);
///  - largest ||[pi, pi^*'] psi|| over the same family (the adjoint under the
///    second measure generates an operator outside the original algebra).
struct TwoMeasureReport {
    double mismatch_residual;
    double norm_deviation;
    double nonclosure_norm;
};
TwoMeasureReport two_measure_report(const Grid1D& g, double lambda, double hbar,
                                    bool spectral_momentum = false);

// ---------------------------------------------------------------------------
// 2D realization for the magnetic operator algebra
// ---------------------------------------------------------------------------

/// Square periodic grid, N points per axis; flattened index i*N + j for the
/// point (x_i, y_j).
struct Grid2D {
    int N;
    double extent;

    Grid2D(int N, double extent);
    double delta() const { return 2.0 * extent / N; }
    double x(int k) const { return -extent + k * delta(); }
    Eigen::Index dim() const { return static_cast<Eigen::Index>(N) * N; }
};

/// U^i = -i hbar d/dQ^i (central difference), Q^i = multiplication.
/// [Q^i, U^j] = i hbar delta^ij on smooth vectors (exactly zero for i != j).
struct MagneticOperators {
    GridOperator U1, U2, Q1, Q2;
    double hbar = 1.0;
    double B = 0.0;

    const GridOperator& op(int idx) const;  // order (U1, U2, Q1, Q2)
    /// Linear combination c . (U1,U2,Q1,Q2).
    GridOperator combine(const Eigen::Vector4d& c) const;
    /// H psi with H = 1/2 [(U1 + B/2 Q2)^2 + (U2 - B/2 Q1)^2], via matvecs.
    CVec apply_hamiltonian(const CVec& psi) const;
};
MagneticOperators magnetic_operators(const Grid2D& g, double B, double hbar);

/// Evolution matrix for the operator 4-vector (U1,U2,Q1,Q2):
/// g F(t)^T g with g = diag(1,1,-1,-1) and F(t) the classical flow.
Eigen::Matrix4d heisenberg_matrix(const MagneticSystem& s, double t);

/// X(t) = heisenberg_matrix(s,t) applied to the operator 4-vector. The
/// generator identity (i/hbar) [H, X_a] = -(g G^T g)_{ab} X_b holds on smooth
/// vectors, matching the classical equations of motion.
std::array<GridOperator, 4> heisenberg_evolution(const MagneticSystem& s,
                                                 const MagneticOperators& ops, double t);

CVec gaussian_state_2d(const Grid2D& g, double cx, double cy, double sigma);

}  // namespace altlin
