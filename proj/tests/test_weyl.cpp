#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "altlin/weyl.hpp"

using namespace altlin;
using namespace std::complex_literals;

namespace {

constexpr double kPi = std::numbers::pi;

double max_abs(const CMat& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace

TEST_CASE("clock and shift: exact exchange relation") {
    for (int N : {2, 3, 4, 8, 16}) {
        auto [U, V] = finite_weyl_pair(N);
        std::complex<double> w = std::polar(1.0, 2.0 * kPi / N);
        CHECK(max_abs(U.matrix * V.matrix - w * (V.matrix * U.matrix)) <= 1e-14);

        CMat Upow = CMat::Identity(N, N), Vpow = CMat::Identity(N, N);
        for (int k = 0; k < N; ++k) {
            Upow *= U.matrix;
            Vpow *= V.matrix;
        }
        CHECK(max_abs(Upow - CMat::Identity(N, N)) <= 1e-13);
        CHECK(max_abs(Vpow - CMat::Identity(N, N)) <= 1e-13);
    }

    auto [U2, V2] = finite_weyl_pair(2);
    CHECK(U2.matrix(0, 0) == std::complex<double>(1.0, 0.0));
    CHECK(std::abs(U2.matrix(1, 1) - std::complex<double>(-1.0, 0.0)) <= 1e-15);
    CHECK(V2.matrix(0, 1) == std::complex<double>(1.0, 0.0));  // swap
    CHECK(max_abs(U2.matrix * V2.matrix + V2.matrix * U2.matrix) <= 1e-15);
}

TEST_CASE("displacement operators: identity, unitarity, composition") {
    Grid1D g(64, 8.0);
    const double hbar = 1.0;

    CHECK(max_abs(weyl_operator(g, 0.0, 0.0, hbar).matrix - CMat::Identity(64, 64)) == 0.0);

    const double pi0 = kPi * hbar / g.extent;
    GridOperator W = weyl_operator(g, 4 * g.delta(), 3 * pi0, hbar);
    CHECK(max_abs(W.matrix.adjoint() * W.matrix - CMat::Identity(64, 64)) <= 1e-12);

    double x1 = 4 * g.delta(), p1 = 2 * pi0;
    double x2 = -6 * g.delta(), p2 = 5 * pi0;
    GridOperator W1 = weyl_operator(g, x1, p1, hbar);
    GridOperator W2 = weyl_operator(g, x2, p2, hbar);
    GridOperator W12 = weyl_operator(g, x1 + x2, p1 + p2, hbar);
    std::complex<double> phase =
        std::polar(1.0, weyl_phase_pairing(x1, p1, x2, p2) / (2.0 * hbar));
    CHECK(max_abs(W1.matrix * W2.matrix - phase * W12.matrix) <= 1e-10);

    // exchange relation with the full phase
    std::complex<double> xphase =
        std::polar(1.0, weyl_phase_pairing(x1, p1, x2, p2) / hbar);
    CHECK(max_abs(W1.matrix * W2.matrix - xphase * (W2.matrix * W1.matrix)) <= 1e-10);
}

TEST_CASE("displacement generator matches x U - pi Q on a smooth state") {
    Grid1D g(1024, 8.0);
    const double hbar = 1.0;
    auto [x, p] = position_momentum(g, hbar);
    CVec psi = gaussian_state(g, 0.3, 1.5);

    const double ex = g.delta(), epi = g.delta();
    CVec plus = weyl_operator(g, ex, epi, hbar).apply(psi);
    CVec minus = weyl_operator(g, -ex, -epi, hbar).apply(psi);
    CVec fd = (plus - minus) / 2.0;

    CVec gen = (1i / hbar) * (ex * (p.matrix * psi) - epi * (x.matrix * psi));
    CHECK((fd - gen).cwiseAbs().maxCoeff() <= 1e-4);
}

TEST_CASE("position and momentum on the grid") {
    Grid1D g(256, 10.0);
    const double hbar = 1.0;
    auto [x, p] = position_momentum(g, hbar);

    CVec ones = CVec::Constant(256, 1.0);
    CHECK((p.matrix * ones).cwiseAbs().maxCoeff() <= 1e-14);

    // commensurate plane wave: eigenvalue hbar sin(k delta)/delta
    const double k = 2.0 * kPi * 5 / (2.0 * g.extent);
    CVec wave(g.N);
    for (int j = 0; j < g.N; ++j) wave(j) = std::polar(1.0, k * g.x(j));
    CVec pw = p.matrix * wave;
    std::complex<double> eig = pw(64) / wave(64);
    CHECK(eig.real() == doctest::Approx(hbar * std::sin(k * g.delta()) / g.delta()).epsilon(1e-10));
    CHECK(std::abs(eig.imag()) <= 1e-10);

    // canonical commutator expectation on a narrow gaussian
    CVec psi = gaussian_state(g, 0.0, 1.5);
    Eigen::VectorXd mdq = measure_vector(g, Measure::dq);
    std::complex<double> expect =
        inner(psi, CVec(x.matrix * (p.matrix * psi) - p.matrix * (x.matrix * psi)), mdq);
    CHECK(std::abs(expect / (1i * hbar) - 1.0) <= 1e-3);
}

TEST_CASE("spectral momentum: exact eigenvalues, hermitian") {
    Grid1D g(64, 8.0);
    GridOperator p = momentum_spectral(g, 1.0);
    CHECK(max_abs(p.matrix - p.matrix.adjoint()) <= 1e-12);

    const double k = kPi * 3 / g.extent;
    CVec wave(g.N);
    for (int j = 0; j < g.N; ++j) wave(j) = std::polar(1.0, k * g.x(j));
    CHECK(((p.matrix * wave) - k * wave).cwiseAbs().maxCoeff() <= 1e-10);
}

TEST_CASE("grid construction rejects bad sizes") {
    CHECK_THROWS_AS(Grid1D(6, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(Grid1D(9, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(Grid1D(16, -1.0), std::invalid_argument);
    CHECK_THROWS_AS(Grid2D(7, 1.0), std::invalid_argument);
    CHECK_THROWS_AS((void)finite_weyl_pair(1), std::invalid_argument);
}

TEST_CASE("adjoints under the two measures") {
    Grid1D g(512, 10.0);
    const double lambda = 0.1, hbar = 1.0;
    auto [x, p] = position_momentum(g, hbar);
    Eigen::VectorXd mdq = measure_vector(g, Measure::dq);
    Eigen::VectorXd mdQ = measure_vector(g, Measure::dQ, lambda);

    // x is self-adjoint for both weights, pi for the uniform one
    CHECK(max_abs(adjoint_wrt(x, mdq).matrix - x.matrix) <= 1e-12);
    CHECK(max_abs(adjoint_wrt(x, mdQ).matrix - x.matrix) <= 1e-12);
    CHECK(max_abs(adjoint_wrt(p, mdq).matrix - p.matrix) <= 1e-12);

    // involution and product reversal
    GridOperator W = weyl_operator(g, 3 * g.delta(), kPi * hbar / g.extent, hbar);
    CHECK(max_abs(adjoint_wrt(adjoint_wrt(W, mdQ), mdQ).matrix - W.matrix) <= 1e-12);
    GridOperator AB(x.matrix * W.matrix);
    CHECK(max_abs(adjoint_wrt(AB, mdQ).matrix -
                  (adjoint_wrt(W, mdQ) * adjoint_wrt(x, mdQ)).matrix) <= 1e-12);

    // identity stays self-adjoint under any weight
    GridOperator id(CMat::Identity(g.N, g.N));
    CHECK(max_abs(adjoint_wrt(id, mdQ).matrix - id.matrix) == 0.0);
}

TEST_CASE("two-measure report: mismatch formula, non-isometry, non-closure") {
    Grid1D g(512, 10.0);
    TwoMeasureReport rep = two_measure_report(g, 0.1, 1.0);
    CHECK(rep.mismatch_residual <= 1e-2);
    CHECK(rep.norm_deviation > 0.05);
    CHECK(rep.nonclosure_norm > 0.1 * 0.1);

    // undeformed chart: the measures coincide and everything collapses
    TwoMeasureReport flat = two_measure_report(g, 0.0, 1.0);
    CHECK(flat.mismatch_residual <= 1e-12);
    CHECK(flat.norm_deviation <= 1e-12);
    CHECK(flat.nonclosure_norm <= 1e-12);
}

TEST_CASE("ladder pair: commutator, ground state, ladder normalization") {
    Grid1D g(256, 10.0);
    const double hbar = 1.0;
    Eigen::VectorXd mdq = measure_vector(g, Measure::dq);
    auto [lower, raise] = fock_ladder(g, hbar, mdq);

    CVec psi = gaussian_state(g, 0.0, 1.5);
    std::complex<double> expect = inner(
        psi, CVec(lower.matrix * (raise.matrix * psi) - raise.matrix * (lower.matrix * psi)),
        mdq);
    CHECK(std::abs(expect - 1.0) <= 1e-3);

    CVec ground = ground_state(lower, mdq);
    CHECK(norm_wrt(ground, mdq) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(norm_wrt(CVec(lower.matrix * ground), mdq) <= 1e-3);

    // overlap with the continuum gaussian kernel exp(-x^2 / 2 hbar)
    CVec kernel = gaussian_state(g, 0.0, std::sqrt(hbar));
    CHECK(std::abs(inner(ground, kernel, mdq)) >= 0.999);

    auto states = fock_states(raise, ground, 4, mdq);
    for (const auto& s : states)
        CHECK(norm_wrt(s, mdq) == doctest::Approx(1.0).epsilon(1e-12));
    // opposite parity: orthogonal to rounding; same parity: up to grid effects
    CHECK(std::abs(inner(states[0], states[1], mdq)) <= 1e-10);
    CHECK(std::abs(inner(states[1], states[3], mdq)) <= 5e-3);

    // ladder spectrum: |a|n>|^2 + 1/2 climbs the oscillator levels n + 1/2
    for (std::size_t n = 0; n < states.size(); ++n) {
        double level = std::pow(norm_wrt(CVec(lower.matrix * states[n]), mdq), 2) + 0.5;
        CHECK(level == doctest::Approx(n + 0.5).epsilon(2e-2));
    }
}

TEST_CASE("degenerate kernels are reported") {
    CMat m = CMat::Zero(8, 8);
    for (int i = 0; i < 6; ++i) m(i, i) = 1.0 + i;  // two exact zero singular values
    Eigen::VectorXd measure = Eigen::VectorXd::Constant(8, 0.1);
    CHECK_THROWS_AS((void)ground_state(GridOperator(m), measure), DegenerateKernel);
}

TEST_CASE("heisenberg evolution of the magnetic quadruple") {
    const double B = 1.0, hbar = 1.0;
    Grid2D g(32, 6.0);
    MagneticOperators ops = magnetic_operators(g, B, hbar);
    MagneticSystem sys = magnetic_matrices(B);

    // cross-pair commutators vanish exactly, the canonical pair is i hbar
    CHECK(max_abs(ops.Q1.matrix * ops.U2.matrix - ops.U2.matrix * ops.Q1.matrix) <= 1e-13);
    CVec psi = gaussian_state_2d(g, 0.2, -0.1, 1.2);
    double cell = g.delta() * g.delta();
    auto expect2d = [&](const CVec& v) {
        return (psi.conjugate().cwiseProduct(v)).sum() * cell;
    };
    std::complex<double> qu =
        expect2d(ops.Q1.matrix * (ops.U1.matrix * psi) - ops.U1.matrix * (ops.Q1.matrix * psi));
    CHECK(std::abs(qu / (1i * hbar) - 1.0) <= 0.05);

    // t = 0 reproduces the inputs; the matrix is g F^T g against the flow
    auto evolved0 = heisenberg_evolution(sys, ops, 0.0);
    CHECK(max_abs(evolved0[0].matrix - ops.U1.matrix) <= 1e-14);
    Eigen::Matrix4d gg = Eigen::Matrix4d::Identity();
    gg(2, 2) = gg(3, 3) = -1.0;
    double t = 0.8;
    CHECK((heisenberg_matrix(sys, t) - gg * sys.F(t).transpose() * gg).cwiseAbs().maxCoeff() ==
          0.0);

    // generator: (i/hbar)[H, X_a] = -(g G^T g X)_a on smooth states
    Eigen::Matrix4d M = -(gg * sys.G.transpose() * gg);
    for (int a = 0; a < 4; ++a) {
        CVec HX = ops.apply_hamiltonian(ops.op(a).matrix * psi);
        CVec XH = ops.op(a).matrix * ops.apply_hamiltonian(psi);
        CVec lhs = (1i / hbar) * (HX - XH);
        CVec rhs = CVec::Zero(g.dim());
        for (int b = 0; b < 4; ++b) rhs += M(a, b) * (ops.op(b).matrix * psi);
        CHECK((lhs - rhs).cwiseAbs().maxCoeff() <= 0.05);
    }

    // the quadratic hamiltonian built from evolved operators is unchanged
    auto H_expect = [&](double time) {
        auto ev = heisenberg_evolution(sys, ops, time);
        CMat a = ev[0].matrix + 0.5 * B * ev[3].matrix;
        CMat b = ev[1].matrix - 0.5 * B * ev[2].matrix;
        CVec hpsi = 0.5 * (a * (a * psi) + b * (b * psi));
        return expect2d(hpsi).real();
    };
    double h0 = H_expect(0.0);
    for (double time : {0.5, 1.3, 2.9})
        CHECK(std::abs(H_expect(time) - h0) <= 1e-6 * std::max(1.0, std::abs(h0)));
}
