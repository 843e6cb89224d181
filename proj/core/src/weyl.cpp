#include "altlin/weyl.hpp"

#include <cmath>
#include <numbers>

namespace altlin {

using namespace std::complex_literals;

Grid1D::Grid1D(int N_, double extent_) : N(N_), extent(extent_) {
    if (N < 8 || N % 2 != 0)
        throw std::invalid_argument("Grid1D: N must be even and >= 8");
    if (!(extent > 0.0)) throw std::invalid_argument("Grid1D: extent must be positive");
}

Eigen::VectorXd Grid1D::points() const {
    Eigen::VectorXd xs(N);
    for (int k = 0; k < N; ++k) xs(k) = x(k);
    return xs;
}

std::pair<GridOperator, GridOperator> finite_weyl_pair(int N) {
    if (N < 2) throw std::invalid_argument("finite_weyl_pair: N must be >= 2");
    CMat U = CMat::Zero(N, N), V = CMat::Zero(N, N);
    for (int k = 0; k < N; ++k) {
        double phase = 2.0 * std::numbers::pi * k / N;
        U(k, k) = std::polar(1.0, phase);
        V(k, (k - 1 + N) % N) = 1.0;  // (V psi)_k = psi_{k-1}
    }
    return {GridOperator(std::move(U)), GridOperator(std::move(V))};
}

double snap_displacement(const Grid1D& g, double x) {
    return std::round(x / g.delta()) * g.delta();
}

GridOperator weyl_operator(const Grid1D& g, double x, double pi, double hbar) {
    const int s = static_cast<int>(std::llround(x / g.delta()));
    const double xs = s * g.delta();
    CMat W = CMat::Zero(g.N, g.N);
    for (int k = 0; k < g.N; ++k) {
        int src = ((k + s) % g.N + g.N) % g.N;
        W(k, src) = std::polar(1.0, -pi * (g.x(k) + 0.5 * xs) / hbar);
    }
    return GridOperator(std::move(W));
}

double weyl_phase_pairing(double x1, double pi1, double x2, double pi2) {
    return pi1 * x2 - pi2 * x1;
}

std::pair<GridOperator, GridOperator> position_momentum(const Grid1D& g, double hbar) {
    CMat X = CMat::Zero(g.N, g.N), P = CMat::Zero(g.N, g.N);
    const std::complex<double> c = -1i * hbar / (2.0 * g.delta());
    for (int k = 0; k < g.N; ++k) {
        X(k, k) = g.x(k);
        P(k, (k + 1) % g.N) = c;
        P(k, (k - 1 + g.N) % g.N) = -c;
    }
    return {GridOperator(std::move(X)), GridOperator(std::move(P))};
}

GridOperator momentum_spectral(const Grid1D& g, double hbar) {
    const int N = g.N;
    CMat F(N, N);
    const double s = 1.0 / std::sqrt(static_cast<double>(N));
    for (int j = 0; j < N; ++j)
        for (int k = 0; k < N; ++k)
            F(j, k) = s * std::polar(1.0, -2.0 * std::numbers::pi * j * k / N);

    CVec kvals(N);
    for (int j = 0; j < N; ++j) {
        int m = j <= N / 2 ? j : j - N;
        if (j == N / 2) m = 0;  // zero the Nyquist mode to stay Hermitian
        kvals(j) = hbar * std::numbers::pi * m / g.extent;
    }
    return GridOperator(F.adjoint() * CMat(kvals.asDiagonal()) * F);
}

Eigen::VectorXd measure_vector(const Grid1D& g, Measure m, double lambda) {
    Eigen::VectorXd w(g.N);
    if (m == Measure::dq) {
        w.setConstant(g.delta());
        return w;
    }
    KTransform t(lambda);
    for (int k = 0; k < g.N; ++k)
        w(k) = t.chart_1d_deriv(t.chart_1d(g.x(k))) * g.delta();
    return w;
}

GridOperator adjoint_wrt(const GridOperator& op, const Eigen::VectorXd& measure) {
    // W^{-1} A^H W with W = diag(measure).
    CMat ah = op.matrix.adjoint();
    for (Eigen::Index r = 0; r < ah.rows(); ++r)
        for (Eigen::Index c = 0; c < ah.cols(); ++c)
            ah(r, c) *= measure(c) / measure(r);
    return GridOperator(std::move(ah));
}

std::complex<double> inner(const CVec& f, const CVec& g, const Eigen::VectorXd& measure) {
    std::complex<double> acc = 0.0;
    for (Eigen::Index k = 0; k < f.size(); ++k)
        acc += std::conj(f(k)) * g(k) * measure(k);
    return acc;
}

double norm_wrt(const CVec& f, const Eigen::VectorXd& measure) {
    return std::sqrt(std::abs(inner(f, f, measure)));
}

std::pair<GridOperator, GridOperator> fock_ladder(const Grid1D& g, double hbar,
                                                  const Eigen::VectorXd& measure) {
    auto [x, p] = position_momentum(g, hbar);
    GridOperator lower((x.matrix + 1i * p.matrix) / std::sqrt(2.0 * hbar));
    GridOperator raise = adjoint_wrt(lower, measure);
    return {lower, raise};
}

CVec ground_state(const GridOperator& lower, const Eigen::VectorXd& measure) {
    Eigen::BDCSVD<CMat> svd(lower.matrix, Eigen::ComputeThinV);
    const auto& sv = svd.singularValues();
    const Eigen::Index last = sv.size() - 1;
    if (last >= 1 && std::abs(sv(last) - sv(last - 1)) < 1e-8)
        throw DegenerateKernel("ground_state: two smallest singular values coincide");
    CVec psi = svd.matrixV().col(last);

    // Deterministic phase: largest component real and positive.
    Eigen::Index imax;
    psi.cwiseAbs().maxCoeff(&imax);
    psi *= std::polar(1.0, -std::arg(psi(imax)));
    psi /= norm_wrt(psi, measure);
    return psi;
}

std::vector<CVec> fock_states(const GridOperator& raise, const CVec& ground, int count,
                              const Eigen::VectorXd& measure) {
    std::vector<CVec> states;
    states.reserve(count);
    CVec cur = ground;
    for (int n = 0; n < count; ++n) {
        states.push_back(cur);
        cur = raise.apply(cur);
        double nn = norm_wrt(cur, measure);
        if (nn == 0.0) throw DegenerateKernel("fock_states: ladder terminated early");
        cur /= nn;
    }
    return states;
}

CVec gaussian_state(const Grid1D& g, double center, double sigma, double k0) {
    CVec psi(g.N);
    for (int k = 0; k < g.N; ++k) {
        double dx = g.x(k) - center;
        psi(k) = std::exp(-dx * dx / (2.0 * sigma * sigma)) * std::polar(1.0, k0 * g.x(k));
    }
    psi /= norm_wrt(psi, measure_vector(g, Measure::dq));
    return psi;
}

TwoMeasureReport two_measure_report(const Grid1D& g, double lambda, double hbar,
                                    bool spectral_momentum) {
    auto [x, p] = position_momentum(g, hbar);
    if (spectral_momentum) p = momentum_spectral(g, hbar);
    Eigen::VectorXd mdq = measure_vector(g, Measure::dq);
    Eigen::VectorXd mdQ = measure_vector(g, Measure::dQ, lambda);

    GridOperator p_star = adjoint_wrt(p, mdQ);
    CMat mismatch = p_star.matrix - p.matrix;

    // Multiplication operator the mismatch should act as on smooth vectors.
    KTransform t(lambda);
    CVec mform(g.N);
    for (int k = 0; k < g.N; ++k) {
        double Q = t.chart_1d(g.x(k));
        double denom = t.chart_1d_deriv(Q);
        mform(k) = -6.0i * lambda * hbar * Q / (denom * denom);
    }

    CMat commutator = p.matrix * p_star.matrix - p_star.matrix * p.matrix;

    TwoMeasureReport rep{0.0, 0.0, 0.0};
    const double sigma = 1.5;
    for (double center : {-2.0, -1.0, -0.5, 0.0, 0.5, 1.0, 2.0, 3.0}) {
        CVec psi = gaussian_state(g, center, sigma);
        CVec resid = mismatch * psi - mform.cwiseProduct(psi);
        rep.mismatch_residual = std::max(rep.mismatch_residual, norm_wrt(resid, mdq));
        rep.norm_deviation =
            std::max(rep.norm_deviation, std::abs(norm_wrt(psi, mdQ) - 1.0));
        rep.nonclosure_norm =
            std::max(rep.nonclosure_norm, norm_wrt(CVec(commutator * psi), mdq));
    }
    return rep;
}

// ---------------------------------------------------------------------------
// 2D realization
// ---------------------------------------------------------------------------

Grid2D::Grid2D(int N_, double extent_) : N(N_), extent(extent_) {
    if (N < 8 || N % 2 != 0)
        throw std::invalid_argument("Grid2D: N must be even and >= 8");
    if (!(extent > 0.0)) throw std::invalid_argument("Grid2D: extent must be positive");
}

const GridOperator& MagneticOperators::op(int idx) const {
    switch (idx) {
        case 0: return U1;
        case 1: return U2;
        case 2: return Q1;
        default: return Q2;
    }
}

GridOperator MagneticOperators::combine(const Eigen::Vector4d& c) const {
    return GridOperator(c(0) * U1.matrix + c(1) * U2.matrix + c(2) * Q1.matrix +
                        c(3) * Q2.matrix);
}

CVec MagneticOperators::apply_hamiltonian(const CVec& psi) const {
    auto a = [this](const CVec& v) -> CVec {
        return U1.matrix * v + 0.5 * B * (Q2.matrix * v);
    };
    auto b = [this](const CVec& v) -> CVec {
        return U2.matrix * v - 0.5 * B * (Q1.matrix * v);
    };
    return 0.5 * (a(a(psi)) + b(b(psi)));
}

MagneticOperators magnetic_operators(const Grid2D& g, double B, double hbar) {
    const int N = g.N;
    const Eigen::Index dim = g.dim();
    auto idx = [N](int i, int j) { return static_cast<Eigen::Index>(i) * N + j; };

    MagneticOperators ops;
    ops.hbar = hbar;
    ops.B = B;
    ops.U1.matrix = CMat::Zero(dim, dim);
    ops.U2.matrix = CMat::Zero(dim, dim);
    ops.Q1.matrix = CMat::Zero(dim, dim);
    ops.Q2.matrix = CMat::Zero(dim, dim);

    const std::complex<double> c = -1i * hbar / (2.0 * g.delta());
    for (int i = 0; i < N; ++i) {
        for (int j = 0; j < N; ++j) {
            Eigen::Index r = idx(i, j);
            ops.Q1.matrix(r, r) = g.x(i);
            ops.Q2.matrix(r, r) = g.x(j);
            ops.U1.matrix(r, idx((i + 1) % N, j)) = c;
            ops.U1.matrix(r, idx((i - 1 + N) % N, j)) = -c;
            ops.U2.matrix(r, idx(i, (j + 1) % N)) = c;
            ops.U2.matrix(r, idx(i, (j - 1 + N) % N)) = -c;
        }
    }
    return ops;
}

Eigen::Matrix4d heisenberg_matrix(const MagneticSystem& s, double t) {
    Eigen::Matrix4d g = Eigen::Matrix4d::Identity();
    g(2, 2) = g(3, 3) = -1.0;
    return g * s.F(t).transpose() * g;
}

std::array<GridOperator, 4> heisenberg_evolution(const MagneticSystem& s,
                                                 const MagneticOperators& ops, double t) {
    Eigen::Matrix4d Ft = heisenberg_matrix(s, t);
    std::array<GridOperator, 4> out;
    for (int a = 0; a < 4; ++a) out[a] = ops.combine(Ft.row(a).transpose());
    return out;
}

CVec gaussian_state_2d(const Grid2D& g, double cx, double cy, double sigma) {
    const int N = g.N;
    CVec psi(g.dim());
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) {
            double dx = g.x(i) - cx, dy = g.x(j) - cy;
            psi(static_cast<Eigen::Index>(i) * N + j) =
                std::exp(-(dx * dx + dy * dy) / (2.0 * sigma * sigma));
        }
    double cell = g.delta() * g.delta();
    psi /= std::sqrt(psi.squaredNorm() * cell);
    return psi;
}

}  // namespace altlin
