#pragma once

#include <string>

#include "altlin/catalog.hpp"
#include "altlin/linstruct.hpp"

namespace altlin {

/// Regular Lagrangian L(q,u) on velocity phase space. Derivatives may be
/// supplied analytically; otherwise they fall back to central differences
/// with step 1e-5 * max(1, |coordinate|). The velocity Hessian must stay
/// invertible wherever the adapted frame is requested.
class LagrangianModel {
public:
    using ScalarFn = std::function<double(const Vec& q, const Vec& u)>;
    using VectorFn = std::function<Vec(const Vec& q, const Vec& u)>;
    using MatrixFn = std::function<Mat(const Vec& q, const Vec& u)>;

    LagrangianModel(int n, ScalarFn L);
    LagrangianModel(int n, ScalarFn L, VectorFn momenta, MatrixFn hessian, MatrixFn mixed,
                    bool momenta_globally_invertible = true);

    int n() const { return n_; }
    double value(const Vec& q, const Vec& u) const { return L_(q, u); }
    Vec momenta(const Vec& q, const Vec& u) const;  // dL/du
    Mat hessian(const Vec& q, const Vec& u) const;  // H_ik = d2L/du^i du^k
    Mat mixed(const Vec& q, const Vec& u) const;    // M_ij = d2L/du^i dq^j
    bool momenta_globally_invertible() const { return global_momenta_; }

    static LagrangianModel free_particle(int n);
    /// L = 1/2 |u|^2 + u . A(q) on R^3.
    static LagrangianModel magnetic(MagneticGauge gauge);
    /// L = 1/2 u^T mass u for a constant SPD mass matrix.
    static LagrangianModel anisotropic(Mat mass);
    /// ids: "free", "magnetic-symmetric", "magnetic-quadratic-gauge"
    static LagrangianModel by_id(const std::string& id, double B = 1.0);

private:
    int n_;
    ScalarFn L_;
    VectorFn momenta_;
    MatrixFn hessian_;
    MatrixFn mixed_;
    bool global_momenta_ = false;
};

/// Commuting frame (X_j, Y^j) with dual forms (alpha^i, beta_i) at a point:
///   (Y^j)^k = (H^{-1})_{jk},   X_j = d/dq^j - (H^{-1} M)_{kj} d/du^k,
///   alpha^i = dq^i,            beta_i = M_ij dq^j + H_ij du^j  (= d(dL/du^i)).
/// Duality: alpha^i(X_j) = delta^i_j, alpha^i(Y^j) = 0, beta_i(Y^j) = delta_i^j,
/// beta_i(X_j) = 0.
struct AdaptedFrame {
    Vec q, u;
    Mat X_u;     // column j: du-components of X_j
    Mat Y_u;     // column j: du-components of Y^j
    Mat beta_q;  // row i: dq-components of beta_i
    Mat beta_u;  // row i: du-components of beta_i

    int n() const { return static_cast<int>(q.size()); }
    Vec X(int j) const;      // 2n components: (dq parts, du parts)
    Vec Y(int j) const;
    Vec alpha(int i) const;  // covector components in the same ordering
    Vec beta(int i) const;
};

AdaptedFrame adapted_frame(const LagrangianModel& m, const Vec& q, const Vec& u);

/// Matrix of omega_L = d(dL/du^i) ^ dq^i in (q,u) coordinates, entries
/// Omega_ab = omega_L(e_a, e_b) with basis ordered (dq, du):
///   [[ M^T - M, -H ], [ H, 0 ]].
Mat lagrangian_two_form(const LagrangianModel& m, const Vec& q, const Vec& u);

/// omega_L reconstructed as beta_i ^ alpha^i from an adapted frame.
Mat two_form_from_frame(const AdaptedFrame& f);

struct DarbouxPoint {
    Vec Q;        // = q
    Vec momenta;  // pi_i = dL/du^i
    bool local;   // true when the momenta map is not known to invert globally
};
DarbouxPoint darboux_chart(const LagrangianModel& m, const Vec& q, const Vec& u);

struct CommutatorReport {
    double max_bracket_norm;  // worst pairwise Lie bracket among X_j, Y^j
};
/// Finite-difference Lie brackets of all frame-field pairs, step h.
CommutatorReport commutator_check(const LagrangianModel& m, const Vec& q, const Vec& u, double h);

}  // namespace altlin
