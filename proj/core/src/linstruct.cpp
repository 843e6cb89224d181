#include "altlin/linstruct.hpp"

#include <cmath>
#include <utility>

namespace altlin {

namespace {

bool all_finite(const Vec& v) { return v.allFinite(); }

}  // namespace

Diffeo::Diffeo(int dim, MapFn forward, MapFn inverse, JacFn jacobian,
               std::string domain_note, DomainFn preimage_domain, DomainFn image_domain)
    : dim_(dim),
      forward_(std::move(forward)),
      inverse_(std::move(inverse)),
      jacobian_(std::move(jacobian)),
      preimage_domain_(std::move(preimage_domain)),
      image_domain_(std::move(image_domain)),
      domain_note_(std::move(domain_note)) {}

Diffeo Diffeo::with_newton_inverse(int dim, MapFn forward, JacFn jacobian,
                                   std::string domain_note,
                                   DomainFn preimage_domain, DomainFn image_domain) {
    Diffeo d;
    d.dim_ = dim;
    d.forward_ = std::move(forward);
    d.jacobian_ = std::move(jacobian);
    d.preimage_domain_ = std::move(preimage_domain);
    d.image_domain_ = std::move(image_domain);
    d.domain_note_ = std::move(domain_note);
    return d;
}

Diffeo Diffeo::identity(int dim) {
    return Diffeo(
        dim, [](const Vec& w) { return w; }, [](const Vec& u) { return u; },
        [dim](const Vec&) { return Mat::Identity(dim, dim); }, "R^n (identity)");
}

bool Diffeo::in_preimage_domain(const Vec& w) const {
    if (w.size() != dim_ || !all_finite(w)) return false;
    return preimage_domain_ ? preimage_domain_(w) : true;
}

bool Diffeo::in_image_domain(const Vec& u) const {
    if (u.size() != dim_ || !all_finite(u)) return false;
    return image_domain_ ? image_domain_(u) : true;
}

Vec Diffeo::forward(const Vec& w) const {
    if (!in_preimage_domain(w))
        throw DomainError("forward: point outside declared domain (" + domain_note_ + ")");
    Vec u = forward_(w);
    if (!all_finite(u)) throw DomainError("forward: non-finite image");
    return u;
}

Vec Diffeo::inverse(const Vec& u) const {
    if (!in_image_domain(u))
        throw DomainError("inverse: point outside declared image domain (" + domain_note_ + ")");
    if (inverse_) {
        Vec w = inverse_(u);
        if (!all_finite(w)) throw DomainError("inverse: non-finite preimage");
        return w;
    }
    return newton_inverse(u);
}

Mat Diffeo::jacobian(const Vec& w) const {
    if (!in_preimage_domain(w))
        throw DomainError("jacobian: point outside declared domain (" + domain_note_ + ")");
    return jacobian_(w);
}

Vec Diffeo::newton_inverse(const Vec& u) const {
    const double target_scale = std::max(1.0, u.norm());
    const double tol = 1e-12 * target_scale;

    Vec w = u;  // initial guess = input point
    if (!in_preimage_domain(w)) w = Vec::Zero(dim_);

    double res = (forward_(w) - u).norm();
    for (int iter = 0; iter < 50; ++iter) {
        if (res <= tol) return w;
        Mat J = jacobian_(w);
        Eigen::PartialPivLU<Mat> lu(J);
        Vec step = lu.solve(forward_(w) - u);
        if (!all_finite(step)) throw DomainError("inverse: singular Jacobian in Newton step");

        // Backtrack until the residual actually decreases.
        double alpha = 1.0;
        bool improved = false;
        for (int k = 0; k < 40; ++k) {
            Vec cand = w - alpha * step;
            if (in_preimage_domain(cand)) {
                double cand_res = (forward_(cand) - u).norm();
                if (cand_res < res) {
                    w = cand;
                    res = cand_res;
                    improved = true;
                    break;
                }
            }
            alpha *= 0.5;
        }
        if (!improved) throw DomainError("inverse: Newton iteration stalled");
    }
    if (res <= tol) return w;
    throw DomainError("inverse: Newton iteration did not converge in 50 steps");
}

LinearStructure::LinearStructure(Diffeo d) : diffeo_(std::move(d)) {
    origin_ = diffeo_.forward(Vec::Zero(diffeo_.dim()));
}

Vec LinearStructure::add(const Vec& u, const Vec& v) const {
    Vec sum = diffeo_.inverse(u) + diffeo_.inverse(v);
    return diffeo_.forward(sum);  // DomainError if the sum leaves the preimage domain
}

Vec LinearStructure::scale(double lam, const Vec& u) const {
    return diffeo_.forward(lam * diffeo_.inverse(u));
}

Vec LinearStructure::subtract(const Vec& u, const Vec& v) const {
    return add(u, scale(-1.0, v));
}

Vec LinearStructure::liouville_field(const Vec& u) const {
    Vec w = diffeo_.inverse(u);
    return diffeo_.jacobian(w) * w;
}

Vec LinearStructure::dilation_flow(const Vec& u, double t) const {
    return diffeo_.forward(std::exp(t) * diffeo_.inverse(u));
}

LinearityResult LinearStructure::is_linear(std::span<const Vec> samples, double tol) const {
    if (samples.empty()) return {true, true};
    for (const Vec& u : samples) {
        double scale = std::max(1.0, u.norm());
        if ((liouville_field(u) - u).norm() > tol * scale) return {false, false};
    }
    return {true, false};
}

}  // namespace altlin
