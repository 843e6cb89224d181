#include <doctest.h>

#include <cmath>
#include <random>

#include "altlin/catalog.hpp"
#include "altlin/linstruct.hpp"
#include "oracles.hpp"

using namespace altlin;

namespace {

Vec v1(double x) {
    Vec v(1);
    v(0) = x;
    return v;
}

Vec v2(double x, double y) {
    Vec v(2);
    v << x, y;
    return v;
}

}  // namespace

TEST_CASE("identity structure: dilation field is the point itself") {
    LinearStructure s(Diffeo::identity(3));
    Vec u(3);
    u << 1.0, -2.0, 0.5;
    CHECK((s.liouville_field(u) - u).norm() == doctest::Approx(0.0));
    std::vector<Vec> samples{u, 2.0 * u};
    CHECK(s.is_linear(samples).linear);
    CHECK((s.add(u, s.origin()) - u).norm() == doctest::Approx(0.0));
}

TEST_CASE("tanh structure reproduces the velocity-composition values") {
    LinearStructure s = TanhStructure::structure();

    CHECK(s.add(v1(0.5), v1(0.5))(0) == doctest::Approx(0.8).epsilon(1e-14));
    CHECK(s.scale(2.0, v1(0.5))(0) == doctest::Approx(0.8).epsilon(1e-14));
    CHECK(s.subtract(v1(0.8), v1(0.5))(0) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(s.origin()(0) == 0.0);

    // dilation field (1 - X^2) atanh(X); zero at the origin
    for (double X : {-0.7, -0.2, 0.3, 0.9}) {
        double expected = (1.0 - X * X) * std::atanh(X);
        CHECK(s.liouville_field(v1(X))(0) == doctest::Approx(expected).epsilon(1e-12));
    }
    CHECK(s.liouville_field(v1(0.0))(0) == 0.0);
}

TEST_CASE("k-transform add matches the root-oracle route") {
    LinearStructure s = KTransform(0.1).structure();

    // inverse of (1.1, 0) through the cubic, by bisection
    double K = oracle::bisect([](double k) { return 0.1 * 1.1 * 1.1 * k * k * k + k - 1.0; },
                              0.0, 1.0);
    CHECK(1.1 * K == doctest::Approx(1.0).epsilon(1e-12));

    Vec sum = s.add(v2(1.1, 0.0), v2(1.1, 0.0));
    CHECK(sum(0) == doctest::Approx(2.8).epsilon(1e-12));
    CHECK(sum(1) == doctest::Approx(0.0));
}

TEST_CASE("linearity detection across deformations") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> dist(-1.5, 1.5);
    std::vector<Vec> samples;
    for (int i = 0; i < 20; ++i) samples.push_back(v2(dist(rng), dist(rng)));

    CHECK(KTransform(0.0).structure().is_linear(samples).linear);
    CHECK_FALSE(KTransform(0.1).structure().is_linear(samples).linear);

    LinearityResult empty = KTransform(0.1).structure().is_linear({});
    CHECK(empty.linear);
    CHECK(empty.empty_samples);
}

TEST_CASE("magnetic difference rule carries the gauge bracket") {
    MagneticGauge gauge = MagneticGauge::quadratic();
    LinearStructure s = gauge.structure();
    auto A = [&](const Eigen::Vector3d& q) { return gauge.potential(q); };

    Vec x1(6), x2(6);
    x1 << 1.0, -0.5, 0.3, 0.2, 0.7, -1.0;
    x2 << -0.4, 0.8, 1.1, 0.9, -0.3, 0.25;

    Vec diff = s.subtract(x1, x2);
    Eigen::Vector3d Q1 = x1.head<3>(), Q2 = x2.head<3>();
    Eigen::Vector3d expectedU =
        Eigen::Vector3d(x1.tail<3>() - x2.tail<3>()) + A(Q1 - Q2) + A(Q2) - A(Q1);
    CHECK((diff.head<3>() - (Q1 - Q2)).norm() == doctest::Approx(0.0).epsilon(1e-12));
    CHECK((diff.tail<3>() - expectedU).norm() == doctest::Approx(0.0).epsilon(1e-12));

    CHECK((s.subtract(x1, x1) - s.origin()).norm() == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("newton inverse handles maps without a closed form") {
    // w -> w + 0.1 sin(w), strictly monotone on R
    Diffeo d = Diffeo::with_newton_inverse(
        1, [](const Vec& w) { return Vec(v1(w(0) + 0.1 * std::sin(w(0)))); },
        [](const Vec& w) {
            Mat J(1, 1);
            J(0, 0) = 1.0 + 0.1 * std::cos(w(0));
            return J;
        });
    for (double u : {-3.0, -0.2, 0.0, 1.7, 11.0}) {
        Vec w = d.inverse(v1(u));
        CHECK(d.forward(w)(0) == doctest::Approx(u).epsilon(1e-12));
    }
}

TEST_CASE("domain violations raise DomainError") {
    CHECK_THROWS_AS((void)TanhStructure::as_diffeo().inverse(v1(2.0)), DomainError);

    // tan on (-pi/2, pi/2): the deformed sum can escape the preimage strip
    const double half = 1.5707963267948966 - 1e-9;
    Diffeo tan_diffeo(
        1, [](const Vec& w) { return Vec(v1(std::tan(w(0)))); },
        [](const Vec& u) { return Vec(v1(std::atan(u(0)))); },
        [](const Vec& w) {
            Mat J(1, 1);
            double c = std::cos(w(0));
            J(0, 0) = 1.0 / (c * c);
            return J;
        },
        "(-pi/2, pi/2) onto R", [half](const Vec& w) { return std::abs(w(0)) <= half; });
    LinearStructure s((Diffeo(tan_diffeo)));
    CHECK_THROWS_AS((void)s.add(v1(10.0), v1(10.0)), DomainError);
    CHECK((s.add(v1(0.5), v1(0.5)) - v1(std::tan(2.0 * std::atan(0.5)))).norm() <= 1e-12);
}

TEST_CASE("jacobians agree with finite differences at sampled points") {
    auto check_diffeo = [](const Diffeo& d, const std::vector<Vec>& pts) {
        for (const Vec& w : pts) {
            auto fwd = [&](const Eigen::VectorXd& x) { return d.forward(x); };
            CHECK((d.jacobian(w) - oracle::fd_jacobian(fwd, w)).cwiseAbs().maxCoeff() <= 1e-6);
        }
    };
    check_diffeo(KTransform(0.3).as_diffeo(), {v2(0.0, 0.0), v2(1.0, -0.5), v2(-1.2, 0.7)});
    Vec m(6);
    m << 0.3, -1.0, 0.5, 0.2, 0.0, -0.7;
    check_diffeo(MagneticGauge::quadratic().as_diffeo(), {m});
}

TEST_CASE("jacobian determinants never vanish on the sampled domains") {
    std::mt19937_64 rng(61);
    for (const auto& id : catalog_ids()) {
        CatalogEntry entry = make_catalog_entry(id, 0.4, 1.5);
        for (int i = 0; i < 100; ++i) {
            Vec u = entry.sample(rng);
            Vec w = entry.structure.diffeo().inverse(u);
            CHECK(std::abs(entry.structure.diffeo().jacobian(w).determinant()) > 1e-12);
        }
    }
}
