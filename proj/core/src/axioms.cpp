#include "altlin/axioms.hpp"

#include <chrono>
#include <cmath>

namespace altlin {

namespace {

double point_scale(std::initializer_list<const Vec*> pts) {
    double s = 1.0;
    for (const Vec* p : pts) s = std::max(s, p->norm());
    return s;
}

}  // namespace

AxiomReport run_axiom_suite(const CatalogEntry& entry, int samples, std::uint64_t seed,
                            const ToleranceConfig& tol) {
    const auto start = std::chrono::steady_clock::now();
    const LinearStructure& s = entry.structure;
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> scalar_dist(-2.0, 2.0);

    AxiomReport report;
    auto& checks = report.checks;
    checks.push_back({"round-trip", 0.0, tol.eps_round, true});
    checks.push_back({"add-commutative", 0.0, tol.eps_assoc, true});
    checks.push_back({"add-associative", 0.0, tol.eps_assoc, true});
    checks.push_back({"scale-distributive", 0.0, tol.eps_assoc, true});
    checks.push_back({"scalar-composition", 0.0, tol.eps_assoc, true});
    checks.push_back({"additive-identity", 0.0, tol.eps_assoc, true});
    checks.push_back({"zero-scalar", 0.0, tol.eps_assoc, true});
    checks.push_back({"subtract-self", 0.0, tol.eps_assoc, true});
    checks.push_back({"flow-group-law", 0.0, tol.eps_flow, true});
    checks.push_back({"liouville-vs-flow-derivative", 0.0, tol.eps_fd, true});

    auto record = [&](int idx, double residual, double scale) {
        checks[idx].worst = std::max(checks[idx].worst, residual / scale);
    };

    for (int i = 0; i < samples; ++i) {
        Vec u = entry.sample(rng);
        Vec v = entry.sample(rng);
        Vec w = entry.sample(rng);
        double lam = scalar_dist(rng), mu = scalar_dist(rng);
        double suv = point_scale({&u, &v});
        double suvw = point_scale({&u, &v, &w});

        record(0, (s.diffeo().forward(s.diffeo().inverse(u)) - u).norm(), point_scale({&u}));
        record(1, (s.add(u, v) - s.add(v, u)).norm(), suv);
        record(2, (s.add(s.add(u, v), w) - s.add(u, s.add(v, w))).norm(), suvw);
        record(3, (s.scale(lam, s.add(u, v)) - s.add(s.scale(lam, u), s.scale(lam, v))).norm(),
               suv);
        record(4, (s.scale(lam * mu, u) - s.scale(lam, s.scale(mu, u))).norm(),
               point_scale({&u}));
        record(5, (s.add(u, s.origin()) - u).norm(), point_scale({&u}));
        record(6, (s.scale(0.0, u) - s.origin()).norm(), point_scale({&u}));
        record(7, (s.subtract(u, u) - s.origin()).norm(), point_scale({&u}));

        double t1 = 0.25 * lam, t2 = 0.25 * mu;
        record(8, (s.dilation_flow(s.dilation_flow(u, t1), t2) - s.dilation_flow(u, t1 + t2))
                      .norm(),
               point_scale({&u}));

        const double h = 1e-5;
        Vec fd = (s.dilation_flow(u, h) - s.dilation_flow(u, -h)) / (2.0 * h);
        record(9, (s.liouville_field(u) - fd).norm(), point_scale({&u}));
    }

    for (auto& c : checks) {
        c.pass = c.worst <= c.tol;
        report.pass = report.pass && c.pass;
    }
    report.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

}  // namespace altlin
