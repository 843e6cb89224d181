#include "altlin_cli/commands.hpp"

#include <cmath>
#include <iomanip>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>

#include "altlin/axioms.hpp"
#include "altlin/dynamics.hpp"
#include "altlin/geometry.hpp"
#include "altlin/moyal.hpp"
#include "altlin/weyl.hpp"
#include "altlin_cli/io.hpp"

namespace altlin::cli {

namespace fs = std::filesystem;

namespace {

std::string seed_tag(std::size_t i) {
    std::ostringstream os;
    os << "s" << std::setw(2) << std::setfill('0') << i;
    return os.str();
}

}  // namespace

int cmd_axioms(const Scenario& s, std::ostream& log) {
    std::optional<CatalogEntry> entry;
    try {
        entry.emplace(make_catalog_entry(s.structure_id, s.lambda, s.B));
    } catch (const std::runtime_error& e) {
        log << "config error: " << e.what() << "\n";
        return kExitConfig;
    }

    AxiomReport rep;
    try {
        rep = run_axiom_suite(*entry, s.samples, s.seed, s.tolerances.scaled(s.tol_scale));
    } catch (const DomainError& e) {
        log << "invariant failure: " << e.what() << "\n";
        return kExitInvariant;
    }

    log << "axiom suite: " << s.structure_id << " (" << s.samples << " samples, seed " << s.seed
        << ")\n";
    for (const auto& c : rep.checks)
        log << "  " << (c.pass ? "pass" : "FAIL") << "  " << c.name << "  worst "
            << format_double(c.worst) << "  tol " << format_double(c.tol) << "\n";
    log << (rep.pass ? "all checks passed" : "checks FAILED") << " in "
        << format_double(rep.seconds) << " s\n";
    return rep.pass ? kExitPass : kExitInvariant;
}

int cmd_curves(const Scenario& s, const fs::path& out_dir, std::ostream& log) {
    if (s.structure_id != "k-transform") {
        log << "config error: curves requires structure_id = k-transform\n";
        return kExitConfig;
    }
    std::vector<Eigen::Vector2d> seeds;
    for (const auto& v : s.seeds) {
        if (v.size() != 2) {
            log << "config error: curves seeds must be 2D points\n";
            return kExitConfig;
        }
        seeds.emplace_back(v(0), v(1));
    }
    if (seeds.empty())
        for (int i = 0; i < 8; ++i) seeds.emplace_back(0.0, -1.5 + 0.5 * i);

    KTransform t(s.lambda);
    CurveSet set = figure1_curves(t, seeds, s.integrator.t0, s.integrator.t1, s.integrator.dt);

    auto emit = [&](const std::vector<Trajectory>& curves, const std::string& field) {
        for (std::size_t i = 0; i < curves.size(); ++i) {
            std::vector<std::vector<double>> rows;
            rows.reserve(curves[i].t.size());
            for (std::size_t k = 0; k < curves[i].t.size(); ++k)
                rows.push_back({curves[i].t[k], curves[i].x[k](0), curves[i].x[k](1)});
            write_csv(out_dir / ("curve_" + field + "_" + seed_tag(i) + ".csv"),
                      {"t", "q", "p"}, rows);
        }
    };
    emit(set.dQ_curves, "dQ");
    emit(set.dP_curves, "dP");

    if (s.output.format == "svg") {
        std::vector<SvgCurve> svg;
        for (const auto& c : set.dQ_curves) {
            SvgCurve curve;
            for (const auto& x : c.x) curve.points.emplace_back(x(0), x(1));
            svg.push_back(std::move(curve));
        }
        for (const auto& c : set.dP_curves) {
            SvgCurve curve;
            curve.stroke = "#d1242f";
            for (const auto& x : c.x) curve.points.emplace_back(x(0), x(1));
            svg.push_back(std::move(curve));
        }
        write_svg(out_dir / "curves.svg", svg);
    }
    log << "curves: wrote " << 2 * seeds.size() << " CSV files to " << out_dir.string() << "\n";
    return kExitPass;
}

int cmd_magnetic(const Scenario& s, const fs::path& out_dir, std::ostream& log) {
    Eigen::Vector4d x0(1.0, 0.0, 0.0, 1.0);
    for (const auto& v : s.seeds)
        if (v.size() == 4) {
            x0 = Eigen::Vector4d(v(0), v(1), v(2), v(3));
            break;
        }

    MagneticSystem sys = magnetic_matrices(s.B);
    const double t0 = s.integrator.t0, t1 = s.integrator.t1, dt = s.integrator.dt;
    const auto steps = static_cast<long>(std::llround((t1 - t0) / dt));

    Eigen::Matrix4d Omega;  // dQ^i ^ dU_i in (Q1,Q2,U1,U2) ordering
    Omega << 0, 0, 1, 0,
             0, 0, 0, 1,
             -1, 0, 0, 0,
             0, -1, 0, 0;

    auto energy = [&](const Eigen::Vector4d& x) {
        double a = x(2) + 0.5 * s.B * x(1);
        double b = x(3) - 0.5 * s.B * x(0);
        return 0.5 * (a * a + b * b);
    };

    const auto chi0 = larmor_constants(x0, s.B);
    const double e0 = energy(x0);

    std::vector<std::vector<double>> rows;
    rows.reserve(steps + 1);
    double max_symp = 0.0, max_chi = 0.0, max_energy = 0.0, max_expm = 0.0;
    for (long k = 0; k <= steps; ++k) {
        double t = t0 + k * dt;
        Eigen::Matrix4d F = sys.F(t);
        Eigen::Vector4d x = F * x0;
        rows.push_back({t, x(0), x(1), x(2), x(3)});

        max_symp = std::max(max_symp,
                            (F.transpose() * Omega * F - Omega).cwiseAbs().maxCoeff());
        auto chi = larmor_constants(x, s.B);
        max_chi = std::max({max_chi, std::abs(chi.first - chi0.first),
                            std::abs(chi.second - chi0.second)});
        max_energy = std::max(max_energy, std::abs(energy(x) - e0));
        max_expm = std::max(max_expm, (F - Mat(expm(t * Mat(sys.G)))).cwiseAbs().maxCoeff());
    }

    write_csv(out_dir / "trajectory.csv", {"t", "Q1", "Q2", "U1", "U2"}, rows);
    write_csv(out_dir / "summary.csv",
              {"max_symplectic_residual", "max_chi_drift", "energy_drift",
               "f_vs_expm_max_dev"},
              {{max_symp, max_chi, max_energy, max_expm}});

    const double sc = s.tol_scale;
    bool ok = max_symp <= 1e-10 * sc && max_chi <= 1e-9 * sc && max_energy <= 1e-10 * sc &&
              max_expm <= 1e-10 * sc;
    log << "magnetic: symplectic " << format_double(max_symp) << ", chi drift "
        << format_double(max_chi) << ", energy drift " << format_double(max_energy)
        << ", F vs expm " << format_double(max_expm) << (ok ? " (pass)" : " (FAIL)") << "\n";
    return ok ? kExitPass : kExitInvariant;
}

int cmd_quantum(const Scenario& s, const fs::path& out_dir, std::ostream& log) {
    Grid1D g(s.grid.N, s.grid.extent);
    const bool spectral = s.grid.momentum == "spectral";
    const double hbar = s.hbar;

    auto [x, p] = position_momentum(g, hbar);
    if (spectral) p = momentum_spectral(g, hbar);
    Eigen::VectorXd mdq = measure_vector(g, Measure::dq);

    // canonical commutator expectation on a Gaussian
    CVec psi = gaussian_state(g, 0.0, 1.5);
    CVec comm = x.matrix * (p.matrix * psi) - p.matrix * (x.matrix * psi);
    double comm_err =
        std::abs(inner(psi, comm, mdq) / std::complex<double>(0.0, hbar) - 1.0);

    // displacement composition law on commensurate vectors
    const double pi0 = std::numbers::pi * hbar / g.extent;
    const double x1 = 4 * g.delta(), p1 = 2 * pi0;
    const double x2 = -6 * g.delta(), p2 = 5 * pi0;
    GridOperator W1 = weyl_operator(g, x1, p1, hbar);
    GridOperator W2 = weyl_operator(g, x2, p2, hbar);
    GridOperator W12 = weyl_operator(g, x1 + x2, p1 + p2, hbar);
    std::complex<double> phase =
        std::polar(1.0, weyl_phase_pairing(x1, p1, x2, p2) / (2.0 * hbar));
    double comp_res = (W1.matrix * W2.matrix - phase * W12.matrix).cwiseAbs().maxCoeff();

    TwoMeasureReport tm = two_measure_report(g, s.lambda, hbar, spectral);

    // ladder spectrum: level expectations |a|n>|^2 + 1/2 approach n + 1/2
    auto [lower, raise] = fock_ladder(g, hbar, mdq);
    CVec ground = ground_state(lower, mdq);
    auto states = fock_states(raise, ground, 4, mdq);
    std::vector<double> levels;
    for (const auto& st : states) {
        double n = std::pow(norm_wrt(CVec(lower.matrix * st), mdq), 2);
        levels.push_back(n + 0.5);
    }

    // classical-limit diagnostics
    const std::vector<double> hbars{1e-1, 1e-2, 1e-3};
    double order = fitted_classical_order(PhasePoly::monomial(3, 0), PhasePoly::monomial(0, 3),
                                          hbars);
    KTransform t(s.lambda);
    Eigen::Vector2d probe(1.1, 0.0);
    double limit = chart_limit_bracket(PhasePoly::q(), PhasePoly::p(), t, probe, hbars);
    double target = pushforward_frame(t.as_diffeo(), Vec(probe)).D;

    std::vector<std::pair<std::string, double>> rows{
        {"commutator_expectation_error", comm_err},
        {"weyl_composition_residual", comp_res},
        {"adjoint_mismatch_residual", tm.mismatch_residual},
        {"norm_deviation", tm.norm_deviation},
        {"nonclosure_norm", tm.nonclosure_norm},
        {"moyal_fitted_order", order},
        {"chart_limit_bracket", limit},
        {"chart_limit_target", target}};
    for (std::size_t n = 0; n < levels.size(); ++n)
        rows.emplace_back("fock_level_" + std::to_string(n), levels[n]);
    write_kv_csv(out_dir / "quantum_report.csv", rows);

    const double sc = s.tol_scale;
    bool ok = comm_err <= 1e-3 * sc && comp_res <= 1e-10 * sc && order >= 1.9 &&
              std::abs(limit - target) <= 1e-3 * sc;
    if (s.lambda > 0.0)
        ok = ok && tm.mismatch_residual <= 1e-2 * sc && tm.norm_deviation > 0.05 &&
             tm.nonclosure_norm > 0.1 * s.lambda;
    else
        ok = ok && tm.mismatch_residual <= 1e-10 * sc;

    log << "quantum: commutator err " << format_double(comm_err) << ", composition "
        << format_double(comp_res) << ", mismatch " << format_double(tm.mismatch_residual)
        << ", norm dev " << format_double(tm.norm_deviation) << ", nonclosure "
        << format_double(tm.nonclosure_norm) << ", order " << format_double(order)
        << ", limit " << format_double(limit) << (ok ? " (pass)" : " (FAIL)") << "\n";
    return ok ? kExitPass : kExitInvariant;
}

}  // namespace altlin::cli
