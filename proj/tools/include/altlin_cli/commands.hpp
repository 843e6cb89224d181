#pragma once

#include <filesystem>
#include <iosfwd>

#include "altlin_cli/scenario.hpp"

namespace altlin::cli {

// Exit codes shared by all commands:
//   0 pass, 1 invariant failure, 2 configuration error, 3 I/O error.
inline constexpr int kExitPass = 0;
inline constexpr int kExitInvariant = 1;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitIo = 3;

/// Structure-axiom suite for the selected catalog entry. Prints one line per
/// check.
int cmd_axioms(const Scenario& s, std::ostream& log);

/// Integral curves of the transported frame fields: one CSV (t,q,p) per seed
/// per field, plus a single SVG overlay when output.format is "svg".
int cmd_curves(const Scenario& s, const std::filesystem::path& out_dir, std::ostream& log);

/// Exact-flow trajectory CSV plus a summary row (symplectic residual,
/// conserved-quantity drift, energy drift, closed-form-vs-exponential gap).
int cmd_magnetic(const Scenario& s, const std::filesystem::path& out_dir, std::ostream& log);

/// Grid-operator diagnostics: commutator and composition residuals, the
/// two-measure witnesses, and the classical-limit fit. One CSV report.
int cmd_quantum(const Scenario& s, const std::filesystem::path& out_dir, std::ostream& log);

}  // namespace altlin::cli
