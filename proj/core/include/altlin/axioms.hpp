#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "altlin/catalog.hpp"

namespace altlin {

struct AxiomCheck {
    std::string name;
    double worst = 0.0;  // largest scaled residual seen
    double tol = 0.0;
    bool pass = true;
};

struct AxiomReport {
    std::vector<AxiomCheck> checks;
    bool pass = true;
    double seconds = 0.0;
};

/// Property suite for a deformed linear structure: round trips, commutativity,
/// associativity, distributivity, scalar composition, identity/zero laws,
/// subtraction, dilation-flow group law, and agreement of the dilation field
/// with a finite difference of the flow. Residuals are scaled by
/// max(1, |operands|); sampling is seeded and deterministic.
AxiomReport run_axiom_suite(const CatalogEntry& entry, int samples, std::uint64_t seed,
                            const ToleranceConfig& tol = {});

}  // namespace altlin
