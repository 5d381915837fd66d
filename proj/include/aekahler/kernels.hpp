#pragma once

// Embarrassingly parallel drivers.  Each has a serial reference; both paths
// produce identical results in identical order.

#include <vector>

#include "aekahler/curvature.hpp"
#include "aekahler/families.hpp"
#include "aekahler/quadrature.hpp"

namespace aek {

std::vector<CurvatureSample> curvature_grid(const RadialProfile& profile,
                                            const std::vector<double>& radii,
                                            Execution exec = Execution::parallel);

/// One family_report per lambda.  In parallel mode the per-lambda 2D
/// quadratures run serially so threads are not nested.
std::vector<FamilyReport> family_sweep(FamilyKind kind, const std::vector<double>& lambdas,
                                       Execution exec = Execution::parallel,
                                       Theorem11Spec quadrature = default_theorem11_spec());

}  // namespace aek
