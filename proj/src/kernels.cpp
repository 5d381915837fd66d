#include "aekahler/kernels.hpp"

#include <exception>

namespace aek {
namespace {

// Runs body(i) for i in [0, n), rethrowing the first exception by index.
template <class Body>
void for_each_index(std::size_t n, Execution exec, const Body& body) {
  if (exec == Execution::serial) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::vector<std::exception_ptr> errors(n);
  const long count = static_cast<long>(n);
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < count; ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace

std::vector<CurvatureSample> curvature_grid(const RadialProfile& profile,
                                            const std::vector<double>& radii, Execution exec) {
  std::vector<CurvatureSample> out(radii.size());
  for_each_index(radii.size(), exec,
                 [&](std::size_t i) { out[i] = curvature_sample(profile, radii[i]); });
  return out;
}

std::vector<FamilyReport> family_sweep(FamilyKind kind, const std::vector<double>& lambdas,
                                       Execution exec, Theorem11Spec quadrature) {
  if (exec == Execution::parallel) quadrature.execution = Execution::serial;
  std::vector<FamilyReport> out(lambdas.size());
  for_each_index(lambdas.size(), exec, [&](std::size_t i) {
    out[i] = family_report(FamilySpec{kind, lambdas[i], std::nullopt}, quadrature);
  });
  return out;
}

}  // namespace aek
