#pragma once

#include <algorithm>
#include <cmath>
#include <span>
#include <vector>

#include "shapebench/errors.hpp"

namespace shapebench {

/// Central-difference gradient of `f` on the unit cube. Each stencil centre
/// is moved per coordinate into [eps, 1-eps] so both probes stay inside the
/// cube. Costs exactly 2*dim calls of `f`.
template <typename F>
std::vector<double> fd_gradient(F&& f, std::span<const double> x, double eps = 1e-4) {
  if (!(eps > 0.0 && eps < 0.5)) throw ContractError("fd_gradient: eps must lie in (0, 0.5)");
  const std::size_t d = x.size();
  std::vector<double> g(d, 0.0);
  std::vector<double> probe(x.begin(), x.end());
  for (std::size_t i = 0; i < d; ++i) {
    const double c = std::clamp(x[i], eps, 1.0 - eps);
    probe[i] = c + eps;
    const double fp = f(std::span<const double>(probe));
    probe[i] = c - eps;
    const double fm = f(std::span<const double>(probe));
    probe[i] = x[i];
    if (!std::isfinite(fp) || !std::isfinite(fm)) {
      throw EvaluationError("fd_gradient: non-finite objective value in stencil");
    }
    g[i] = (fp - fm) / (2.0 * eps);
  }
  return g;
}

}  // namespace shapebench
