#pragma once

// Everything: parameter spaces, the task catalog, optimizers and the budget
// runner, diagnostics and cross-run analytics.

#include "shapebench/analytics/report.hpp"
#include "shapebench/analytics/runset.hpp"
#include "shapebench/analytics/statistics.hpp"
#include "shapebench/diagnostics/bundle.hpp"
#include "shapebench/diagnostics/checks.hpp"
#include "shapebench/diagnostics/schema.hpp"
#include "shapebench/format.hpp"
#include "shapebench/optimizers/fd_gradient.hpp"
#include "shapebench/optimizers/runner.hpp"
#include "shapebench/param_space.hpp"
#include "shapebench/problems/catalog.hpp"
#include "shapebench/problems/subprocess.hpp"
#include "shapebench/rng.hpp"
#include "shapebench/version.hpp"
