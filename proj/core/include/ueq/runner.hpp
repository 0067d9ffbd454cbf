#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ueq/parser.hpp"
#include "ueq/saturation.hpp"
#include "ueq/trace.hpp"

namespace ueq {

struct RunConfig {
  SaturationParams params;
  bool portfolio = false;
  std::vector<OrderingKind> portfolio_orderings = {OrderingKind::Lpo, OrderingKind::Kbo,
                                                   OrderingKind::Rpo, OrderingKind::Nrkbo};
};

struct RunReport {
  Outcome outcome;
  OrderingKind ordering = OrderingKind::Lpo;  // the instance that produced the outcome
  std::optional<std::string> trace;
  double saturate_ms = 0.0;
  double trace_ms = 0.0;
};

/// Single mode runs one saturation instance. Portfolio mode runs one isolated
/// instance per listed ordering concurrently and returns the first proof,
/// cancelling the rest.
RunReport run(const Problem& problem, const RunConfig& config);

/// 0: proof found, 1: saturated without proof, 2: resource limit hit.
int exit_code(const RunReport& report);

}  // namespace ueq
