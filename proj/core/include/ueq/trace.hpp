#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ueq/clause.hpp"
#include "ueq/ordering.hpp"
#include "ueq/parser.hpp"
#include "ueq/saturation.hpp"
#include "ueq/term_io.hpp"

namespace ueq {

/// One trace line: a clause with its provenance, rendered with the variables
/// it is closed over (listed in first-occurrence order, left side first).
struct TraceLine {
  ClauseId id = 0;
  Sign sign = Sign::Positive;
  TermPtr left;
  TermPtr right;
  std::vector<std::int32_t> vars;
  ProofStep step;
};

/// Topologically sorted proof: every parent precedes its children (ids are
/// ascending), with exactly one terminal naming the empty-clause step.
struct ProofTrace {
  OrderingKind ordering = OrderingKind::Lpo;
  std::vector<TraceLine> lines;
  ClauseId terminal_parent = 0;
  Subst terminal_subst;
};

/// Walks the ancestors of the closing step and lays them out in id order.
ProofTrace emit_trace(const ClauseBag& bag, const ProofResult& proof, OrderingKind ordering);

std::string print_trace(const ProofTrace& t, const Signature& sig);
ProofTrace parse_trace(std::string_view text, Signature& sig);

// step rendering, shared with the knowledge-base file format
std::string print_step(const ProofStep& s, const Signature& sig);
ProofStep parse_step(TermCursor& cur);

struct CheckResult {
  bool valid = false;
  int line = 0;  // first failing text line (header is line 1); 0 when valid
  std::string reason;
};

/// Replays every step from the problem's inputs using only term primitives
/// (match/unify/replace) plus the per-rule ordering conditions, and accepts
/// iff the terminal substitution makes a goal-lineage clause syntactically
/// trivial. Independent of the saturation code by construction.
CheckResult check_trace(const Problem& problem, std::string_view trace_text,
                        const OrderingOverrides& overrides = {});
CheckResult check_trace(const Problem& problem, const ProofTrace& trace, const Signature& sig,
                        const OrderingOverrides& overrides = {});

}  // namespace ueq
