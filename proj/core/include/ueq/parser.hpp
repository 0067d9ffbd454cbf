#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ueq/clause.hpp"
#include "ueq/term.hpp"
#include "ueq/term_io.hpp"

namespace ueq {

/// One parsed input clause. Plain atoms are encoded as equations with the
/// reserved $true constant; sign Negative marks a refutation goal.
struct InputClause {
  std::string name;
  std::string role;
  Sign sign = Sign::Positive;
  TermPtr left;
  TermPtr right;
  int line = 0;
};

/// A unit-equality problem: positive unit equations (facts) and negative ones
/// (goals), over one signature. Variable ids are assigned globally in parse
/// order, so print/parse round-trips are exact.
struct Problem {
  Signature signature;
  std::vector<InputClause> axioms;
  std::vector<InputClause> goals;
  std::string source;
};

/// Accepts the CNF subset: cnf(name, role, literal). with roles axiom,
/// hypothesis, negated_conjecture and literals s = t, s != t, ~atom or a
/// plain atom. '%' starts a line comment. Non-unit clauses are rejected with
/// a diagnostic carrying line/column.
Problem parse_problem(std::string_view text, std::string source = "");

std::string print_problem(const Problem& p);

}  // namespace ueq
