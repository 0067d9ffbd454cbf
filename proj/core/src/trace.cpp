#include "ueq/trace.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

namespace ueq {

ProofTrace emit_trace(const ClauseBag& bag, const ProofResult& proof, OrderingKind ordering) {
  std::set<ClauseId> ids;
  std::vector<ClauseId> work{proof.terminal_goal};
  while (!work.empty()) {
    ClauseId id = work.back();
    work.pop_back();
    if (!ids.insert(id).second) continue;
    const ProofStep& s = bag.at(id).step;
    if (s.kind == ProofStep::Kind::Inferred) {
      work.push_back(s.target);
      work.push_back(s.rule_clause);
    }
  }
  ProofTrace t;
  t.ordering = ordering;
  t.terminal_parent = proof.terminal_goal;
  t.terminal_subst = proof.terminal_subst;
  for (ClauseId id : ids) {
    const UnitClause& c = bag.at(id);
    TraceLine line;
    line.id = id;
    line.sign = c.sign;
    line.left = c.left;
    line.right = c.right;
    collect_vars(c.left, line.vars);
    collect_vars(c.right, line.vars);
    line.step = c.step;
    t.lines.push_back(std::move(line));
  }
  return t;
}

std::string print_step(const ProofStep& s, const Signature& sig) {
  switch (s.kind) {
    case ProofStep::Kind::Axiom: return "axiom \"" + s.name + "\"";
    case ProofStep::Kind::Goal: return "goal \"" + s.name + "\"";
    case ProofStep::Kind::Inferred: break;
  }
  std::string out;
  switch (s.rule) {
    case RuleKind::SuperposeRight: out = "super_r"; break;
    case RuleKind::SuperposeLeft: out = "super_l"; break;
    case RuleKind::Demodulate: out = "demod"; break;
  }
  out += " from " + std::to_string(s.target);
  out += " with " + std::to_string(s.rule_clause);
  out += s.dir == Direction::LeftToRight ? " lr" : " rl";
  out += " at " + print_position(s.pos);
  out += ' ';
  out += print_subst(s.subst, sig);
  return out;
}

ProofStep parse_step(TermCursor& cur) {
  if (cur.try_consume_word("axiom")) return ProofStep::axiom(cur.read_quoted());
  if (cur.try_consume_word("goal")) return ProofStep::goal(cur.read_quoted());
  RuleKind rule;
  if (cur.try_consume_word("super_r"))
    rule = RuleKind::SuperposeRight;
  else if (cur.try_consume_word("super_l"))
    rule = RuleKind::SuperposeLeft;
  else if (cur.try_consume_word("demod"))
    rule = RuleKind::Demodulate;
  else
    cur.fail("expected a step kind");
  cur.expect_word("from");
  long target = cur.read_integer();
  cur.expect_word("with");
  long rule_clause = cur.read_integer();
  Direction dir;
  if (cur.try_consume_word("lr"))
    dir = Direction::LeftToRight;
  else if (cur.try_consume_word("rl"))
    dir = Direction::RightToLeft;
  else
    cur.fail("expected direction lr or rl");
  cur.expect_word("at");
  Position pos = cur.read_position();
  Subst subst = cur.read_subst_canonical();
  if (target < 0 || rule_clause < 0) cur.fail("negative clause id");
  return ProofStep::inferred(rule, static_cast<ClauseId>(target),
                             static_cast<ClauseId>(rule_clause), dir, std::move(pos),
                             std::move(subst));
}

std::string print_trace(const ProofTrace& t, const Signature& sig) {
  std::string out = "ueq-trace v1 ordering ";
  out += to_string(t.ordering);
  out += '\n';
  for (const auto& line : t.lines) {
    out += "c " + std::to_string(line.id) + ' ';
    out += print_step(line.step, sig);
    out += " vars(";
    for (std::size_t i = 0; i < line.vars.size(); ++i) {
      if (i) out += ' ';
      out += 'X';
      out += std::to_string(line.vars[i]);
    }
    out += ") ";
    out += line.sign == Sign::Negative ? '-' : '+';
    out += ' ';
    print_term(out, line.left, sig);
    out += " = ";
    print_term(out, line.right, sig);
    out += '\n';
  }
  out += "empty from " + std::to_string(t.terminal_parent) + ' ';
  out += print_subst(t.terminal_subst, sig);
  out += '\n';
  return out;
}

ProofTrace parse_trace(std::string_view text, Signature& sig) {
  ProofTrace t;
  int lineno = 0;
  std::size_t start = 0;
  bool saw_header = false;
  bool saw_terminal = false;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++lineno;
    if (line.empty()) continue;
    TermCursor cur(line, sig, lineno);
    if (!saw_header) {
      cur.expect_word("ueq-trace");
      cur.expect_word("v1");
      cur.expect_word("ordering");
      auto kind = ordering_kind_from(cur.read_identifier());
      if (!kind) cur.fail("unknown ordering kind");
      t.ordering = *kind;
      saw_header = true;
      continue;
    }
    if (saw_terminal) cur.fail("content after the terminal line");
    if (cur.try_consume_word("empty")) {
      cur.expect_word("from");
      long parent = cur.read_integer();
      if (parent < 0) cur.fail("negative clause id");
      t.terminal_parent = static_cast<ClauseId>(parent);
      t.terminal_subst = cur.read_subst_canonical();
      if (!cur.at_end()) cur.fail("trailing input");
      saw_terminal = true;
      continue;
    }
    cur.expect_word("c");
    TraceLine tl;
    long id = cur.read_integer();
    if (id < 0) cur.fail("negative clause id");
    tl.id = static_cast<ClauseId>(id);
    tl.step = parse_step(cur);
    cur.expect_word("vars");
    cur.expect('(');
    while (!cur.try_consume(')')) {
      TermPtr v = cur.read_term_canonical();
      if (!v->is_var()) cur.fail("vars(...) must list variables");
      tl.vars.push_back(v->var_id());
    }
    if (cur.try_consume('+'))
      tl.sign = Sign::Positive;
    else if (cur.try_consume('-'))
      tl.sign = Sign::Negative;
    else
      cur.fail("expected sign + or -");
    tl.left = cur.read_term_canonical();
    cur.expect('=');
    tl.right = cur.read_term_canonical();
    if (!cur.at_end()) cur.fail("trailing input");
    t.lines.push_back(std::move(tl));
  }
  if (!saw_header) throw ParseError("missing trace header", 1, 1);
  if (!saw_terminal) throw ParseError("missing terminal line", lineno, 1);
  return t;
}

namespace {

bool not_dominated(Comparison c) {
  return c == Comparison::Greater || c == Comparison::Incomparable;
}

struct Verifier {
  const Problem& problem;
  const ProofTrace& trace;
  const Signature& sig;
  const TermOrdering ord;
  std::unordered_map<ClauseId, const TraceLine*> by_id;

  CheckResult invalid(int text_line, std::string reason) const {
    return CheckResult{false, text_line, std::move(reason)};
  }

  static bool vars_within(const TermPtr& t, const std::vector<std::int32_t>& allowed) {
    std::vector<std::int32_t> vs;
    collect_vars(t, vs);
    for (auto v : vs)
      if (std::find(allowed.begin(), allowed.end(), v) == allowed.end()) return false;
    return true;
  }

  static bool subst_within(const Subst& s, const std::vector<std::int32_t>& allowed) {
    for (const auto& [v, t] : s.bindings()) {
      if (std::find(allowed.begin(), allowed.end(), v) == allowed.end()) return false;
      if (!vars_within(t, allowed)) return false;
    }
    return true;
  }

  const InputClause* find_input(const std::vector<InputClause>& list,
                                const std::string& name) const {
    for (const auto& c : list)
      if (c.name == name) return &c;
    return nullptr;
  }

  CheckResult run() {
    for (std::size_t i = 0; i < trace.lines.size(); ++i) {
      const TraceLine& line = trace.lines[i];
      int text_line = static_cast<int>(i) + 2;  // header is text line 1
      if (!by_id.empty() && trace.lines[i - 1].id >= line.id)
        return invalid(text_line, "clause ids must be strictly increasing");
      CheckResult r = check_line(line, text_line);
      if (!r.valid) return r;
      by_id.emplace(line.id, &line);
    }
    int term_line = static_cast<int>(trace.lines.size()) + 2;
    auto it = by_id.find(trace.terminal_parent);
    if (it == by_id.end()) return invalid(term_line, "terminal refers to an unknown clause");
    const TraceLine& goal = *it->second;
    if (goal.sign != Sign::Negative)
      return invalid(term_line, "terminal must close a goal lineage");
    if (!subst_within(trace.terminal_subst, goal.vars))
      return invalid(term_line, "terminal substitution uses foreign variables");
    TermPtr l = trace.terminal_subst.apply(goal.left);
    TermPtr r = trace.terminal_subst.apply(goal.right);
    if (!equal(l, r))
      return invalid(term_line, "terminal substitution does not make the goal trivial");
    return CheckResult{true, 0, ""};
  }

  CheckResult check_line(const TraceLine& line, int text_line) {
    // the listed variables must be exactly the free variables, first occurrence first
    std::vector<std::int32_t> vs;
    collect_vars(line.left, vs);
    collect_vars(line.right, vs);
    if (vs != line.vars) return invalid(text_line, "vars(...) does not list the free variables");

    switch (line.step.kind) {
      case ProofStep::Kind::Axiom: {
        if (line.sign != Sign::Positive) return invalid(text_line, "axioms must be positive");
        const InputClause* in = find_input(problem.axioms, line.step.name);
        if (!in) return invalid(text_line, "unknown axiom '" + line.step.name + "'");
        if (!alpha_equal(line.left, line.right, in->left, in->right))
          return invalid(text_line, "axiom does not match the problem equation");
        return CheckResult{true, 0, ""};
      }
      case ProofStep::Kind::Goal: {
        if (line.sign != Sign::Negative) return invalid(text_line, "goals must be negative");
        const InputClause* in = find_input(problem.goals, line.step.name);
        if (!in) return invalid(text_line, "unknown goal '" + line.step.name + "'");
        if (!alpha_equal(line.left, line.right, in->left, in->right))
          return invalid(text_line, "goal does not match the problem equation");
        return CheckResult{true, 0, ""};
      }
      case ProofStep::Kind::Inferred: break;
    }

    auto ti = by_id.find(line.step.target);
    auto ri = by_id.find(line.step.rule_clause);
    if (ti == by_id.end() || ri == by_id.end())
      return invalid(text_line, "step refers to a clause not yet in the trace");
    const TraceLine& target = *ti->second;
    const TraceLine& rule = *ri->second;
    if (rule.sign != Sign::Positive)
      return invalid(text_line, "the applied equation must be positive");
    if (line.sign != target.sign) return invalid(text_line, "conclusion sign must match the target");
    if (line.step.rule == RuleKind::SuperposeRight && line.sign != Sign::Positive)
      return invalid(text_line, "superposition right emits positive clauses");
    if (line.step.rule == RuleKind::SuperposeLeft && line.sign != Sign::Negative)
      return invalid(text_line, "superposition left emits negative clauses");

    if (line.step.pos.empty() || (line.step.pos[0] != 1 && line.step.pos[0] != 2))
      return invalid(text_line, "position must start with the rewritten side (1 or 2)");
    Side tside = line.step.pos[0] == 1 ? Side::Left : Side::Right;
    Position path(line.step.pos.begin() + 1, line.step.pos.end());

    TermPtr l = line.step.dir == Direction::LeftToRight ? rule.left : rule.right;
    TermPtr r = line.step.dir == Direction::LeftToRight ? rule.right : rule.left;

    const TermPtr& t1 = tside == Side::Left ? target.left : target.right;
    const TermPtr& t2 = tside == Side::Left ? target.right : target.left;
    TermPtr sub = subterm_at(t1, path);
    if (!sub) return invalid(text_line, "position is not valid in the target");

    const Subst& sigma = line.step.subst;

    if (line.step.rule == RuleKind::Demodulate) {
      if (line.step.target == line.step.rule_clause)
        return invalid(text_line, "a clause cannot demodulate itself");
      std::vector<std::int32_t> rule_vars;
      collect_vars(l, rule_vars);
      if (!subst_within(sigma, [&] {
            std::vector<std::int32_t> allowed = rule_vars;
            for (auto v : target.vars) allowed.push_back(v);
            return allowed;
          }()))
        return invalid(text_line, "substitution uses foreign variables");
      for (const auto& [v, t] : sigma.bindings()) {
        (void)t;
        if (std::find(rule_vars.begin(), rule_vars.end(), v) == rule_vars.end())
          return invalid(text_line, "demodulation must only instantiate the rule");
      }
      if (!equal(sigma.apply(l), sub))
        return invalid(text_line, "rule instance does not match the rewritten subterm");
      TermPtr rs = sigma.apply(r);
      if (ord.compare(sub, rs) != Comparison::Greater)
        return invalid(text_line, "ordering violated: demodulation must rewrite downwards");
      TermPtr nt1 = replace_at(t1, path, rs);
      const TermPtr& nl = tside == Side::Left ? nt1 : t2;
      const TermPtr& nr = tside == Side::Left ? t2 : nt1;
      if (!alpha_equal(nl, nr, line.left, line.right))
        return invalid(text_line, "conclusion does not match the demodulation result");
      return CheckResult{true, 0, ""};
    }

    // superposition left/right
    if (sub->is_var()) return invalid(text_line, "superposition at a variable position");
    if (line.step.target == line.step.rule_clause) {
      std::int32_t ff = std::max(target.left->var_ceiling(), target.right->var_ceiling());
      std::tie(l, r) = rename_equation_above(l, r, ff);
    }
    std::vector<std::int32_t> allowed = target.vars;
    collect_vars(l, allowed);
    collect_vars(r, allowed);
    if (!subst_within(sigma, allowed))
      return invalid(text_line, "substitution uses foreign variables");
    if (!equal(sigma.apply(l), sigma.apply(sub)))
      return invalid(text_line, "substitution does not unify the rule with the subterm");
    if (!not_dominated(ord.compare(sigma.apply(l), sigma.apply(r))))
      return invalid(text_line, "ordering violated: rule applied against the ordering");
    if (!not_dominated(ord.compare(sigma.apply(t1), sigma.apply(t2))))
      return invalid(text_line, "ordering violated: rewriting the dominated side");
    TermPtr rewritten = sigma.apply(replace_at(t1, path, r));
    TermPtr other_side = sigma.apply(t2);
    const TermPtr& nl = tside == Side::Left ? rewritten : other_side;
    const TermPtr& nr = tside == Side::Left ? other_side : rewritten;
    if (!alpha_equal(nl, nr, line.left, line.right))
      return invalid(text_line, "conclusion does not match the superposition result");
    return CheckResult{true, 0, ""};
  }
};

}  // namespace

CheckResult check_trace(const Problem& problem, const ProofTrace& trace, const Signature& sig,
                        const OrderingOverrides& overrides) {
  Verifier v{problem, trace, sig, TermOrdering(trace.ordering, &sig, overrides), {}};
  return v.run();
}

CheckResult check_trace(const Problem& problem, std::string_view trace_text,
                        const OrderingOverrides& overrides) {
  Signature scratch = problem.signature;
  try {
    ProofTrace t = parse_trace(trace_text, scratch);
    return check_trace(problem, t, scratch, overrides);
  } catch (const ParseError& e) {
    return CheckResult{false, e.line, std::string("parse error: ") + e.what()};
  } catch (const std::exception& e) {
    // out-of-range numerals and the like: malformed, not an internal failure
    return CheckResult{false, 0, std::string("malformed trace: ") + e.what()};
  }
}

}  // namespace ueq
