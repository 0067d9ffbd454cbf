#include "ueq/library.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "ueq/trace.hpp"

namespace ueq {

KnowledgeBase::KnowledgeBase(SaturationParams params)
    : params_(std::move(params)),
      sig_(std::make_unique<Signature>()),
      prover_(std::make_unique<Prover>(params_, sig_.get())) {}

KnowledgeBase::AddReport KnowledgeBase::add_equation(std::string name, const TermPtr& l,
                                                     const TermPtr& r) {
  Prover::InsertReport rep = prover_->insert_equation(name, l, r);
  if (!rep.subsumed) log_.push_back(EquationEntry{std::move(name), l, r});
  return AddReport{rep.subsumed, rep.id, rep.generated};
}

SmartMatchResult KnowledgeBase::smart_match(const SmartMatchQuery& q) const {
  SaturationParams qp = params_;
  qp.max_narrowing = q.max_narrowing;
  qp.timeout_seconds = q.timeout_seconds;
  qp.max_iterations = -1;
  Prover query(qp, prover_.get());
  for (const auto& eq : q.local_equations)
    query.add_input(Sign::Positive, eq.left, eq.right, eq.name);
  query.add_input(Sign::Negative, q.lhs, q.rhs, "query");
  Outcome out = query.saturate();

  SmartMatchResult res;
  res.clauses_generated = out.stats.generated;
  res.limit = out.limit;
  if (out.kind != Outcome::Kind::Proof) return res;
  res.success = true;
  const ProofResult& proof = *out.proof;
  res.narrowing_steps = query.narrow_depth(proof.terminal_goal);
  if (const Subst* ans = query.goal_answer(proof.terminal_goal)) {
    std::vector<std::int32_t> query_vars;
    collect_vars(q.lhs, query_vars);
    collect_vars(q.rhs, query_vars);
    for (auto v : query_vars)
      if (const TermPtr* t = ans->lookup(v))
        res.substitution.bind(v, proof.terminal_subst.apply(*t));
  }
  res.trace = print_trace(emit_trace(query.bag(), proof, qp.ordering), *sig_);
  return res;
}

Problem KnowledgeBase::query_problem(const SmartMatchQuery& q) const {
  Problem p;
  p.signature = *sig_;
  for (const auto& eq : log_)
    p.axioms.push_back(InputClause{eq.name, "axiom", Sign::Positive, eq.left, eq.right, 0});
  for (const auto& eq : q.local_equations)
    p.axioms.push_back(InputClause{eq.name, "axiom", Sign::Positive, eq.left, eq.right, 0});
  p.goals.push_back(InputClause{"query", "negated_conjecture", Sign::Negative, q.lhs, q.rhs, 0});
  return p;
}

namespace {

const char* orientation_token(Orientation o) {
  switch (o) {
    case Orientation::LeftToRight: return "lr";
    case Orientation::RightToLeft: return "rl";
    default: return "un";
  }
}

std::optional<Orientation> orientation_from(std::string_view s) {
  if (s == "lr") return Orientation::LeftToRight;
  if (s == "rl") return Orientation::RightToLeft;
  if (s == "un") return Orientation::Unorientable;
  return std::nullopt;
}

}  // namespace

void KnowledgeBase::save(std::ostream& out) const {
  out << "ueq-kb v1\n";
  out << "ordering " << to_string(params_.ordering) << '\n';
  out << "ratio " << params_.age_ratio << ' ' << params_.weight_ratio << '\n';
  out << "max-weight " << params_.max_weight << '\n';
  out << "varctr " << prover_->bag().var_counter() << '\n';
  out << print_ordering_config(params_.overrides);
  for (const auto& eq : log_)
    out << "eq \"" << eq.name << "\" " << print_equation(eq.left, eq.right, *sig_) << '\n';
  const ClauseBag& bag = prover_->bag();
  for (ClauseId id = 0; id < bag.size(); ++id) {
    const UnitClause& c = bag.at(id);
    out << "clause " << id << ' ' << orientation_token(c.orientation) << ' '
        << print_step(c.step, *sig_) << " vars(";
    std::vector<std::int32_t> vs;
    collect_vars(c.left, vs);
    collect_vars(c.right, vs);
    for (std::size_t i = 0; i < vs.size(); ++i) out << (i ? " X" : "X") << vs[i];
    out << ") " << (c.sign == Sign::Negative ? '-' : '+') << ' '
        << print_equation(c.left, c.right, *sig_) << '\n';
  }
  out << "active";
  for (ClauseId id : prover_->active_positive()) out << ' ' << id;
  for (ClauseId id : prover_->active_goals()) out << ' ' << id;
  out << "\npassive";
  for (ClauseId id : prover_->passive_alive()) out << ' ' << id;
  out << "\nend\n";
  if (!out) throw KbIoError("write failed");
}

void KnowledgeBase::save_file(const std::string& path) const {
  std::ofstream f(path);
  if (!f) throw KbIoError("cannot open '" + path + "' for writing");
  save(f);
}

KnowledgeBase KnowledgeBase::load(std::istream& in) {
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) throw KbIoError("read failed");

  std::vector<std::string> lines;
  {
    std::size_t start = 0;
    while (start <= text.size() && start < text.size()) {
      std::size_t end = text.find('\n', start);
      if (end == std::string::npos) end = text.size();
      lines.emplace_back(text.substr(start, end - start));
      start = end + 1;
    }
  }
  std::size_t li = 0;
  auto next_line = [&]() -> std::optional<std::string_view> {
    while (li < lines.size() && lines[li].empty()) ++li;
    if (li >= lines.size()) return std::nullopt;
    return std::string_view(lines[li++]);
  };

  auto first = next_line();
  if (!first) throw KbFormatError("empty knowledge-base file");
  if (*first != "ueq-kb v1") {
    if (first->rfind("ueq-kb v", 0) == 0)
      throw KbVersionError("unsupported knowledge-base version: " + std::string(*first));
    throw KbFormatError("not a knowledge-base file");
  }

  SaturationParams params;
  std::int32_t varctr = 0;
  std::vector<EquationEntry> log;
  struct RawClause {
    ClauseId id;
    Orientation orientation;
    ProofStep step;
    std::vector<std::int32_t> vars;
    Sign sign;
    TermPtr left, right;
  };
  std::vector<RawClause> clauses;
  std::vector<ClauseId> active_ids, passive_ids;
  bool saw_end = false;

  auto sig = std::make_unique<Signature>();
  try {
    while (auto ln = next_line()) {
      TermCursor cur(*ln, *sig, static_cast<int>(li));
      if (cur.try_consume_word("ordering")) {
        auto kind = ordering_kind_from(cur.read_identifier());
        if (!kind) throw KbFormatError("unknown ordering kind");
        params.ordering = *kind;
      } else if (cur.try_consume_word("ratio")) {
        params.age_ratio = static_cast<int>(cur.read_integer());
        params.weight_ratio = static_cast<int>(cur.read_integer());
      } else if (cur.try_consume_word("max-weight")) {
        params.max_weight = static_cast<int>(cur.read_integer());
      } else if (cur.try_consume_word("varctr")) {
        varctr = static_cast<std::int32_t>(cur.read_integer());
      } else if (cur.try_consume_word("weight")) {
        std::string name = cur.read_identifier();
        params.overrides.weight[name] = static_cast<int>(cur.read_integer());
      } else if (cur.try_consume_word("precedence")) {
        std::string name = cur.read_identifier();
        params.overrides.priority[name] = static_cast<int>(cur.read_integer());
      } else if (cur.try_consume_word("eq")) {
        EquationEntry eq;
        eq.name = cur.read_quoted();
        eq.left = cur.read_term_canonical();
        cur.expect('=');
        eq.right = cur.read_term_canonical();
        log.push_back(std::move(eq));
      } else if (cur.try_consume_word("clause")) {
        RawClause c;
        c.id = static_cast<ClauseId>(cur.read_integer());
        auto ori = orientation_from(cur.read_identifier());
        if (!ori) throw KbFormatError("bad orientation flag");
        c.orientation = *ori;
        c.step = parse_step(cur);
        cur.expect_word("vars");
        cur.expect('(');
        while (!cur.try_consume(')')) {
          TermPtr v = cur.read_term_canonical();
          if (!v->is_var()) throw KbFormatError("vars(...) must list variables");
          c.vars.push_back(v->var_id());
        }
        if (cur.try_consume('+'))
          c.sign = Sign::Positive;
        else if (cur.try_consume('-'))
          c.sign = Sign::Negative;
        else
          throw KbFormatError("expected clause sign");
        c.left = cur.read_term_canonical();
        cur.expect('=');
        c.right = cur.read_term_canonical();
        clauses.push_back(std::move(c));
      } else if (cur.try_consume_word("active")) {
        while (!cur.at_end()) active_ids.push_back(static_cast<ClauseId>(cur.read_integer()));
      } else if (cur.try_consume_word("passive")) {
        while (!cur.at_end()) passive_ids.push_back(static_cast<ClauseId>(cur.read_integer()));
      } else if (cur.try_consume_word("end")) {
        saw_end = true;
        break;
      } else {
        throw KbFormatError("unrecognized line " + std::to_string(li));
      }
    }
  } catch (const ParseError& e) {
    throw KbFormatError(std::string("malformed knowledge base (line ") + std::to_string(e.line) +
                        "): " + e.what());
  } catch (const std::out_of_range& e) {
    throw KbFormatError(std::string("malformed knowledge base: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw KbFormatError(std::string("malformed knowledge base: ") + e.what());
  }
  if (!saw_end) throw KbFormatError("truncated knowledge-base file (missing end)");

  KnowledgeBase kb(params);
  *kb.sig_ = *sig;
  kb.prover_ = std::make_unique<Prover>(params, kb.sig_.get());
  kb.log_ = std::move(log);
  ClauseBag& bag = kb.prover_->bag();
  for (auto& rc : clauses) {
    UnitClause c;
    c.id = rc.id;
    c.sign = rc.sign;
    c.left = rc.left;
    c.right = rc.right;
    c.orientation = rc.orientation;
    c.weight = rc.left->weight() + rc.right->weight();
    c.step = std::move(rc.step);
    if (c.step.kind == ProofStep::Kind::Inferred &&
        (c.step.target >= c.id || c.step.rule_clause >= c.id))
      throw KbFormatError("provenance of clause " + std::to_string(c.id) +
                          " refers to a later clause");
    Orientation expect = kb.prover_->ordering().orient(c.left, c.right);
    if (expect != c.orientation)
      throw KbFormatError("orientation flag disagrees with the ordering for clause " +
                          std::to_string(c.id));
    bag.restore(std::move(c), varctr);
  }
  std::set<ClauseId> listed;
  for (ClauseId id : active_ids) {
    if (id >= bag.size()) throw KbFormatError("active id out of range");
    if (!listed.insert(id).second) throw KbFormatError("clause listed twice");
    kb.prover_->restore_active(id);
  }
  for (ClauseId id : passive_ids) {
    if (id >= bag.size()) throw KbFormatError("passive id out of range");
    if (!listed.insert(id).second) throw KbFormatError("clause listed twice");
    kb.prover_->restore_passive(id);
  }
  return kb;
}

KnowledgeBase KnowledgeBase::load_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw KbIoError("cannot open '" + path + "'");
  return load(f);
}

std::uint64_t KnowledgeBase::content_hash() const {
  auto fnv = [](std::uint64_t h, std::string_view s) {
    for (unsigned char c : s) {
      h ^= c;
      h *= 1099511628211ull;
    }
    return h;
  };
  std::uint64_t h = 1469598103934665603ull;
  for (ClauseId id : prover_->active_positive()) {
    const UnitClause& c = prover_->bag().at(id);
    h = fnv(h, "A" + std::to_string(id) + print_equation(c.left, c.right, *sig_));
  }
  for (ClauseId id : prover_->passive_alive()) {
    const UnitClause& c = prover_->bag().at(id);
    h = fnv(h, "P" + std::to_string(id) + print_equation(c.left, c.right, *sig_));
  }
  return h;
}

}  // namespace ueq
