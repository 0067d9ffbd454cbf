#include "ueq/saturation.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <tuple>

namespace ueq {

namespace {

void check(bool ok, const char* msg) {
  if (!ok) throw std::logic_error(msg);
}

// the "not smaller-or-equal" side condition of the inference rules
bool not_dominated(Comparison c) {
  return c == Comparison::Greater || c == Comparison::Incomparable;
}

std::uint32_t side_index(Side s) { return s == Side::Left ? 1u : 2u; }

}  // namespace

std::optional<InferredClause> attempt_superposition(const ClauseBag& bag, const TermOrdering& ord,
                                                    ClauseId rule_id, Direction dir,
                                                    ClauseId target_id, Side tside,
                                                    const Position& path) {
  const UnitClause& rule = bag.at(rule_id);
  const UnitClause& target = bag.at(target_id);
  if (rule.sign != Sign::Positive) return std::nullopt;
  TermPtr l = dir == Direction::LeftToRight ? rule.left : rule.right;
  TermPtr r = dir == Direction::LeftToRight ? rule.right : rule.left;
  if (rule_id == target_id) {
    std::int32_t ff = std::max(target.left->var_ceiling(), target.right->var_ceiling());
    std::tie(l, r) = rename_equation_above(l, r, ff);
  }
  const TermPtr& t1 = tside == Side::Left ? target.left : target.right;
  const TermPtr& t2 = tside == Side::Left ? target.right : target.left;
  TermPtr sub = subterm_at(t1, path);
  if (!sub || sub->is_var()) return std::nullopt;
  auto sigma = unify(l, sub);
  if (!sigma) return std::nullopt;
  if (!not_dominated(ord.compare(sigma->apply(l), sigma->apply(r)))) return std::nullopt;
  if (!not_dominated(ord.compare(sigma->apply(t1), sigma->apply(t2)))) return std::nullopt;
  TermPtr rewritten = sigma->apply(replace_at(t1, path, r));
  TermPtr other_side = sigma->apply(t2);

  InferredClause out;
  out.sign = target.sign;
  out.left = tside == Side::Left ? rewritten : other_side;
  out.right = tside == Side::Left ? other_side : rewritten;
  Position spos;
  spos.reserve(path.size() + 1);
  spos.push_back(side_index(tside));
  spos.insert(spos.end(), path.begin(), path.end());
  RuleKind kind =
      target.sign == Sign::Negative ? RuleKind::SuperposeLeft : RuleKind::SuperposeRight;
  out.step = ProofStep::inferred(kind, target_id, rule_id, dir, std::move(spos),
                                 std::move(*sigma));
  return out;
}

namespace {

std::vector<ClauseId> superpose_into(ClauseBag& bag, const TermOrdering& ord, ClauseId rule_id,
                                     ClauseId target_id) {
  std::vector<ClauseId> out;
  for (Side tside : {Side::Left, Side::Right}) {
    {
      const UnitClause& target = bag.at(target_id);
      if (target.orientation == Orientation::LeftToRight && tside == Side::Right) continue;
      if (target.orientation == Orientation::RightToLeft && tside == Side::Left) continue;
    }
    std::vector<Position> positions;
    {
      const UnitClause& target = bag.at(target_id);
      const TermPtr& t1 = tside == Side::Left ? target.left : target.right;
      non_var_positions(t1, positions);
    }
    for (const auto& p : positions) {
      for (Direction dir : {Direction::LeftToRight, Direction::RightToLeft}) {
        const UnitClause& rule = bag.at(rule_id);
        if (rule.orientation == Orientation::LeftToRight && dir == Direction::RightToLeft)
          continue;
        if (rule.orientation == Orientation::RightToLeft && dir == Direction::LeftToRight)
          continue;
        auto inf = attempt_superposition(bag, ord, rule_id, dir, target_id, tside, p);
        if (inf)
          out.push_back(bag.make(inf->sign, inf->left, inf->right, std::move(inf->step), ord).id);
      }
    }
  }
  return out;
}

}  // namespace

std::vector<ClauseId> superpose_right(ClauseBag& bag, const TermOrdering& ord, ClauseId rule,
                                      ClauseId target) {
  if (bag.at(rule).sign != Sign::Positive || bag.at(target).sign != Sign::Positive)
    throw std::invalid_argument("superpose_right needs two positive clauses");
  return superpose_into(bag, ord, rule, target);
}

std::vector<ClauseId> superpose_left(ClauseBag& bag, const TermOrdering& ord, ClauseId rule,
                                     ClauseId goal) {
  if (bag.at(rule).sign != Sign::Positive || bag.at(goal).sign != Sign::Negative)
    throw std::invalid_argument("superpose_left needs a positive rule and a negative goal");
  return superpose_into(bag, ord, rule, goal);
}

std::optional<Subst> equality_resolution(const UnitClause& goal) {
  if (goal.sign != Sign::Negative) return std::nullopt;
  return unify(goal.left, goal.right);
}

Prover::Prover(const SaturationParams& params, const Signature* sig)
    : params_(params), sig_(sig), ord_(params.ordering, sig, params.overrides) {
  if (params_.age_ratio <= 0 && params_.weight_ratio <= 0)
    throw std::invalid_argument("age:weight ratio must not be 0:0");
}

Prover::Prover(const SaturationParams& params, const Prover* base)
    : params_(params),
      sig_(base->sig_),
      ord_(params.ordering, base->sig_, params.overrides),
      base_(base),
      bag_(&base->bag_) {
  if (params_.age_ratio <= 0 && params_.weight_ratio <= 0)
    throw std::invalid_argument("age:weight ratio must not be 0:0");
}

ClauseId Prover::add_input(Sign sign, const TermPtr& l, const TermPtr& r, std::string name) {
  ProofStep step = sign == Sign::Negative ? ProofStep::goal(std::move(name))
                                          : ProofStep::axiom(std::move(name));
  const UnitClause& c = bag_.make(sign, l, r, std::move(step), ord_);
  if (sign == Sign::Negative) {
    answers_[c.id] = bag_.last_renaming();
    narrow_depth_[c.id] = 0;
  }
  enqueue_passive(c.id);
  return c.id;
}

std::vector<Side> Prover::kept_sides(const UnitClause& c) const {
  switch (c.orientation) {
    case Orientation::LeftToRight: return {Side::Left};
    case Orientation::RightToLeft: return {Side::Right};
    default: return {Side::Left, Side::Right};
  }
}

void Prover::enqueue_passive(ClauseId id) {
  const UnitClause& c = bag_.at(id);
  passive_.alive.insert(id);
  passive_.by_age.push(id);
  passive_.by_weight.push({c.weight, id});
  for (Side s : kept_sides(c))
    from_passive_.insert(s == Side::Left ? c.left : c.right, IndexEntry{id, s, {}});
}

void Prover::deindex_passive(const UnitClause& c) {
  for (Side s : kept_sides(c))
    from_passive_.remove(s == Side::Left ? c.left : c.right, IndexEntry{c.id, s, {}});
}

void Prover::restore_passive(ClauseId id) { enqueue_passive(id); }

std::optional<ClauseId> Prover::select() {
  if (passive_.alive.empty()) return std::nullopt;
  long cycle = params_.age_ratio + params_.weight_ratio;
  bool by_age = params_.weight_ratio == 0 ||
                (params_.age_ratio > 0 && (select_counter_ % cycle) < params_.age_ratio);
  ++select_counter_;
  ClauseId id = 0;
  if (by_age) {
    while (true) {
      id = passive_.by_age.top();
      passive_.by_age.pop();
      if (passive_.alive.count(id)) break;
    }
  } else {
    while (true) {
      id = passive_.by_weight.top().second;
      passive_.by_weight.pop();
      if (passive_.alive.count(id)) break;
    }
  }
  passive_.alive.erase(id);
  deindex_passive(bag_.at(id));
  if (selection_log) selection_log->emplace_back(id, by_age);
  return id;
}

void Prover::gather_unifiable(const DiscriminationTree Prover::* tree, const TermPtr& q,
                              std::vector<IndexEntry>& out) const {
  if (base_) base_->gather_unifiable(tree, q, out);
  (this->*tree).retrieve_unifiable(q, out);
}

void Prover::gather_generalizations(const DiscriminationTree Prover::* tree, const TermPtr& q,
                                    std::vector<IndexEntry>& out) const {
  if (base_) base_->gather_generalizations(tree, q, out);
  (this->*tree).retrieve_generalizations(q, out);
}

void Prover::for_each_active(Sign sign, const std::function<bool(const UnitClause&)>& fn) const {
  const Prover* layers[8];
  int n = 0;
  for (const Prover* p = this; p; p = p->base_) layers[n++] = p;
  for (int i = n - 1; i >= 0; --i) {
    const auto& list = sign == Sign::Positive ? layers[i]->active_pos_ : layers[i]->active_neg_;
    for (ClauseId id : list)
      if (!fn(bag_.at(id))) return;
  }
}

bool Prover::is_subsumed(const UnitClause& c) const {
  std::vector<IndexEntry> cands;
  auto fromtree =
      c.sign == Sign::Positive ? &Prover::from_active_pos_ : &Prover::from_active_neg_;
  gather_generalizations(fromtree, c.left, cands);
  gather_generalizations(fromtree, c.right, cands);
  gather_generalizations(&Prover::from_passive_, c.left, cands);
  gather_generalizations(&Prover::from_passive_, c.right, cands);
  std::sort(cands.begin(), cands.end());
  ClauseId last = c.id;
  bool first = true;
  for (const auto& e : cands) {
    if (!first && e.clause == last) continue;
    first = false;
    last = e.clause;
    if (e.clause == c.id) continue;
    const UnitClause& d = bag_.at(e.clause);
    if (d.sign != c.sign || d.weight > c.weight) continue;
    if (subsumes(d, c)) return true;
  }
  return false;
}

std::optional<Prover::RewriteStep> Prover::find_rewrite(const TermPtr& t) const {
  if (t->is_var()) return std::nullopt;
  if (normal_.count(t.get())) return std::nullopt;
  for (std::uint32_t i = 0; i < t->args().size(); ++i) {
    auto inner = find_rewrite(t->args()[i]);
    if (inner) {
      inner->path.insert(inner->path.begin(), i + 1);
      return inner;
    }
  }
  std::vector<IndexEntry> cands;
  gather_generalizations(&Prover::from_active_pos_, t, cands);
  std::sort(cands.begin(), cands.end());
  for (const auto& e : cands) {
    const UnitClause& rule = bag_.at(e.clause);
    const TermPtr& l0 = e.side == Side::Left ? rule.left : rule.right;
    const TermPtr& r0 = e.side == Side::Left ? rule.right : rule.left;
    auto sigma = match(l0, t);
    if (!sigma) continue;
    TermPtr rs = sigma->apply(r0);
    if (ord_.compare(t, rs) != Comparison::Greater) continue;
    check(equal(sigma->apply(l0), t), "demodulation instance does not match redex");
    Direction dir =
        e.side == Side::Left ? Direction::LeftToRight : Direction::RightToLeft;
    return RewriteStep{e.clause, dir, {}, std::move(*sigma), std::move(rs)};
  }
  normal_.insert(t.get());
  return std::nullopt;
}

void Prover::record_answer(ClauseId child, ClauseId parent, const Subst& sigma) {
  auto it = answers_.find(parent);
  if (it == answers_.end()) return;
  const Subst& ren = bag_.last_renaming();
  Subst out;
  for (const auto& [v, t] : it->second.bindings()) out.bind(v, ren.apply(sigma.apply(t)));
  answers_[child] = std::move(out);
}

ClauseId Prover::demodulate(ClauseId id, std::vector<ClauseId>* chain) {
  ClauseId cur = id;
  int guard = 0;
  while (true) {
    const UnitClause& c = bag_.at(cur);
    Side side = Side::Left;
    auto rw = find_rewrite(c.left);
    if (!rw) {
      rw = find_rewrite(c.right);
      side = Side::Right;
    }
    if (!rw) return cur;
    check(++guard <= 100000, "demodulation exceeded the step bound");
    ++stats_.demod_steps;
    TermPtr nl = c.left;
    TermPtr nr = c.right;
    if (side == Side::Left)
      nl = replace_at(c.left, rw->path, rw->replacement);
    else
      nr = replace_at(c.right, rw->path, rw->replacement);
    Position spos;
    spos.reserve(rw->path.size() + 1);
    spos.push_back(side_index(side));
    spos.insert(spos.end(), rw->path.begin(), rw->path.end());
    Sign sign = c.sign;
    Subst sigma = rw->sigma;
    const UnitClause& d =
        bag_.make(sign, nl, nr,
                  ProofStep::inferred(RuleKind::Demodulate, cur, rw->rule, rw->dir,
                                      std::move(spos), std::move(rw->sigma)),
                  ord_);
    if (sign == Sign::Negative) {
      narrow_depth_[d.id] = narrow_depth(cur);
      record_answer(d.id, cur, sigma);
    }
    if (chain) chain->push_back(d.id);
    cur = d.id;
  }
}

std::optional<ClauseId> Prover::forward_simplify(ClauseId id) {
  ClauseId nid = demodulate(id);
  const UnitClause& c = bag_.at(nid);
  if (is_tautology(c) || is_subsumed(c)) {
    ++stats_.simplified_away;
    return std::nullopt;
  }
  return nid;
}

void Prover::activate(ClauseId id) {
  const UnitClause& c = bag_.at(id);
  if (c.sign == Sign::Positive) normal_.clear();  // new rewrite rule
  active_set_.insert(id);
  (c.sign == Sign::Positive ? active_pos_ : active_neg_).push_back(id);
  DiscriminationTree& fromtree =
      c.sign == Sign::Positive ? from_active_pos_ : from_active_neg_;
  DiscriminationTree& intotree =
      c.sign == Sign::Positive ? into_active_pos_ : into_active_neg_;
  for (Side s : kept_sides(c)) {
    const TermPtr& side = s == Side::Left ? c.left : c.right;
    fromtree.insert(side, IndexEntry{id, s, {}});
    std::vector<Position> ps;
    non_var_positions(side, ps);
    for (auto& p : ps) intotree.insert(subterm_at(side, p), IndexEntry{id, s, p});
  }
}

void Prover::deactivate(const UnitClause& c) {
  active_set_.erase(c.id);
  auto& list = c.sign == Sign::Positive ? active_pos_ : active_neg_;
  list.erase(std::remove(list.begin(), list.end(), c.id), list.end());
  DiscriminationTree& fromtree =
      c.sign == Sign::Positive ? from_active_pos_ : from_active_neg_;
  DiscriminationTree& intotree =
      c.sign == Sign::Positive ? into_active_pos_ : into_active_neg_;
  for (Side s : kept_sides(c)) {
    const TermPtr& side = s == Side::Left ? c.left : c.right;
    fromtree.remove(side, IndexEntry{c.id, s, {}});
    std::vector<Position> ps;
    non_var_positions(side, ps);
    for (auto& p : ps) intotree.remove(subterm_at(side, p), IndexEntry{c.id, s, p});
  }
}

void Prover::backward_simplify(ClauseId id) {
  const UnitClause& c = bag_.at(id);
  // clauses subsumed by c (own layer only; a base layer is frozen)
  std::vector<IndexEntry> cands;
  const DiscriminationTree& fromtree =
      c.sign == Sign::Positive ? from_active_pos_ : from_active_neg_;
  fromtree.retrieve_unifiable(c.left, cands);
  fromtree.retrieve_unifiable(c.right, cands);
  from_passive_.retrieve_unifiable(c.left, cands);
  from_passive_.retrieve_unifiable(c.right, cands);
  std::vector<ClauseId> victims;
  for (const auto& e : cands) {
    if (e.clause == id) continue;
    const UnitClause& d = bag_.at(e.clause);
    if (d.sign != c.sign) continue;
    if (subsumes(c, d)) victims.push_back(e.clause);
  }
  std::sort(victims.begin(), victims.end());
  victims.erase(std::unique(victims.begin(), victims.end()), victims.end());
  for (ClauseId v : victims) {
    if (active_set_.count(v)) {
      deactivate(bag_.at(v));
      ++stats_.backward_removed;
    } else if (passive_.alive.count(v)) {
      passive_.alive.erase(v);
      deindex_passive(bag_.at(v));
      ++stats_.backward_removed;
    }
  }

  if (c.sign != Sign::Positive) return;
  // active clauses c's equation demodulates (own layer only)
  std::vector<ClauseId> rewritable;
  for (Side s : kept_sides(c)) {
    const TermPtr& l = s == Side::Left ? c.left : c.right;
    const TermPtr& r = s == Side::Left ? c.right : c.left;
    std::vector<IndexEntry> hits;
    into_active_pos_.retrieve_unifiable(l, hits);
    into_active_neg_.retrieve_unifiable(l, hits);
    for (const auto& e : hits) {
      if (e.clause == id) continue;
      const UnitClause& d = bag_.at(e.clause);
      const TermPtr& dside = e.side == Side::Left ? d.left : d.right;
      TermPtr sub = subterm_at(dside, e.pos);
      if (!sub) continue;
      auto sigma = match(l, sub);
      if (!sigma) continue;
      if (ord_.compare(sub, sigma->apply(r)) != Comparison::Greater) continue;
      rewritable.push_back(e.clause);
    }
  }
  std::sort(rewritable.begin(), rewritable.end());
  rewritable.erase(std::unique(rewritable.begin(), rewritable.end()), rewritable.end());
  for (ClauseId v : rewritable) {
    if (!active_set_.count(v)) continue;
    deactivate(bag_.at(v));
    ++stats_.backward_removed;
    ClauseId nid = demodulate(v);
    const UnitClause& d = bag_.at(nid);
    if (is_tautology(d) || is_subsumed(d)) {
      ++stats_.simplified_away;
      continue;
    }
    if (d.weight > params_.max_weight) {
      ++stats_.dropped_weight;
      continue;
    }
    enqueue_passive(nid);
  }
}

bool Prover::close_covered_goal(const UnitClause& fact, const UnitClause& goal, Outcome* out) {
  struct Attempt {
    Direction dir;
    Side side;
  };
  const Attempt attempts[] = {{Direction::LeftToRight, Side::Left},
                              {Direction::RightToLeft, Side::Left},
                              {Direction::LeftToRight, Side::Right},
                              {Direction::RightToLeft, Side::Right}};
  for (const auto& a : attempts) {
    auto inf = attempt_superposition(bag_, ord_, fact.id, a.dir, goal.id, a.side, {});
    if (!inf) continue;
    if (!unify(inf->left, inf->right)) continue;
    Subst sigma = inf->step.subst;
    ClauseId goal_id = goal.id;
    const UnitClause& d = bag_.make(inf->sign, inf->left, inf->right, std::move(inf->step), ord_);
    narrow_depth_[d.id] = narrow_depth(goal_id);
    record_answer(d.id, goal_id, sigma);
    auto terminal = unify(d.left, d.right);
    check(terminal.has_value(), "covered goal failed to close");
    out->proof = ProofResult{d.id, std::move(*terminal)};
    return true;
  }
  return false;
}

bool Prover::try_close_goal(const UnitClause& goal, Outcome* out) {
  if (auto sigma = equality_resolution(goal)) {
    out->proof = ProofResult{goal.id, std::move(*sigma)};
    return true;
  }
  bool closed = false;
  for_each_active(Sign::Positive, [&](const UnitClause& fact) {
    if (!subsumes_equation(fact.left, fact.right, goal.left, goal.right)) return true;
    if (close_covered_goal(fact, goal, out)) {
      closed = true;
      return false;
    }
    return true;
  });
  return closed;
}

bool Prover::try_fact_against_goals(const UnitClause& fact, Outcome* out) {
  std::vector<ClauseId> goals = active_neg_;
  for (ClauseId gid : goals) {
    const UnitClause& g = bag_.at(gid);
    if (!subsumes_equation(fact.left, fact.right, g.left, g.right)) continue;
    if (close_covered_goal(fact, g, out)) return true;
  }
  return false;
}

bool Prover::process_new_clause(const InferredClause& inf, int depth, Outcome* out) {
  ++stats_.generated;
  if (inf.sign == Sign::Negative && params_.max_narrowing >= 0 &&
      inf.step.rule == RuleKind::SuperposeLeft && depth > params_.max_narrowing) {
    ++stats_.narrowing_discarded;
    return false;
  }
  Subst sigma = inf.step.subst;
  ClauseId parent_goal = inf.step.target;
  const UnitClause& raw = bag_.make(inf.sign, inf.left, inf.right, ProofStep(inf.step), ord_);
  ClauseId rid = raw.id;
  if (inf.sign == Sign::Negative) {
    narrow_depth_[rid] = depth;
    record_answer(rid, parent_goal, sigma);
  }
  ClauseId nid = demodulate(rid);
  const UnitClause& c = bag_.at(nid);
  if (is_tautology(c) || is_subsumed(c)) {
    ++stats_.simplified_away;
    return false;
  }
  bool proof = c.sign == Sign::Negative ? try_close_goal(c, out) : try_fact_against_goals(c, out);
  if (proof) return true;  // out->proof is set; the caller flips the outcome kind
  if (c.weight > params_.max_weight) {
    ++stats_.dropped_weight;
    return false;
  }
  enqueue_passive(nid);
  return false;
}

bool Prover::infer_from(ClauseId given, Outcome* out) {
  const UnitClause& g = bag_.at(given);
  if (g.sign == Sign::Positive) {
    // the given equation as the rule, into the active clauses (including itself)
    for (Direction dir : {Direction::LeftToRight, Direction::RightToLeft}) {
      if (g.orientation == Orientation::LeftToRight && dir == Direction::RightToLeft) continue;
      if (g.orientation == Orientation::RightToLeft && dir == Direction::LeftToRight) continue;
      const TermPtr& l = dir == Direction::LeftToRight ? g.left : g.right;
      std::vector<IndexEntry> hits;
      gather_unifiable(&Prover::into_active_pos_, l, hits);
      gather_unifiable(&Prover::into_active_neg_, l, hits);
      std::sort(hits.begin(), hits.end());
      hits.erase(std::unique(hits.begin(), hits.end()), hits.end());
      for (const auto& e : hits) {
        auto inf = attempt_superposition(bag_, ord_, given, dir, e.clause, e.side, e.pos);
        if (!inf) continue;
        const UnitClause& target = bag_.at(e.clause);
        int depth = target.sign == Sign::Negative ? narrow_depth(e.clause) + 1 : 0;
        if (process_new_clause(*inf, depth, out)) return true;
      }
    }
  }
  // the given clause as the target of the active rules
  {
    for (Side s : kept_sides(g)) {
      const TermPtr& t1 = s == Side::Left ? g.left : g.right;
      std::vector<Position> ps;
      non_var_positions(t1, ps);
      for (const auto& p : ps) {
        TermPtr sub = subterm_at(t1, p);
        std::vector<IndexEntry> hits;
        gather_unifiable(&Prover::from_active_pos_, sub, hits);
        std::sort(hits.begin(), hits.end());
        hits.erase(std::unique(hits.begin(), hits.end()), hits.end());
        for (const auto& e : hits) {
          if (e.clause == given) continue;  // covered by the rule role above
          Direction dir =
              e.side == Side::Left ? Direction::LeftToRight : Direction::RightToLeft;
          auto inf = attempt_superposition(bag_, ord_, e.clause, dir, given, s, p);
          if (!inf) continue;
          int depth = g.sign == Sign::Negative ? narrow_depth(given) + 1 : 0;
          if (process_new_clause(*inf, depth, out)) return true;
        }
      }
    }
  }
  return false;
}

Outcome Prover::saturate(const std::atomic<bool>* cancel) {
  using Clock = std::chrono::steady_clock;
  std::optional<Clock::time_point> deadline;
  if (params_.timeout_seconds >= 0)
    deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                  std::chrono::duration<double>(params_.timeout_seconds));
  Outcome out;
  while (true) {
    if (cancel && cancel->load(std::memory_order_relaxed)) {
      out.kind = Outcome::Kind::ResourceOut;
      out.limit = LimitKind::Cancelled;
      break;
    }
    if (deadline && Clock::now() >= *deadline) {
      out.kind = Outcome::Kind::ResourceOut;
      out.limit = LimitKind::Timeout;
      break;
    }
    if (params_.max_iterations >= 0 && stats_.iterations >= params_.max_iterations) {
      out.kind = Outcome::Kind::ResourceOut;
      out.limit = LimitKind::Iterations;
      break;
    }
    auto sel = select();
    if (!sel) {
      if (stats_.dropped_weight > 0) {
        out.kind = Outcome::Kind::ResourceOut;
        out.limit = LimitKind::WeightCap;
      } else if (stats_.narrowing_discarded > 0) {
        out.kind = Outcome::Kind::ResourceOut;
        out.limit = LimitKind::NarrowingBound;
      } else {
        out.kind = Outcome::Kind::Saturated;
      }
      break;
    }
    ++stats_.iterations;
    auto given = forward_simplify(*sel);
    if (!given) continue;
    const UnitClause& g = bag_.at(*given);
    bool proof =
        g.sign == Sign::Negative ? try_close_goal(g, &out) : try_fact_against_goals(g, &out);
    if (proof) {
      out.kind = Outcome::Kind::Proof;
      break;
    }
    activate(*given);
    backward_simplify(*given);
    if (infer_from(*given, &out)) {
      out.kind = Outcome::Kind::Proof;
      break;
    }
  }
  out.stats = stats_;
  return out;
}

Prover::InsertReport Prover::insert_equation(std::string name, const TermPtr& l,
                                             const TermPtr& r) {
  InsertReport rep;
  std::int64_t gen0 = stats_.generated;
  const UnitClause& c0 =
      bag_.make(Sign::Positive, l, r, ProofStep::axiom(std::move(name)), ord_);
  rep.id = c0.id;
  auto given = forward_simplify(c0.id);
  if (!given) {
    rep.subsumed = true;
    return rep;
  }
  rep.id = *given;
  Outcome sink;
  activate(*given);
  backward_simplify(*given);
  infer_from(*given, &sink);
  rep.generated = stats_.generated - gen0;
  return rep;
}

std::vector<ClauseId> Prover::active_positive() const {
  std::vector<ClauseId> out;
  for_each_active(Sign::Positive, [&](const UnitClause& c) {
    out.push_back(c.id);
    return true;
  });
  return out;
}

std::vector<ClauseId> Prover::active_goals() const {
  std::vector<ClauseId> out;
  for_each_active(Sign::Negative, [&](const UnitClause& c) {
    out.push_back(c.id);
    return true;
  });
  return out;
}

std::vector<ClauseId> Prover::passive_alive() const {
  std::vector<ClauseId> out(passive_.alive.begin(), passive_.alive.end());
  std::sort(out.begin(), out.end());
  return out;
}

int Prover::narrow_depth(ClauseId id) const {
  auto it = narrow_depth_.find(id);
  return it == narrow_depth_.end() ? 0 : it->second;
}

const Subst* Prover::goal_answer(ClauseId id) const {
  auto it = answers_.find(id);
  return it == answers_.end() ? nullptr : &it->second;
}

}  // namespace ueq
