#pragma once

#include <cstdint>
#include <deque>
#include <string>

#include "ueq/ordering.hpp"
#include "ueq/term.hpp"

namespace ueq {

enum class Sign : std::uint8_t { Positive, Negative };
enum class RuleKind : std::uint8_t { SuperposeRight, SuperposeLeft, Demodulate };
enum class Direction : std::uint8_t { LeftToRight, RightToLeft };

using ClauseId = std::uint32_t;

/// Provenance of a clause: an input equation (axiom), an input goal, or one
/// inference step. For inferred clauses, target is the clause rewritten into,
/// rule the equation applied, dir the direction the rule equation was used,
/// pos the rewritten position with the side prefixed (1 = left, 2 = right),
/// and subst the unifier/matcher of the step.
struct ProofStep {
  enum class Kind : std::uint8_t { Axiom, Goal, Inferred };

  Kind kind = Kind::Axiom;
  std::string name;  // axiom/goal only
  RuleKind rule = RuleKind::SuperposeRight;
  ClauseId target = 0;
  ClauseId rule_clause = 0;
  Direction dir = Direction::LeftToRight;
  Position pos;
  Subst subst;

  static ProofStep axiom(std::string n) {
    ProofStep s;
    s.kind = Kind::Axiom;
    s.name = std::move(n);
    return s;
  }
  static ProofStep goal(std::string n) {
    ProofStep s;
    s.kind = Kind::Goal;
    s.name = std::move(n);
    return s;
  }
  static ProofStep inferred(RuleKind rule, ClauseId target, ClauseId rule_clause, Direction dir,
                            Position pos, Subst subst) {
    ProofStep s;
    s.kind = Kind::Inferred;
    s.rule = rule;
    s.target = target;
    s.rule_clause = rule_clause;
    s.dir = dir;
    s.pos = std::move(pos);
    s.subst = std::move(subst);
    return s;
  }
};

/// Unit equality clause. Positive: |- left = right. Negative: left = right |-
/// (a goal). The id doubles as the age; orientation and weight are cached.
struct UnitClause {
  ClauseId id = 0;
  Sign sign = Sign::Positive;
  TermPtr left;
  TermPtr right;
  Orientation orientation = Orientation::Unorientable;
  int weight = 0;
  ProofStep step;
};

/// Append-only clause store. Ids are dense and never reused; every clause is
/// allocated with globally fresh variables so that any two bag clauses are
/// variable-disjoint. An overlay bag extends a frozen base bag without
/// touching it (used by knowledge-base queries).
class ClauseBag {
 public:
  ClauseBag() = default;
  explicit ClauseBag(const ClauseBag* base);

  const UnitClause& make(Sign sign, const TermPtr& l, const TermPtr& r, ProofStep step,
                         const TermOrdering& ord);
  const UnitClause& at(ClauseId id) const;
  ClauseId size() const { return base_size_ + static_cast<ClauseId>(local_.size()); }
  std::int32_t var_counter() const { return var_counter_; }

  /// Variable renaming applied by the most recent make(), as a substitution
  /// from the caller's variable ids to the stored clause's.
  const Subst& last_renaming() const { return last_renaming_; }

  /// Persistence path: append a clause whose fields are already final.
  /// The id must equal size() and its variables must sit below the counter.
  const UnitClause& restore(UnitClause c, std::int32_t var_counter_after);

 private:
  const ClauseBag* base_ = nullptr;
  ClauseId base_size_ = 0;
  std::deque<UnitClause> local_;
  std::int32_t var_counter_ = 0;
  Subst last_renaming_;
};

/// Tautology test: positive with structurally equal sides. Negative clauses
/// are never tautologies (they are success states).
bool is_tautology(const UnitClause& c);

/// True when some substitution maps c's equation onto d's, the equation taken
/// as an unordered pair. Requires equal signs.
bool subsumes(const UnitClause& c, const UnitClause& d);
bool subsumes_equation(const TermPtr& cl, const TermPtr& cr, const TermPtr& dl, const TermPtr& dr);

}  // namespace ueq
