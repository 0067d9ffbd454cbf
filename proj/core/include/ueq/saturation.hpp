#pragma once

#include <atomic>
#include <cstdint>
#include <functional>
#include <optional>
#include <queue>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "ueq/clause.hpp"
#include "ueq/index.hpp"
#include "ueq/ordering.hpp"
#include "ueq/term.hpp"

namespace ueq {

struct SaturationParams {
  OrderingKind ordering = OrderingKind::Lpo;
  OrderingOverrides overrides;
  int age_ratio = 1;
  int weight_ratio = 4;
  int max_weight = 100;
  std::int64_t max_iterations = -1;   // < 0: unlimited
  double timeout_seconds = 10.0;      // < 0: unlimited
  int max_narrowing = -1;             // < 0: unbounded; >= 0 bounds goal narrowing depth
};

enum class LimitKind { None, Timeout, Iterations, WeightCap, NarrowingBound, Cancelled };

struct SaturationStats {
  std::int64_t iterations = 0;
  std::int64_t generated = 0;
  std::int64_t simplified_away = 0;
  std::int64_t dropped_weight = 0;
  std::int64_t narrowing_discarded = 0;
  std::int64_t demod_steps = 0;
  std::int64_t backward_removed = 0;
};

struct ProofResult {
  ClauseId terminal_goal = 0;  // negative clause whose sides the terminal unifier equates
  Subst terminal_subst;
};

struct Outcome {
  enum class Kind { Proof, Saturated, ResourceOut };
  Kind kind = Kind::Saturated;
  std::optional<ProofResult> proof;
  LimitKind limit = LimitKind::None;
  SaturationStats stats;
};

/// One superposition conclusion before registration.
struct InferredClause {
  Sign sign = Sign::Positive;
  TermPtr left;
  TermPtr right;
  ProofStep step;
};

/// Core of both superposition rules: rewrite target's tside-side at path with
/// the rule equation taken in direction dir, under the mgu of the rule's
/// left-hand side (after direction swap) and the non-variable subterm there.
/// Returns nullopt when the position is invalid or a side condition fails.
/// When rule_id == target_id the rule copy is renamed apart canonically
/// (fresh variables above the target's, in first-occurrence order), which
/// trace replay reproduces.
std::optional<InferredClause> attempt_superposition(const ClauseBag& bag, const TermOrdering& ord,
                                                    ClauseId rule_id, Direction dir,
                                                    ClauseId target_id, Side tside,
                                                    const Position& path);

/// All superpositions of rule (both directions) into target (both sides, all
/// non-variable positions), registered in the bag. Both clauses positive.
std::vector<ClauseId> superpose_right(ClauseBag& bag, const TermOrdering& ord, ClauseId rule,
                                      ClauseId target);

/// Narrowing: same mechanics into a negative clause, emitting negative clauses.
std::vector<ClauseId> superpose_left(ClauseBag& bag, const TermOrdering& ord, ClauseId rule,
                                     ClauseId goal);

/// The unifier closing a goal whose sides unify (deriving the empty clause).
std::optional<Subst> equality_resolution(const UnitClause& goal);

/// Given-clause saturation over a clause bag: active/passive sets, age:weight
/// selection, forward/backward simplification, weight-capped generation.
///
/// A Prover built on top of a frozen base shares the base's active clauses and
/// indexes read-only; everything it derives stays in its own overlay. The
/// knowledge base uses this for queries.
class Prover {
 public:
  Prover(const SaturationParams& params, const Signature* sig);
  Prover(const SaturationParams& params, const Prover* base);

  ClauseId add_input(Sign sign, const TermPtr& l, const TermPtr& r, std::string name);
  Outcome saturate(const std::atomic<bool>* cancel = nullptr);

  struct InsertReport {
    bool subsumed = false;
    ClauseId id = 0;
    std::int64_t generated = 0;
  };
  /// One given-clause round with this equation as the given clause: simplify,
  /// activate, backward-simplify, compose with all active equations; results
  /// land in the passive set.
  InsertReport insert_equation(std::string name, const TermPtr& l, const TermPtr& r);

  const ClauseBag& bag() const { return bag_; }
  ClauseBag& bag() { return bag_; }
  const TermOrdering& ordering() const { return ord_; }
  const Signature* signature() const { return sig_; }
  const SaturationParams& params() const { return params_; }
  const SaturationStats& stats() const { return stats_; }

  std::vector<ClauseId> active_positive() const;  // base layers first, activation order
  std::vector<ClauseId> active_goals() const;
  std::vector<ClauseId> passive_alive() const;  // sorted by id
  int narrow_depth(ClauseId id) const;

  /// Accumulated instantiation of a goal lineage: maps the input goal's
  /// original variable ids to terms over the clause's frame.
  const Subst* goal_answer(ClauseId id) const;

  /// Exhaustive innermost rewriting of a registered clause with the active
  /// positive equations; every step is registered (parent chain) and obeys
  /// the strict ordering condition. Returns the normal form's id.
  ClauseId demodulate(ClauseId id, std::vector<ClauseId>* chain = nullptr);

  /// Demodulate, then drop tautologies and clauses subsumed by an active or
  /// passive clause. Returns the normalized clause id, or nullopt if dropped.
  std::optional<ClauseId> forward_simplify(ClauseId id);

  /// Removes active/passive clauses subsumed by c and moves active clauses
  /// demodulable by c back to passive in rewritten form.
  void backward_simplify(ClauseId id);

  /// Low-level: put a registered clause into the active set and indexes.
  void activate(ClauseId id);

  /// Restore hooks for persistence (library module).
  void restore_active(ClauseId id) { activate(id); }
  void restore_passive(ClauseId id);

  /// Pops the next given clause by the age:weight ratio: out of every
  /// (a+w) selections the first a take the oldest passive clause, the rest
  /// the lightest (ties by id). Fair whenever a >= 1.
  std::optional<ClauseId> select();

  /// When set, every selection is appended as (id, picked-by-age).
  std::vector<std::pair<ClauseId, bool>>* selection_log = nullptr;

 private:
  struct PassiveQueue {
    std::priority_queue<ClauseId, std::vector<ClauseId>, std::greater<ClauseId>> by_age;
    std::priority_queue<std::pair<int, ClauseId>, std::vector<std::pair<int, ClauseId>>,
                        std::greater<std::pair<int, ClauseId>>>
        by_weight;
    std::unordered_set<ClauseId> alive;
  };

  bool is_subsumed(const UnitClause& c) const;
  struct RewriteStep {
    ClauseId rule;
    Direction dir;
    Position path;  // within the side
    Subst sigma;
    TermPtr replacement;
  };
  std::optional<RewriteStep> find_rewrite(const TermPtr& t) const;
  bool process_new_clause(const InferredClause& inf, int depth, Outcome* out);
  bool try_close_goal(const UnitClause& goal, Outcome* out);
  bool try_fact_against_goals(const UnitClause& fact, Outcome* out);
  bool close_covered_goal(const UnitClause& fact, const UnitClause& goal, Outcome* out);
  bool infer_from(ClauseId given, Outcome* out);
  void enqueue_passive(ClauseId id);
  void deindex_passive(const UnitClause& c);
  void deactivate(const UnitClause& c);
  void record_answer(ClauseId child, ClauseId parent, const Subst& sigma);

  std::vector<Side> kept_sides(const UnitClause& c) const;
  void gather_unifiable(const DiscriminationTree Prover::* tree, const TermPtr& q,
                        std::vector<IndexEntry>& out) const;
  void gather_generalizations(const DiscriminationTree Prover::* tree, const TermPtr& q,
                              std::vector<IndexEntry>& out) const;
  void for_each_active(Sign sign, const std::function<bool(const UnitClause&)>& fn) const;

  SaturationParams params_;
  const Signature* sig_;
  TermOrdering ord_;
  const Prover* base_ = nullptr;
  ClauseBag bag_;

  std::vector<ClauseId> active_pos_;
  std::vector<ClauseId> active_neg_;
  std::unordered_set<ClauseId> active_set_;
  PassiveQueue passive_;
  std::int64_t select_counter_ = 0;

  DiscriminationTree from_active_pos_;
  DiscriminationTree from_active_neg_;
  DiscriminationTree into_active_pos_;
  DiscriminationTree into_active_neg_;
  DiscriminationTree from_passive_;

  std::unordered_map<ClauseId, int> narrow_depth_;
  std::unordered_map<ClauseId, Subst> answers_;
  // subterms known to be in normal form w.r.t. the current rewrite rules;
  // cleared whenever the positive active set changes
  mutable std::unordered_set<const Term*> normal_;
  SaturationStats stats_;
};

}  // namespace ueq
