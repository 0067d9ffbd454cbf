#pragma once

#include <iosfwd>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ueq/parser.hpp"
#include "ueq/saturation.hpp"
#include "ueq/term.hpp"

namespace ueq {

class KbFormatError : public std::runtime_error {
 public:
  explicit KbFormatError(std::string msg) : std::runtime_error(std::move(msg)) {}
};
class KbVersionError : public std::runtime_error {
 public:
  explicit KbVersionError(std::string msg) : std::runtime_error(std::move(msg)) {}
};
class KbIoError : public std::runtime_error {
 public:
  explicit KbIoError(std::string msg) : std::runtime_error(std::move(msg)) {}
};

struct EquationEntry {
  std::string name;
  TermPtr left;
  TermPtr right;
};

struct SmartMatchQuery {
  TermPtr lhs;  // the conclusion to instantiate; its variables are the unknowns
  TermPtr rhs;  // the concrete goal
  std::vector<EquationEntry> local_equations;
  int max_narrowing = 3;
  double timeout_seconds = 10.0;
};

struct SmartMatchResult {
  bool success = false;
  Subst substitution;  // over the query's original variable ids (lhs first)
  std::string trace;
  int narrowing_steps = 0;
  std::int64_t clauses_generated = 0;
  LimitKind limit = LimitKind::None;  // why the search stopped when it failed
};

/// Persistent, incrementally saturated equation store: the library equations
/// are the active set, every insertion runs one given-clause round, and
/// derived equations accumulate in the passive set. Queries run on a frozen
/// overlay and never mutate the store.
class KnowledgeBase {
 public:
  explicit KnowledgeBase(SaturationParams params = {});
  KnowledgeBase(KnowledgeBase&&) noexcept = default;
  KnowledgeBase& operator=(KnowledgeBase&&) noexcept = default;

  Signature& signature() { return *sig_; }
  const Signature& signature() const { return *sig_; }
  const SaturationParams& params() const { return params_; }
  const Prover& prover() const { return *prover_; }
  const std::vector<EquationEntry>& insertion_log() const { return log_; }

  struct AddReport {
    bool subsumed = false;
    ClauseId id = 0;
    std::int64_t generated = 0;
  };
  AddReport add_equation(std::string name, const TermPtr& l, const TermPtr& r);

  SmartMatchResult smart_match(const SmartMatchQuery& q) const;

  /// The problem a smart-match trace is checked against: the insertion log and
  /// local equations as axioms, the query equation as the goal.
  Problem query_problem(const SmartMatchQuery& q) const;

  void save(std::ostream& out) const;
  void save_file(const std::string& path) const;
  static KnowledgeBase load(std::istream& in);
  static KnowledgeBase load_file(const std::string& path);

  /// Order-insensitive digest of the persistent clause sets; queries must not
  /// change it.
  std::uint64_t content_hash() const;

 private:
  SaturationParams params_;
  std::unique_ptr<Signature> sig_;
  std::unique_ptr<Prover> prover_;
  std::vector<EquationEntry> log_;
};

}  // namespace ueq
