#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace ueq {

/// Function symbol of a signature. Identity is the interned id; the arity is
/// carried inline so term construction can check it without a table lookup.
struct Symbol {
  std::uint32_t id = 0;
  std::uint32_t arity = 0;
};

inline bool operator==(Symbol a, Symbol b) { return a.id == b.id; }
inline bool operator!=(Symbol a, Symbol b) { return a.id != b.id; }
inline bool operator<(Symbol a, Symbol b) { return a.id < b.id; }

/// Symbol table. (name, arity) pairs are unique; the same name may be interned
/// at several arities, yielding distinct symbols. Id 0 is reserved for the
/// minimal constant "$true" used to encode predicate atoms as equations.
class Signature {
 public:
  Signature();

  Symbol intern(std::string_view name, std::uint32_t arity);
  std::optional<Symbol> find(std::string_view name, std::uint32_t arity) const;
  const std::string& name(Symbol f) const;
  std::uint32_t arity_of(std::uint32_t id) const;
  std::size_t size() const { return entries_.size(); }

  /// The reserved constant every predicate atom is equated with.
  Symbol truth() const { return Symbol{0, 0}; }

 private:
  struct Entry {
    std::string name;
    std::uint32_t arity;
  };
  std::vector<Entry> entries_;
  std::map<std::pair<std::string, std::uint32_t>, std::uint32_t> lookup_;
};

class Term;
using TermPtr = std::shared_ptr<const Term>;

/// First-order term: a variable (non-negative integer id) or an application of
/// a symbol to exactly arity-many arguments. Immutable, structurally shared.
/// Weight (total symbol + variable occurrences) and the variable ceiling
/// (1 + max variable id, 0 when ground) are cached at construction.
class Term {
 public:
  static TermPtr var(std::int32_t id);
  static TermPtr app(Symbol f, std::vector<TermPtr> args);
  static TermPtr constant(Symbol f) { return app(f, {}); }

  bool is_var() const { return var_ >= 0; }
  std::int32_t var_id() const { return var_; }
  Symbol symbol() const { return symbol_; }
  const std::vector<TermPtr>& args() const { return args_; }
  int weight() const { return weight_; }
  std::int32_t var_ceiling() const { return var_ceiling_; }
  bool ground() const { return var_ceiling_ == 0; }

 private:
  Term() = default;

  std::int32_t var_ = -1;
  Symbol symbol_{};
  std::vector<TermPtr> args_;
  int weight_ = 1;
  std::int32_t var_ceiling_ = 0;
};

bool equal(const TermPtr& a, const TermPtr& b);
bool contains_var(const TermPtr& t, std::int32_t v);

/// Appends every variable of t to out in first-occurrence order (no repeats,
/// also honouring ids already present in out).
void collect_vars(const TermPtr& t, std::vector<std::int32_t>& out);

/// Path of 1-based argument indices; the empty path is the term itself.
using Position = std::vector<std::uint32_t>;

/// Subterm of t at p, or null when p is not a valid position of t.
TermPtr subterm_at(const TermPtr& t, const Position& p);

/// t with the subterm at p replaced by r. p must be valid for t;
/// an invalid position is a caller error (throws std::out_of_range).
TermPtr replace_at(const TermPtr& t, const Position& p, const TermPtr& r);

/// Appends every non-variable position of t (preorder, including the root).
void non_var_positions(const TermPtr& t, std::vector<Position>& out);

/// Finite map from variable ids to terms. Unifiers produced by unify() are
/// idempotent: no bound variable occurs in any range term.
class Subst {
 public:
  bool empty() const { return map_.empty(); }
  std::size_t size() const { return map_.size(); }
  const TermPtr* lookup(std::int32_t v) const;
  void bind(std::int32_t v, TermPtr t);
  TermPtr apply(const TermPtr& t) const;
  const std::map<std::int32_t, TermPtr>& bindings() const { return map_; }

 private:
  std::map<std::int32_t, TermPtr> map_;
};

bool equal(const Subst& a, const Subst& b);

/// Most general unifier of s and t (occurs check included), or nullopt when
/// the terms do not unify.
std::optional<Subst> unify(const TermPtr& s, const TermPtr& t);

/// One-sided match: substitution over pattern's variables with
/// apply(sigma, pattern) == target; target variables act as constants.
std::optional<Subst> match(const TermPtr& pattern, const TermPtr& target);

/// Matching seeded with (and extending) existing bindings. Used to match both
/// sides of an equation under one substitution. On failure binds may hold a
/// partial extension and should be discarded.
bool match_extend(const TermPtr& pattern, const TermPtr& target, Subst& binds);

/// Alpha-variants of the inputs with disjoint variable sets.
std::pair<TermPtr, TermPtr> rename_apart(const TermPtr& a, const TermPtr& b);

/// Renames the variables of the equation l = r to first_fresh, first_fresh+1,
/// ... in first-occurrence order (left side first). Deterministic, shared by
/// clause allocation and by trace replay of self-superpositions.
std::pair<TermPtr, TermPtr> rename_equation_above(const TermPtr& l, const TermPtr& r,
                                                  std::int32_t first_fresh);

/// Both sides remapped to the canonical variable numbering 0,1,2,... by first
/// occurrence. Two equations are alpha-equivalent iff their canonical forms
/// are structurally equal side by side.
std::pair<TermPtr, TermPtr> canonical_form(const TermPtr& l, const TermPtr& r);

bool alpha_equal(const TermPtr& l1, const TermPtr& r1, const TermPtr& l2, const TermPtr& r2);

}  // namespace ueq
