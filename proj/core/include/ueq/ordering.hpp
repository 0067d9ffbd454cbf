#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ueq/term.hpp"

namespace ueq {

enum class Comparison { Greater, Less, Equal, Incomparable };
enum class Orientation { LeftToRight, RightToLeft, Unorientable };
enum class OrderingKind { Kbo, Nrkbo, Lpo, Rpo };

Comparison converse(Comparison c);
std::string_view to_string(OrderingKind k);
std::optional<OrderingKind> ordering_kind_from(std::string_view name);

class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string msg, int line) : std::runtime_error(std::move(msg)), line(line) {}
  int line;
};

/// Per-symbol overrides for the ordering parameters, keyed by symbol name
/// (applies to every arity of that name). Weights must be >= 1.
struct OrderingOverrides {
  std::map<std::string, int> weight;
  std::map<std::string, int> priority;
  bool empty() const { return weight.empty() && priority.empty(); }
};

/// Text format: one directive per line, '#' comments.
///   weight <symbol> <positive int>
///   precedence <symbol> <int>        (higher = greater in the precedence)
OrderingOverrides parse_ordering_config(std::string_view text);
std::string print_ordering_config(const OrderingOverrides& o);

/// Total strict precedence over the symbols of a signature. Symbols compare by
/// (override priority, arity, name) with higher arity first and name ties
/// broken towards the reverse-alphabetically later name. The reserved $true
/// constant is minimal regardless of overrides.
class Precedence {
 public:
  Precedence(const Signature* sig, const std::map<std::string, int>& priorities);

  Comparison compare(Symbol a, Symbol b) const;
  bool greater(Symbol a, Symbol b) const { return compare(a, b) == Comparison::Greater; }

 private:
  int priority_of(Symbol s) const;
  const Signature* sig_;
  std::map<std::string, int> priority_;
};

/// One comparison interface over the four reduction orderings.
///
/// KBO: unit weights by default (overridable, >= 1), variable weight 1,
/// lexicographic tiebreak. NRKBO is this artifact's non-recursive variant:
/// the KBO weight/variable-count test, with ties broken by a single
/// left-to-right pass over the preorder flattening of both terms, comparing
/// flat elements by precedence (a variable mismatch is Incomparable). It
/// coincides with neither KBO nor LPO and is excluded from cross-prover
/// claims. LPO uses left-to-right lexicographic status for all symbols, RPO
/// multiset status for all symbols.
class TermOrdering {
 public:
  TermOrdering(OrderingKind kind, const Signature* sig, const OrderingOverrides& overrides = {});

  OrderingKind kind() const { return kind_; }
  const Precedence& precedence() const { return prec_; }
  int symbol_weight(Symbol f) const;

  Comparison compare(const TermPtr& s, const TermPtr& t) const;
  Orientation orient(const TermPtr& l, const TermPtr& r) const;

 private:
  Comparison kbo_family(const TermPtr& s, const TermPtr& t, bool recursive) const;
  Comparison kbo_tie(const TermPtr& s, const TermPtr& t) const;
  Comparison flat_tie(const TermPtr& s, const TermPtr& t) const;
  bool lpo_greater(const TermPtr& s, const TermPtr& t) const;
  bool rpo_greater(const TermPtr& s, const TermPtr& t) const;

  OrderingKind kind_;
  const Signature* sig_;
  Precedence prec_;
  std::map<std::string, int> weight_overrides_;
};

}  // namespace ueq
