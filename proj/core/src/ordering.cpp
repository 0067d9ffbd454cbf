#include "ueq/ordering.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <unordered_map>

namespace ueq {

Comparison converse(Comparison c) {
  switch (c) {
    case Comparison::Greater: return Comparison::Less;
    case Comparison::Less: return Comparison::Greater;
    default: return c;
  }
}

std::string_view to_string(OrderingKind k) {
  switch (k) {
    case OrderingKind::Kbo: return "kbo";
    case OrderingKind::Nrkbo: return "nrkbo";
    case OrderingKind::Lpo: return "lpo";
    case OrderingKind::Rpo: return "rpo";
  }
  return "lpo";
}

std::optional<OrderingKind> ordering_kind_from(std::string_view name) {
  if (name == "kbo") return OrderingKind::Kbo;
  if (name == "nrkbo") return OrderingKind::Nrkbo;
  if (name == "lpo") return OrderingKind::Lpo;
  if (name == "rpo") return OrderingKind::Rpo;
  return std::nullopt;
}

OrderingOverrides parse_ordering_config(std::string_view text) {
  OrderingOverrides out;
  int lineno = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string line(text.substr(start, end - start));
    ++lineno;
    start = end + 1;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream in(line);
    std::string directive, symbol;
    long value;
    if (!(in >> directive)) continue;
    if (!(in >> symbol >> value)) throw ConfigError("expected '<directive> <symbol> <int>'", lineno);
    std::string rest;
    if (in >> rest) throw ConfigError("trailing input after directive", lineno);
    if (directive == "weight") {
      if (value < 1) throw ConfigError("symbol weights must be >= 1", lineno);
      out.weight[symbol] = static_cast<int>(value);
    } else if (directive == "precedence") {
      out.priority[symbol] = static_cast<int>(value);
    } else {
      throw ConfigError("unknown directive '" + directive + "'", lineno);
    }
    if (start > text.size()) break;
  }
  return out;
}

std::string print_ordering_config(const OrderingOverrides& o) {
  std::string out;
  for (const auto& [name, w] : o.weight)
    out += "weight " + name + " " + std::to_string(w) + "\n";
  for (const auto& [name, p] : o.priority)
    out += "precedence " + name + " " + std::to_string(p) + "\n";
  return out;
}

Precedence::Precedence(const Signature* sig, const std::map<std::string, int>& priorities)
    : sig_(sig), priority_(priorities) {}

int Precedence::priority_of(Symbol s) const {
  auto it = priority_.find(sig_->name(s));
  return it == priority_.end() ? 0 : it->second;
}

Comparison Precedence::compare(Symbol a, Symbol b) const {
  if (a.id == b.id) return Comparison::Equal;
  if (a.id == 0) return Comparison::Less;
  if (b.id == 0) return Comparison::Greater;
  int pa = priority_of(a), pb = priority_of(b);
  if (pa != pb) return pa > pb ? Comparison::Greater : Comparison::Less;
  if (a.arity != b.arity) return a.arity > b.arity ? Comparison::Greater : Comparison::Less;
  const std::string& na = sig_->name(a);
  const std::string& nb = sig_->name(b);
  if (na != nb) return na > nb ? Comparison::Greater : Comparison::Less;
  // same name and arity would be the same symbol
  return a.id > b.id ? Comparison::Greater : Comparison::Less;
}

TermOrdering::TermOrdering(OrderingKind kind, const Signature* sig,
                           const OrderingOverrides& overrides)
    : kind_(kind), sig_(sig), prec_(sig, overrides.priority), weight_overrides_(overrides.weight) {
  for (const auto& [name, w] : weight_overrides_)
    if (w < 1) throw ConfigError("symbol weights must be >= 1 (" + name + ")", 0);
}

int TermOrdering::symbol_weight(Symbol f) const {
  if (weight_overrides_.empty()) return 1;
  auto it = weight_overrides_.find(sig_->name(f));
  return it == weight_overrides_.end() ? 1 : it->second;
}

namespace {

struct Balance {
  long wdiff = 0;
  std::unordered_map<std::int32_t, int> vdiff;
};

}  // namespace

Comparison TermOrdering::compare(const TermPtr& s, const TermPtr& t) const {
  if (equal(s, t)) return Comparison::Equal;
  switch (kind_) {
    case OrderingKind::Kbo: return kbo_family(s, t, true);
    case OrderingKind::Nrkbo: return kbo_family(s, t, false);
    case OrderingKind::Lpo:
    case OrderingKind::Rpo: {
      bool gt = kind_ == OrderingKind::Lpo ? lpo_greater(s, t) : rpo_greater(s, t);
      if (gt) return Comparison::Greater;
      bool lt = kind_ == OrderingKind::Lpo ? lpo_greater(t, s) : rpo_greater(t, s);
      return lt ? Comparison::Less : Comparison::Incomparable;
    }
  }
  return Comparison::Incomparable;
}

Orientation TermOrdering::orient(const TermPtr& l, const TermPtr& r) const {
  switch (compare(l, r)) {
    case Comparison::Greater: return Orientation::LeftToRight;
    case Comparison::Less: return Orientation::RightToLeft;
    default: return Orientation::Unorientable;
  }
}

namespace {

void accumulate(const TermOrdering& ord, const TermPtr& t, int sign, Balance& b) {
  if (t->is_var()) {
    b.wdiff += sign;  // variable weight is 1
    b.vdiff[t->var_id()] += sign;
    return;
  }
  b.wdiff += sign * ord.symbol_weight(t->symbol());
  for (const auto& a : t->args()) accumulate(ord, a, sign, b);
}

void flatten_nodes(const TermPtr& t, std::vector<const Term*>& out) {
  out.push_back(t.get());
  if (!t->is_var())
    for (const auto& a : t->args()) flatten_nodes(a, out);
}

}  // namespace

Comparison TermOrdering::kbo_family(const TermPtr& s, const TermPtr& t, bool recursive) const {
  if (equal(s, t)) return Comparison::Equal;
  Balance b;
  accumulate(*this, s, +1, b);
  accumulate(*this, t, -1, b);
  bool pos_ok = true, neg_ok = true;
  for (const auto& [v, d] : b.vdiff) {
    (void)v;
    if (d < 0) pos_ok = false;
    if (d > 0) neg_ok = false;
  }
  if (b.wdiff > 0) return pos_ok ? Comparison::Greater : Comparison::Incomparable;
  if (b.wdiff < 0) return neg_ok ? Comparison::Less : Comparison::Incomparable;
  // equal weight
  if (s->is_var() || t->is_var()) {
    // distinct variables, or a variable against an equally light term that
    // cannot contain it (weights are >= 1)
    return Comparison::Incomparable;
  }
  Comparison hc = prec_.compare(s->symbol(), t->symbol());
  if (hc == Comparison::Greater) return pos_ok ? Comparison::Greater : Comparison::Incomparable;
  if (hc == Comparison::Less) return neg_ok ? Comparison::Less : Comparison::Incomparable;
  Comparison tie = recursive ? kbo_tie(s, t) : flat_tie(s, t);
  if (tie == Comparison::Greater) return pos_ok ? Comparison::Greater : Comparison::Incomparable;
  if (tie == Comparison::Less) return neg_ok ? Comparison::Less : Comparison::Incomparable;
  return tie;
}

Comparison TermOrdering::kbo_tie(const TermPtr& s, const TermPtr& t) const {
  for (std::size_t i = 0; i < s->args().size(); ++i) {
    if (equal(s->args()[i], t->args()[i])) continue;
    return kbo_family(s->args()[i], t->args()[i], true);
  }
  return Comparison::Equal;
}

Comparison TermOrdering::flat_tie(const TermPtr& s, const TermPtr& t) const {
  std::vector<const Term*> fs, ft;
  flatten_nodes(s, fs);
  flatten_nodes(t, ft);
  for (std::size_t i = 0; i < fs.size() && i < ft.size(); ++i) {
    const Term* a = fs[i];
    const Term* c = ft[i];
    if (a->is_var() || c->is_var()) {
      if (a->is_var() && c->is_var() && a->var_id() == c->var_id()) continue;
      return Comparison::Incomparable;
    }
    if (a->symbol() == c->symbol()) continue;
    return prec_.compare(a->symbol(), c->symbol());
  }
  // a complete preorder flattening is never a strict prefix of another
  return Comparison::Incomparable;
}

bool TermOrdering::lpo_greater(const TermPtr& s, const TermPtr& t) const {
  if (t->is_var()) return !equal(s, t) && contains_var(s, t->var_id());
  if (s->is_var()) return false;
  for (const auto& si : s->args())
    if (equal(si, t) || lpo_greater(si, t)) return true;
  Comparison hc = prec_.compare(s->symbol(), t->symbol());
  if (hc == Comparison::Greater) {
    for (const auto& tj : t->args())
      if (!lpo_greater(s, tj)) return false;
    return true;
  }
  if (hc != Comparison::Equal) return false;
  for (std::size_t i = 0; i < s->args().size(); ++i) {
    if (equal(s->args()[i], t->args()[i])) continue;
    if (!lpo_greater(s->args()[i], t->args()[i])) return false;
    for (std::size_t j = i + 1; j < t->args().size(); ++j)
      if (!lpo_greater(s, t->args()[j])) return false;
    return true;
  }
  return false;
}

bool TermOrdering::rpo_greater(const TermPtr& s, const TermPtr& t) const {
  if (t->is_var()) return !equal(s, t) && contains_var(s, t->var_id());
  if (s->is_var()) return false;
  for (const auto& si : s->args())
    if (equal(si, t) || rpo_greater(si, t)) return true;
  Comparison hc = prec_.compare(s->symbol(), t->symbol());
  if (hc == Comparison::Greater) {
    for (const auto& tj : t->args())
      if (!rpo_greater(s, tj)) return false;
    return true;
  }
  if (hc != Comparison::Equal) return false;
  // multiset extension over the arguments
  std::vector<TermPtr> m(s->args());
  std::vector<TermPtr> n(t->args());
  for (auto it = n.begin(); it != n.end();) {
    auto hit = std::find_if(m.begin(), m.end(), [&](const TermPtr& x) { return equal(x, *it); });
    if (hit != m.end()) {
      m.erase(hit);
      it = n.erase(it);
    } else {
      ++it;
    }
  }
  if (m.empty()) return false;
  for (const auto& y : n) {
    bool dominated = false;
    for (const auto& x : m)
      if (rpo_greater(x, y)) {
        dominated = true;
        break;
      }
    if (!dominated) return false;
  }
  return true;
}

}  // namespace ueq
