#include "ueq/term.hpp"

#include <algorithm>

namespace ueq {

Signature::Signature() { intern("$true", 0); }

Symbol Signature::intern(std::string_view name, std::uint32_t arity) {
  auto key = std::make_pair(std::string(name), arity);
  auto it = lookup_.find(key);
  if (it != lookup_.end()) return Symbol{it->second, arity};
  auto id = static_cast<std::uint32_t>(entries_.size());
  entries_.push_back(Entry{key.first, arity});
  lookup_.emplace(std::move(key), id);
  return Symbol{id, arity};
}

std::optional<Symbol> Signature::find(std::string_view name, std::uint32_t arity) const {
  auto it = lookup_.find(std::make_pair(std::string(name), arity));
  if (it == lookup_.end()) return std::nullopt;
  return Symbol{it->second, arity};
}

const std::string& Signature::name(Symbol f) const { return entries_.at(f.id).name; }

std::uint32_t Signature::arity_of(std::uint32_t id) const { return entries_.at(id).arity; }

TermPtr Term::var(std::int32_t id) {
  if (id < 0) throw std::invalid_argument("negative variable id");
  auto t = std::shared_ptr<Term>(new Term());
  t->var_ = id;
  t->weight_ = 1;
  t->var_ceiling_ = id + 1;
  return t;
}

TermPtr Term::app(Symbol f, std::vector<TermPtr> args) {
  if (args.size() != f.arity) throw std::invalid_argument("argument count does not match arity");
  auto t = std::shared_ptr<Term>(new Term());
  t->symbol_ = f;
  int w = 1;
  std::int32_t ceil = 0;
  for (const auto& a : args) {
    w += a->weight();
    ceil = std::max(ceil, a->var_ceiling());
  }
  t->args_ = std::move(args);
  t->weight_ = w;
  t->var_ceiling_ = ceil;
  return t;
}

bool equal(const TermPtr& a, const TermPtr& b) {
  if (a.get() == b.get()) return true;
  if (a->is_var() || b->is_var()) return a->is_var() && b->is_var() && a->var_id() == b->var_id();
  if (a->symbol() != b->symbol() || a->weight() != b->weight()) return false;
  for (std::size_t i = 0; i < a->args().size(); ++i)
    if (!equal(a->args()[i], b->args()[i])) return false;
  return true;
}

bool contains_var(const TermPtr& t, std::int32_t v) {
  if (t->var_ceiling() <= v) return false;
  if (t->is_var()) return t->var_id() == v;
  for (const auto& a : t->args())
    if (contains_var(a, v)) return true;
  return false;
}

void collect_vars(const TermPtr& t, std::vector<std::int32_t>& out) {
  if (t->ground()) return;
  if (t->is_var()) {
    if (std::find(out.begin(), out.end(), t->var_id()) == out.end()) out.push_back(t->var_id());
    return;
  }
  for (const auto& a : t->args()) collect_vars(a, out);
}

TermPtr subterm_at(const TermPtr& t, const Position& p) {
  TermPtr cur = t;
  for (auto idx : p) {
    if (cur->is_var() || idx < 1 || idx > cur->args().size()) return nullptr;
    cur = cur->args()[idx - 1];
  }
  return cur;
}

TermPtr replace_at(const TermPtr& t, const Position& p, const TermPtr& r) {
  if (p.empty()) return r;
  auto idx = p.front();
  if (t->is_var() || idx < 1 || idx > t->args().size())
    throw std::out_of_range("invalid position in replace_at");
  std::vector<TermPtr> args = t->args();
  Position rest(p.begin() + 1, p.end());
  args[idx - 1] = replace_at(args[idx - 1], rest, r);
  return Term::app(t->symbol(), std::move(args));
}

namespace {

void non_var_positions_rec(const TermPtr& t, Position& prefix, std::vector<Position>& out) {
  if (t->is_var()) return;
  out.push_back(prefix);
  for (std::uint32_t i = 0; i < t->args().size(); ++i) {
    prefix.push_back(i + 1);
    non_var_positions_rec(t->args()[i], prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

void non_var_positions(const TermPtr& t, std::vector<Position>& out) {
  Position prefix;
  non_var_positions_rec(t, prefix, out);
}

const TermPtr* Subst::lookup(std::int32_t v) const {
  auto it = map_.find(v);
  return it == map_.end() ? nullptr : &it->second;
}

void Subst::bind(std::int32_t v, TermPtr t) { map_[v] = std::move(t); }

TermPtr Subst::apply(const TermPtr& t) const {
  if (map_.empty() || t->ground()) return t;
  if (t->is_var()) {
    const TermPtr* b = lookup(t->var_id());
    return b ? *b : t;
  }
  bool changed = false;
  std::vector<TermPtr> args;
  args.reserve(t->args().size());
  for (const auto& a : t->args()) {
    TermPtr a2 = apply(a);
    changed |= a2.get() != a.get();
    args.push_back(std::move(a2));
  }
  if (!changed) return t;
  return Term::app(t->symbol(), std::move(args));
}

bool equal(const Subst& a, const Subst& b) {
  if (a.size() != b.size()) return false;
  auto ia = a.bindings().begin();
  auto ib = b.bindings().begin();
  for (; ia != a.bindings().end(); ++ia, ++ib) {
    if (ia->first != ib->first || !equal(ia->second, ib->second)) return false;
  }
  return true;
}

namespace {

using Bindings = std::unordered_map<std::int32_t, TermPtr>;

TermPtr walk(TermPtr t, const Bindings& b) {
  while (t->is_var()) {
    auto it = b.find(t->var_id());
    if (it == b.end()) break;
    t = it->second;
  }
  return t;
}

bool occurs(std::int32_t v, const TermPtr& t0, const Bindings& b) {
  TermPtr t = walk(t0, b);
  if (t->is_var()) return t->var_id() == v;
  for (const auto& a : t->args())
    if (occurs(v, a, b)) return true;
  return false;
}

bool unify_rec(const TermPtr& s0, const TermPtr& t0, Bindings& b) {
  TermPtr s = walk(s0, b);
  TermPtr t = walk(t0, b);
  if (s->is_var() && t->is_var() && s->var_id() == t->var_id()) return true;
  if (s->is_var()) {
    if (occurs(s->var_id(), t, b)) return false;
    b.emplace(s->var_id(), t);
    return true;
  }
  if (t->is_var()) {
    if (occurs(t->var_id(), s, b)) return false;
    b.emplace(t->var_id(), s);
    return true;
  }
  if (s->symbol() != t->symbol()) return false;
  for (std::size_t i = 0; i < s->args().size(); ++i)
    if (!unify_rec(s->args()[i], t->args()[i], b)) return false;
  return true;
}

// Fully resolves t through the triangular bindings. Terminates because the
// occurs check keeps the binding graph acyclic.
TermPtr resolve(const TermPtr& t0, const Bindings& b) {
  TermPtr t = walk(t0, b);
  if (t->is_var() || t->ground()) return t;
  bool changed = false;
  std::vector<TermPtr> args;
  args.reserve(t->args().size());
  for (const auto& a : t->args()) {
    TermPtr a2 = resolve(a, b);
    changed |= a2.get() != a.get();
    args.push_back(std::move(a2));
  }
  if (!changed) return t;
  return Term::app(t->symbol(), std::move(args));
}

}  // namespace

std::optional<Subst> unify(const TermPtr& s, const TermPtr& t) {
  Bindings b;
  if (!unify_rec(s, t, b)) return std::nullopt;
  Subst out;
  for (const auto& [v, bound] : b) out.bind(v, resolve(bound, b));
  return out;
}

namespace {

bool match_rec(const TermPtr& p, const TermPtr& g, Subst& binds) {
  if (p->is_var()) {
    const TermPtr* cur = binds.lookup(p->var_id());
    if (cur) return equal(*cur, g);
    binds.bind(p->var_id(), g);
    return true;
  }
  if (g->is_var()) return false;
  if (p->symbol() != g->symbol()) return false;
  for (std::size_t i = 0; i < p->args().size(); ++i)
    if (!match_rec(p->args()[i], g->args()[i], binds)) return false;
  return true;
}

}  // namespace

std::optional<Subst> match(const TermPtr& pattern, const TermPtr& target) {
  Subst binds;
  if (!match_rec(pattern, target, binds)) return std::nullopt;
  return binds;
}

bool match_extend(const TermPtr& pattern, const TermPtr& target, Subst& binds) {
  return match_rec(pattern, target, binds);
}

namespace {

TermPtr shift_vars(const TermPtr& t, std::int32_t offset) {
  if (offset == 0 || t->ground()) return t;
  if (t->is_var()) return Term::var(t->var_id() + offset);
  std::vector<TermPtr> args;
  args.reserve(t->args().size());
  for (const auto& a : t->args()) args.push_back(shift_vars(a, offset));
  return Term::app(t->symbol(), std::move(args));
}

TermPtr rename_by_map(const TermPtr& t, const std::unordered_map<std::int32_t, std::int32_t>& m) {
  if (t->ground()) return t;
  if (t->is_var()) {
    auto it = m.find(t->var_id());
    return it == m.end() ? t : Term::var(it->second);
  }
  bool changed = false;
  std::vector<TermPtr> args;
  args.reserve(t->args().size());
  for (const auto& a : t->args()) {
    TermPtr a2 = rename_by_map(a, m);
    changed |= a2.get() != a.get();
    args.push_back(std::move(a2));
  }
  if (!changed) return t;
  return Term::app(t->symbol(), std::move(args));
}

}  // namespace

std::pair<TermPtr, TermPtr> rename_apart(const TermPtr& a, const TermPtr& b) {
  return {a, shift_vars(b, a->var_ceiling())};
}

std::pair<TermPtr, TermPtr> rename_equation_above(const TermPtr& l, const TermPtr& r,
                                                  std::int32_t first_fresh) {
  std::vector<std::int32_t> order;
  collect_vars(l, order);
  collect_vars(r, order);
  std::unordered_map<std::int32_t, std::int32_t> m;
  m.reserve(order.size());
  std::int32_t next = first_fresh;
  for (auto v : order) m.emplace(v, next++);
  return {rename_by_map(l, m), rename_by_map(r, m)};
}

std::pair<TermPtr, TermPtr> canonical_form(const TermPtr& l, const TermPtr& r) {
  return rename_equation_above(l, r, 0);
}

bool alpha_equal(const TermPtr& l1, const TermPtr& r1, const TermPtr& l2, const TermPtr& r2) {
  auto [a, b] = canonical_form(l1, r1);
  auto [c, d] = canonical_form(l2, r2);
  return equal(a, c) && equal(b, d);
}

}  // namespace ueq
