#include "ueq/clause.hpp"

namespace ueq {

ClauseBag::ClauseBag(const ClauseBag* base)
    : base_(base), base_size_(base->size()), var_counter_(base->var_counter()) {}

const UnitClause& ClauseBag::make(Sign sign, const TermPtr& l, const TermPtr& r, ProofStep step,
                                  const TermOrdering& ord) {
  std::vector<std::int32_t> order;
  collect_vars(l, order);
  collect_vars(r, order);
  last_renaming_ = Subst();
  std::int32_t next = var_counter_;
  for (auto v : order) last_renaming_.bind(v, Term::var(next++));
  var_counter_ = next;

  UnitClause c;
  c.id = size();
  c.sign = sign;
  c.left = last_renaming_.apply(l);
  c.right = last_renaming_.apply(r);
  c.orientation = ord.orient(c.left, c.right);
  c.weight = c.left->weight() + c.right->weight();
  c.step = std::move(step);
  local_.push_back(std::move(c));
  return local_.back();
}

const UnitClause& ClauseBag::at(ClauseId id) const {
  if (id < base_size_) return base_->at(id);
  return local_.at(id - base_size_);
}

const UnitClause& ClauseBag::restore(UnitClause c, std::int32_t var_counter_after) {
  if (c.id != size()) throw std::invalid_argument("restored clause ids must be dense");
  local_.push_back(std::move(c));
  if (var_counter_after > var_counter_) var_counter_ = var_counter_after;
  return local_.back();
}

bool is_tautology(const UnitClause& c) {
  return c.sign == Sign::Positive && equal(c.left, c.right);
}

namespace {

// allocation-light matcher for the subsumption hot path
struct FlatBinds {
  std::vector<std::pair<std::int32_t, const Term*>> b;
  const Term* find(std::int32_t v) const {
    for (const auto& [k, t] : b)
      if (k == v) return t;
    return nullptr;
  }
};

bool equal_raw(const Term* a, const Term* b) {
  if (a == b) return true;
  if (a->is_var() || b->is_var())
    return a->is_var() && b->is_var() && a->var_id() == b->var_id();
  if (a->symbol() != b->symbol() || a->weight() != b->weight()) return false;
  for (std::size_t i = 0; i < a->args().size(); ++i)
    if (!equal_raw(a->args()[i].get(), b->args()[i].get())) return false;
  return true;
}

bool flat_match(const Term* p, const Term* g, FlatBinds& binds) {
  if (p->is_var()) {
    if (const Term* cur = binds.find(p->var_id())) return equal_raw(cur, g);
    binds.b.emplace_back(p->var_id(), g);
    return true;
  }
  if (g->is_var()) return false;
  if (p->symbol() != g->symbol() || p->weight() > g->weight()) return false;
  for (std::size_t i = 0; i < p->args().size(); ++i)
    if (!flat_match(p->args()[i].get(), g->args()[i].get(), binds)) return false;
  return true;
}

}  // namespace

bool subsumes_equation(const TermPtr& cl, const TermPtr& cr, const TermPtr& dl, const TermPtr& dr) {
  if (cl->weight() + cr->weight() > dl->weight() + dr->weight()) return false;
  {
    FlatBinds s;
    if (flat_match(cl.get(), dl.get(), s) && flat_match(cr.get(), dr.get(), s)) return true;
  }
  {
    FlatBinds s;
    if (flat_match(cl.get(), dr.get(), s) && flat_match(cr.get(), dl.get(), s)) return true;
  }
  return false;
}

bool subsumes(const UnitClause& c, const UnitClause& d) {
  if (c.sign != d.sign) return false;
  return subsumes_equation(c.left, c.right, d.left, d.right);
}

}  // namespace ueq
