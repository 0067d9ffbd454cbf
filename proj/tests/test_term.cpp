#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

using namespace ueqtest;

TEST_CASE("signature interning distinguishes arities") {
  Signature sig;
  Symbol f1 = sig.intern("f", 1);
  Symbol f2 = sig.intern("f", 2);
  CHECK(f1 != f2);
  CHECK(sig.intern("f", 1) == f1);
  CHECK(sig.name(f1) == "f");
  CHECK(sig.find("f", 2).has_value());
  CHECK(!sig.find("f", 3).has_value());
  CHECK(sig.truth().id == 0);
}

TEST_CASE("subterm_at") {
  Fx fx;
  CHECK(equal(subterm_at(fx.t("f(a,g(b))"), {2, 1}), fx.t("b")));
  CHECK(equal(subterm_at(fx.t("X"), {}), fx.t("X")));
  CHECK(subterm_at(fx.t("f(a,b)"), {3}) == nullptr);
  CHECK(subterm_at(fx.t("f(a)"), {2}) == nullptr);
  CHECK(subterm_at(fx.t("f(a)"), {1, 1}) == nullptr);
}

TEST_CASE("replace_at") {
  Fx fx;
  CHECK(equal(replace_at(fx.t("f(a,b)"), {1}, fx.t("c")), fx.t("f(c,b)")));
  CHECK(equal(replace_at(fx.t("a"), {}, fx.t("b")), fx.t("b")));
  CHECK(equal(replace_at(fx.t("len(W,cat(cat(X,Y),Z))"), {2}, fx.t("cat(X,cat(Y,Z))")),
              fx.t("len(W,cat(X,cat(Y,Z)))")));
  CHECK_THROWS_AS(replace_at(fx.t("f(a)"), {2}, fx.t("b")), std::out_of_range);
}

TEST_CASE("apply substitution") {
  Fx fx;
  Subst s;
  s.bind(fx.var("X"), fx.t("a"));
  CHECK(equal(s.apply(fx.t("f(X,Y)")), fx.t("f(a,Y)")));
  Subst empty;
  TermPtr t = fx.t("h(f(X),b)");
  CHECK(equal(empty.apply(t), t));
  Subst ex1;
  ex1.bind(fx.var("N"), fx.t("s(N0)"));
  ex1.bind(fx.var("M"), fx.t("s(M0)"));
  CHECK(equal(ex1.apply(fx.t("le(pred(N),pred(M))")), fx.t("le(pred(s(N0)),pred(s(M0)))")));
}

TEST_CASE("unify basics") {
  Fx fx;
  auto s = unify(fx.t("h(X,a)"), fx.t("h(b,Y)"));
  REQUIRE(s.has_value());
  CHECK(equal(*s->lookup(fx.var("X")), fx.t("b")));
  CHECK(equal(*s->lookup(fx.var("Y")), fx.t("a")));

  CHECK(!unify(fx.t("X"), fx.t("f(X)")).has_value());  // occurs check
  CHECK(!unify(fx.t("a"), fx.t("b")).has_value());

  auto chain = unify(fx.t("pred(s(V))"), fx.t("pred(U)"));
  REQUIRE(chain.has_value());
  CHECK(equal(chain->apply(fx.t("pred(s(V))")), chain->apply(fx.t("pred(U)"))));
}

TEST_CASE("unify produces idempotent substitutions") {
  Signature sig;
  RandomTermGen gen(&sig, 20240601);
  int unified = 0;
  for (int i = 0; i < 4000; ++i) {
    TermPtr a = gen.gen();
    TermPtr b = gen.gen();
    auto s = unify(a, b);
    if (!s) continue;
    ++unified;
    CHECK(equal(s->apply(a), s->apply(b)));
    for (const auto& [v, t] : s->bindings()) {
      (void)v;
      CHECK(equal(s->apply(t), t));  // idempotent: ranges are fixed points
    }
  }
  CHECK(unified > 200);
}

TEST_CASE("unify is most general on constructed instances") {
  // build s,t as independent linear generalizations of a common ground term;
  // they must unify, and the unified instance must still match onto the base
  Signature sig;
  RandomTermGen gen(&sig, 7);
  for (int i = 0; i < 2000; ++i) {
    TermPtr base = gen.gen_ground(2);
    std::vector<Position> ps;
    non_var_positions(base, ps);
    std::int32_t next = 0;
    TermPtr s = base, t = base;
    for (const auto& p : ps) {
      // positions inside an already punched hole are gone; skip those
      if (gen.coin(0.25) && subterm_at(s, p)) s = replace_at(s, p, Term::var(next++));
      if (gen.coin(0.25) && subterm_at(t, p)) t = replace_at(t, p, Term::var(next++));
    }
    auto sigma = unify(s, t);
    REQUIRE(sigma.has_value());
    TermPtr joined = sigma->apply(s);
    CHECK(match(joined, base).has_value());
  }
}

TEST_CASE("match basics") {
  Fx fx;
  auto s = match(fx.t("pred(s(X))"), fx.t("pred(s(a))"));
  REQUIRE(s.has_value());
  CHECK(equal(*s->lookup(fx.var("X")), fx.t("a")));
  CHECK(!match(fx.t("h(X,X)"), fx.t("h(a,b)")).has_value());
  auto w = match(fx.t("Z"), fx.t("f(a)"));
  REQUIRE(w.has_value());
  CHECK(equal(*w->lookup(fx.var("Z")), fx.t("f(a)")));
  // one-sided: target variables are opaque constants
  CHECK(!match(fx.t("a"), fx.t("Y")).has_value());
}

TEST_CASE("match soundness on random generalizations") {
  Signature sig;
  RandomTermGen gen(&sig, 99);
  for (int i = 0; i < 3000; ++i) {
    TermPtr pattern = gen.gen();
    Subst inst = gen.gen_subst(pattern, 0.9, true);
    TermPtr target = inst.apply(pattern);
    auto s = match(pattern, target);
    REQUIRE(s.has_value());
    CHECK(equal(s->apply(pattern), target));
    std::vector<std::int32_t> pvars;
    collect_vars(pattern, pvars);
    for (const auto& [v, t] : s->bindings()) {
      (void)t;
      CHECK(std::find(pvars.begin(), pvars.end(), v) != pvars.end());
    }
  }
}

TEST_CASE("rename_apart") {
  Fx fx;
  auto [a, b] = rename_apart(fx.t("f(X)"), fx.t("g(X)"));
  std::vector<std::int32_t> va, vb;
  collect_vars(a, va);
  collect_vars(b, vb);
  REQUIRE(va.size() == 1);
  REQUIRE(vb.size() == 1);
  CHECK(va[0] != vb[0]);

  auto [c, d] = rename_apart(fx.t("a"), fx.t("b"));
  CHECK(equal(c, fx.t("a")));
  CHECK(equal(d, fx.t("b")));

  Signature sig;
  RandomTermGen gen(&sig, 3);
  for (int i = 0; i < 2000; ++i) {
    auto [s, t] = rename_apart(gen.gen(), gen.gen());
    std::vector<std::int32_t> vs, vt;
    collect_vars(s, vs);
    collect_vars(t, vt);
    for (auto v : vs) CHECK(std::find(vt.begin(), vt.end(), v) == vt.end());
  }
}

TEST_CASE("weight equals the node count") {
  Fx fx;
  CHECK(fx.t("a")->weight() == 1);
  CHECK(fx.t("f(X,g(a))")->weight() == 4);
  Signature sig;
  RandomTermGen gen(&sig, 11);
  for (int i = 0; i < 2000; ++i) {
    TermPtr t = gen.gen();
    CHECK(t->weight() == count_nodes(t));
    Subst s = gen.gen_subst(t, 0.7);
    bool no_var_to_var = true;
    for (const auto& [v, r] : s.bindings()) {
      (void)v;
      if (r->is_var()) no_var_to_var = false;
    }
    if (no_var_to_var) CHECK(s.apply(t)->weight() >= t->weight());
  }
}

TEST_CASE("replace/subterm round trip") {
  Signature sig;
  RandomTermGen gen(&sig, 5);
  for (int i = 0; i < 2000; ++i) {
    TermPtr t = gen.gen();
    std::vector<Position> ps;
    non_var_positions(t, ps);
    for (const auto& p : ps) {
      TermPtr sub = subterm_at(t, p);
      REQUIRE(sub != nullptr);
      CHECK(equal(replace_at(t, p, sub), t));
    }
  }
}

TEST_CASE("canonical form and alpha equality") {
  Fx fx;
  CHECK(alpha_equal(fx.t("f(U,V)"), fx.t("U"), fx.t("f(P,Q)"), fx.t("P")));
  CHECK(!alpha_equal(fx.t("f(U,V)"), fx.t("U"), fx.t("f(P,Q)"), fx.t("Q")));
  CHECK(!alpha_equal(fx.t("f(U,U)"), fx.t("U"), fx.t("f(P,Q)"), fx.t("P")));
}

TEST_CASE("term printing and parsing round trip") {
  Signature sig;
  RandomTermGen gen(&sig, 21);
  for (int i = 0; i < 2000; ++i) {
    TermPtr t = gen.gen();
    std::string s = print_term(t, sig);
    TermCursor cur(s, sig);
    TermPtr back = cur.read_term_canonical();
    CHECK(equal(t, back));
  }
}
