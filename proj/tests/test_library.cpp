#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "support.hpp"
#include "ueq/library.hpp"
#include "ueq/trace.hpp"

using namespace ueqtest;

namespace {

struct KbFx {
  KnowledgeBase kb;
  TermCursor::VarScope scope;

  explicit KbFx(SaturationParams params = {}) : kb(std::move(params)) {}

  TermPtr t(std::string_view s) {
    TermCursor cur(s, kb.signature());
    return cur.read_term_named(scope);
  }
  // each equation gets its own variable scope, like a file of equations
  KnowledgeBase::AddReport add(std::string name, std::string_view l, std::string_view r) {
    TermCursor::VarScope eq_scope;
    TermCursor cl(l, kb.signature());
    TermPtr lt = cl.read_term_named(eq_scope);
    TermCursor cr(r, kb.signature());
    TermPtr rt = cr.read_term_named(eq_scope);
    return kb.add_equation(std::move(name), lt, rt);
  }
};

bool clause_sets_equivalent(const KnowledgeBase& a, const KnowledgeBase& b) {
  auto covered = [](const KnowledgeBase& x, const KnowledgeBase& y) {
    for (ClauseId id : x.prover().active_positive()) {
      const UnitClause& c = x.prover().bag().at(id);
      bool hit = false;
      for (ClauseId jd : y.prover().active_positive()) {
        const UnitClause& d = y.prover().bag().at(jd);
        if (subsumes_equation(d.left, d.right, c.left, c.right)) {
          hit = true;
          break;
        }
      }
      if (!hit) return false;
    }
    return true;
  };
  return covered(a, b) && covered(b, a);
}

}  // namespace

TEST_CASE("duplicate insertions are reported as subsumed no-ops") {
  KbFx fx;
  auto r1 = fx.add("plus0", "plus(X,zero)", "X");
  CHECK(!r1.subsumed);
  std::uint64_t h = fx.kb.content_hash();
  auto r2 = fx.add("plus0_again", "plus(Y,zero)", "Y");
  CHECK(r2.subsumed);
  CHECK(fx.kb.content_hash() == h);
  CHECK(fx.kb.insertion_log().size() == 1);
}

TEST_CASE("inserting lencat then catA composes the length law") {
  // a heavier cat leaves the length law unorientable under kbo: the
  // composition fires inside the len side and its result is not demodulated
  // away afterwards
  SaturationParams params;
  params.ordering = OrderingKind::Kbo;
  params.overrides.weight["cat"] = 4;
  KbFx fx(params);
  fx.add("lencat", "plus(len(W,X),len(W,Y))", "len(W,cat(X,Y))");
  fx.add("catA", "cat(cat(X,Y),Z)", "cat(X,cat(Y,Z))");

  TermPtr el = fx.t("plus(len(W1,cat(X1,Y1)),len(W1,Z1))");
  TermPtr er = fx.t("len(W1,cat(X1,cat(Y1,Z1)))");
  bool found = false;
  for (ClauseId id : fx.kb.prover().passive_alive()) {
    const UnitClause& c = fx.kb.prover().bag().at(id);
    if (alpha_equal(c.left, c.right, el, er) || alpha_equal(c.right, c.left, el, er))
      found = true;
  }
  CHECK(found);
}

TEST_CASE("insertion order does not change the active closure") {
  SaturationParams params;
  KbFx ab(params), ba(params);
  // align symbol ids across the two stores so clauses compare structurally
  for (KbFx* fx : {&ab, &ba}) {
    fx->kb.signature().intern("plus", 2);
    fx->kb.signature().intern("zero", 0);
    fx->kb.signature().intern("s", 1);
  }
  ab.add("plus0", "plus(X,zero)", "X");
  ab.add("plus_s", "plus(s(X),Y)", "s(plus(X,Y))");
  ba.add("plus_s", "plus(s(X),Y)", "s(plus(X,Y))");
  ba.add("plus0", "plus(X,zero)", "X");
  CHECK(clause_sets_equivalent(ab.kb, ba.kb));
}

TEST_CASE("smart match instantiates through the predecessor equation") {
  KbFx fx;
  fx.add("pred_s", "pred(s(N))", "N");

  SmartMatchQuery q;
  TermCursor::VarScope qscope;
  {
    TermCursor cl("le(pred(X),pred(Y))", fx.kb.signature());
    q.lhs = cl.read_term_named(qscope);
    TermCursor cr("le(n,m)", fx.kb.signature());
    q.rhs = cr.read_term_named(qscope);
  }
  q.max_narrowing = 3;
  SmartMatchResult res = fx.kb.smart_match(q);
  REQUIRE(res.success);
  CHECK(res.narrowing_steps == 2);

  std::int32_t x = qscope.names.at("X");
  std::int32_t y = qscope.names.at("Y");
  REQUIRE(res.substitution.lookup(x));
  REQUIRE(res.substitution.lookup(y));
  CHECK(equal(*res.substitution.lookup(x), fx.t("s(n)")));
  CHECK(equal(*res.substitution.lookup(y), fx.t("s(m)")));

  CheckResult cr = check_trace(fx.kb.query_problem(q), res.trace);
  INFO(cr.reason);
  CHECK(cr.valid);
}

TEST_CASE("smart match on an empty base fails definitively") {
  KbFx fx;
  SmartMatchQuery q;
  q.lhs = fx.t("f(a)");
  q.rhs = fx.t("g(a)");
  q.max_narrowing = 3;
  SmartMatchResult res = fx.kb.smart_match(q);
  CHECK(!res.success);
  CHECK(res.limit != LimitKind::Timeout);
}

TEST_CASE("queries leave the knowledge base untouched") {
  KbFx fx;
  fx.add("pred_s", "pred(s(N))", "N");
  fx.add("plus0", "plus(X,zero)", "X");
  std::uint64_t h = fx.kb.content_hash();
  std::ostringstream before;
  fx.kb.save(before);

  SmartMatchQuery q;
  TermCursor::VarScope qscope;
  TermCursor cl("le(pred(X),pred(Y))", fx.kb.signature());
  q.lhs = cl.read_term_named(qscope);
  TermCursor cr("le(n,m)", fx.kb.signature());
  q.rhs = cr.read_term_named(qscope);
  for (int i = 0; i < 3; ++i) fx.kb.smart_match(q);

  CHECK(fx.kb.content_hash() == h);
  std::ostringstream after;
  fx.kb.save(after);
  CHECK(before.str() == after.str());
}

TEST_CASE("success is monotone in the narrowing bound") {
  KbFx fx;
  fx.add("pred_s", "pred(s(N))", "N");
  SmartMatchQuery q;
  TermCursor::VarScope qscope;
  TermCursor cl("le(pred(X),pred(Y))", fx.kb.signature());
  q.lhs = cl.read_term_named(qscope);
  TermCursor cr("le(n,m)", fx.kb.signature());
  q.rhs = cr.read_term_named(qscope);

  q.max_narrowing = 1;
  CHECK(!fx.kb.smart_match(q).success);

  std::string sigma2;
  for (int bound = 2; bound <= 5; ++bound) {
    q.max_narrowing = bound;
    SmartMatchResult res = fx.kb.smart_match(q);
    REQUIRE(res.success);
    std::string rendered = print_subst(res.substitution, fx.kb.signature());
    if (bound == 2)
      sigma2 = rendered;
    else
      CHECK(rendered == sigma2);
  }
}

TEST_CASE("local equations serve one query and are not persisted") {
  KbFx fx;
  fx.add("plus0", "plus(X,zero)", "X");
  std::uint64_t h = fx.kb.content_hash();

  SmartMatchQuery q;
  TermCursor::VarScope qscope;
  TermCursor cl("le(h0(X))", fx.kb.signature());
  q.lhs = cl.read_term_named(qscope);
  TermCursor cr("le(k0)", fx.kb.signature());
  q.rhs = cr.read_term_named(qscope);
  // without the local equation there is nothing to bridge h0/k0
  CHECK(!fx.kb.smart_match(q).success);

  TermCursor::VarScope lscope;
  TermCursor ll("h0(k0)", fx.kb.signature());
  TermPtr hl = ll.read_term_named(lscope);
  TermCursor lr("k0", fx.kb.signature());
  TermPtr hr = lr.read_term_named(lscope);
  q.local_equations.push_back(EquationEntry{"local_h", hl, hr});
  SmartMatchResult res = fx.kb.smart_match(q);
  REQUIRE(res.success);
  CHECK(fx.kb.content_hash() == h);

  CheckResult cr2 = check_trace(fx.kb.query_problem(q), res.trace);
  INFO(cr2.reason);
  CHECK(cr2.valid);
}

TEST_CASE("save/load round trip preserves everything") {
  SaturationParams params;
  params.overrides.priority["len"] = 1;
  params.overrides.weight["cat"] = 2;
  KbFx fx(params);
  fx.add("lencat", "plus(len(W,X),len(W,Y))", "len(W,cat(X,Y))");
  fx.add("catA", "cat(cat(X,Y),Z)", "cat(X,cat(Y,Z))");
  fx.add("pred_s", "pred(s(N))", "N");

  std::ostringstream out;
  fx.kb.save(out);
  std::istringstream in(out.str());
  KnowledgeBase loaded = KnowledgeBase::load(in);

  CHECK(loaded.content_hash() == fx.kb.content_hash());
  CHECK(loaded.insertion_log().size() == fx.kb.insertion_log().size());
  CHECK(loaded.prover().bag().size() == fx.kb.prover().bag().size());
  std::ostringstream again;
  loaded.save(again);
  CHECK(again.str() == out.str());

  // query behaviour is identical after the round trip
  SmartMatchQuery q;
  TermCursor::VarScope s1;
  TermCursor cl("le(pred(X),pred(Y))", fx.kb.signature());
  q.lhs = cl.read_term_named(s1);
  TermCursor cr("le(n,m)", fx.kb.signature());
  q.rhs = cr.read_term_named(s1);
  SmartMatchResult r1 = fx.kb.smart_match(q);

  SmartMatchQuery q2;
  TermCursor::VarScope s2;
  TermCursor cl2("le(pred(X),pred(Y))", loaded.signature());
  q2.lhs = cl2.read_term_named(s2);
  TermCursor cr2("le(n,m)", loaded.signature());
  q2.rhs = cr2.read_term_named(s2);
  SmartMatchResult r2 = loaded.smart_match(q2);

  CHECK(r1.success == r2.success);
  CHECK(r1.narrowing_steps == r2.narrowing_steps);
  CHECK(r1.trace == r2.trace);
}

TEST_CASE("randomized queries: pure, and every success replays") {
  int successes = 0;
  for (unsigned seed = 1; seed <= 60; ++seed) {
    KnowledgeBase kb;
    RandomTermGen gen(&kb.signature(), 9000 + seed);
    gen.max_depth = 3;
    int eqs = 2 + gen.pick(2);
    for (int i = 0; i < eqs; ++i)
      kb.add_equation("eq" + std::to_string(i), gen.gen(1), gen.gen(2));
    std::uint64_t h = kb.content_hash();

    SmartMatchQuery q;
    q.lhs = gen.gen(1);
    if (seed % 2 == 0) {
      // a ground instance of the conclusion: closes by resolution at once
      Subst inst;
      std::vector<std::int32_t> vars;
      collect_vars(q.lhs, vars);
      for (auto v : vars) inst.bind(v, gen.gen_ground(3));
      q.rhs = inst.apply(q.lhs);
    } else {
      q.rhs = gen.gen(2);
    }
    q.max_narrowing = 3;
    q.timeout_seconds = 5;
    SmartMatchResult res = kb.smart_match(q);
    CHECK(kb.content_hash() == h);
    if (seed % 2 == 0) CHECK(res.success);
    if (res.success) {
      ++successes;
      CheckResult cr = check_trace(kb.query_problem(q), res.trace);
      INFO("seed ", seed, ": ", cr.reason, "\n", res.trace);
      CHECK(cr.valid);
    }
  }
  CHECK(successes >= 30);
}

TEST_CASE("insertions continue seamlessly after a round trip") {
  KbFx fx;
  fx.add("pred_s", "pred(s(N))", "N");
  fx.add("plus0", "plus(X,zero)", "X");
  std::ostringstream snap;
  fx.kb.save(snap);
  std::istringstream in(snap.str());
  KnowledgeBase loaded = KnowledgeBase::load(in);

  // the same insertion on both stores keeps them byte-identical
  auto add_to = [](KnowledgeBase& kb) {
    TermCursor::VarScope scope;
    TermCursor cl("plus(s(X),Y)", kb.signature());
    TermPtr l = cl.read_term_named(scope);
    TermCursor cr("s(plus(X,Y))", kb.signature());
    TermPtr r = cr.read_term_named(scope);
    kb.add_equation("plus_s", l, r);
  };
  add_to(fx.kb);
  add_to(loaded);
  std::ostringstream a, b;
  fx.kb.save(a);
  loaded.save(b);
  CHECK(a.str() == b.str());
}

TEST_CASE("malformed and mismatched knowledge bases are rejected distinctly") {
  {
    std::istringstream in("ueq-kb v9\nend\n");
    CHECK_THROWS_AS(KnowledgeBase::load(in), KbVersionError);
  }
  {
    std::istringstream in("not a kb\n");
    CHECK_THROWS_AS(KnowledgeBase::load(in), KbFormatError);
  }
  {
    std::istringstream in("ueq-kb v1\nfrobnicate\nend\n");
    CHECK_THROWS_AS(KnowledgeBase::load(in), KbFormatError);
  }
  {
    // truncated: no end marker
    std::istringstream in("ueq-kb v1\nordering lpo\n");
    CHECK_THROWS_AS(KnowledgeBase::load(in), KbFormatError);
  }
  CHECK_THROWS_AS(KnowledgeBase::load_file("/nonexistent/kb"), KbIoError);
}
