// Acceptance suite: one test case per shipped guarantee, each printing a
// [PASS]/[FAIL] line. Run via `ctest -R acceptance` or directly.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "corpus.hpp"
#include "ordering_props.hpp"
#include "support.hpp"
#include "trace_mutate.hpp"
#include "ueq/library.hpp"
#include "ueq/runner.hpp"
#include "ueq/trace.hpp"

using namespace ueqtest;

namespace {

struct Criterion {
  int num;
  std::string label;
  bool ok = true;
  Criterion(int num, std::string label) : num(num), label(std::move(label)) {}
  void check(bool cond) {
    ok &= cond;
    CHECK(cond);
  }
  ~Criterion() {
    std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << num << ": " << label
              << std::endl;
  }
};

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

std::string data_file(const std::string& name) {
  std::ifstream f(std::string(UEQ_TEST_DATA_DIR) + "/" + name);
  REQUIRE(f.good());
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("criterion 1: smart-matching corpus") {
  Criterion crit(1, "smart-matching corpus: six queries, bounded narrowing, < 1 s each");
  for (const auto& c : corpus()) {
    INFO("case ", c.name);
    KnowledgeBase kb = build_kb(c.equations);
    CorpusRun r = run_corpus_case(c, kb);
    crit.check(r.success);
    crit.check(r.narrowing <= 4);
    crit.check(r.ms < 1000.0);
    crit.check(r.sigma_ok);
    crit.check(r.trace_ok);

    // frozen fixture: the emitted trace is pinned byte for byte (a missing
    // fixture is written out, to be reviewed and committed)
    std::string golden_path =
        std::string(UEQ_TEST_DATA_DIR) + "/expected/" + c.name + ".trace";
    std::ifstream golden(golden_path);
    if (golden.good()) {
      std::stringstream ss;
      ss << golden.rdbuf();
      crit.check(ss.str() == r.trace);
    } else {
      std::ofstream out(golden_path);
      out << r.trace;
      MESSAGE("wrote new fixture ", golden_path);
    }
  }
}

TEST_CASE("criterion 2: length/concatenation composition rests in the passive set") {
  Criterion crit(2, "inserting lencat then catA derives the composed length law");
  SaturationParams params;
  params.ordering = OrderingKind::Kbo;
  params.overrides.weight["cat"] = 4;
  KnowledgeBase kb = build_kb({{"lencat", "plus(len(W,X),len(W,Y))", "len(W,cat(X,Y))"},
                               {"catA", "cat(cat(X,Y),Z)", "cat(X,cat(Y,Z))"}},
                              params);
  TermCursor::VarScope scope;
  TermCursor cl("plus(len(W,cat(X,Y)),len(W,Z))", kb.signature());
  TermPtr el = cl.read_term_named(scope);
  TermCursor cr("len(W,cat(X,cat(Y,Z)))", kb.signature());
  TermPtr er = cr.read_term_named(scope);
  bool found = false;
  for (ClauseId id : kb.prover().passive_alive()) {
    const UnitClause& c = kb.prover().bag().at(id);
    if (alpha_equal(c.left, c.right, el, er) || alpha_equal(c.right, c.left, el, er))
      found = true;
  }
  crit.check(found);
}

TEST_CASE("criterion 3: refutation sanity suite") {
  Criterion crit(3, "group-theory and classic unit-equality problems under 10 s, traces valid");
  const char* files[] = {"group_right_identity.p", "group_right_inverse.p",
                         "group_double_inverse.p", "group_inverse_identity.p",
                         "group_inverse_product.p", "abelian_rearrange.p",
                         "bool_group_comm.p"};
  for (const char* file : files) {
    INFO("problem ", file);
    Problem p = parse_problem(data_file(file), file);
    RunConfig cfg;  // lpo defaults, 10 s timeout
    auto t0 = std::chrono::steady_clock::now();
    RunReport r = run(p, cfg);
    double ms = ms_since(t0);
    crit.check(r.outcome.kind == Outcome::Kind::Proof);
    crit.check(ms < 10000.0);
    if (r.trace) {
      CheckResult cr = check_trace(p, *r.trace);
      INFO(cr.reason);
      crit.check(cr.valid);
    } else {
      crit.check(false);
    }
  }
}

TEST_CASE("criterion 4: checker soundness fuzzing") {
  Criterion crit(4, "10^4 single-field trace mutations, all rejected");
  // base traces from the refutation corpus and the smart-matching corpus
  struct Base {
    Problem problem;
    std::string trace;
  };
  std::vector<Base> bases;
  for (const char* file :
       {"group_right_identity.p", "group_right_inverse.p", "group_double_inverse.p",
        "group_inverse_identity.p", "group_inverse_product.p", "abelian_rearrange.p",
        "bool_group_comm.p"}) {
    Problem p = parse_problem(data_file(file), file);
    RunConfig cfg;
    RunReport r = run(p, cfg);
    REQUIRE(r.trace.has_value());
    bases.push_back(Base{std::move(p), *r.trace});
  }
  for (const auto& c : corpus()) {
    KnowledgeBase kb = build_kb(c.equations);
    SmartMatchQuery q;
    TermCursor::VarScope scope;
    TermCursor cl(c.lhs, kb.signature());
    q.lhs = cl.read_term_named(scope);
    TermCursor cr(c.rhs, kb.signature());
    q.rhs = cr.read_term_named(scope);
    q.max_narrowing = c.max_narrowing;
    SmartMatchResult res = kb.smart_match(q);
    REQUIRE(res.success);
    bases.push_back(Base{kb.query_problem(q), res.trace});
  }

  // sanity: the unmutated traces are accepted
  for (const auto& b : bases) {
    CheckResult cr = check_trace(b.problem, b.trace);
    INFO(cr.reason);
    REQUIRE(cr.valid);
  }

  int mutations = 0;
  int false_accepts = 0;
  unsigned seed = 1;
  while (mutations < 10000) {
    for (const auto& b : bases) {
      if (mutations >= 10000) break;
      Signature sig = b.problem.signature;
      ProofTrace parsed = parse_trace(b.trace, sig);
      TraceMutator mut(seed++, &sig);
      auto bad = mut.mutate(parsed);
      if (!bad) continue;
      ++mutations;
      CheckResult cr = check_trace(b.problem, print_trace(*bad, sig));
      if (cr.valid) {
        ++false_accepts;
        MESSAGE("false accept:\n", print_trace(*bad, sig));
      }
    }
  }
  crit.check(mutations >= 10000);
  crit.check(false_accepts == 0);
}

TEST_CASE("criterion 5: index oracle equivalence at scale") {
  Criterion crit(5, "50 random corpora of 1000 terms: filtered retrievals match the oracle");
  for (unsigned corpus_id = 0; corpus_id < 50; ++corpus_id) {
    Signature sig;
    RandomTermGen gen(&sig, 1000 + corpus_id);
    gen.max_depth = 6;
    DiscriminationTree dt;
    NaiveIndex naive;
    std::vector<std::pair<TermPtr, IndexEntry>> items;
    items.reserve(1000);
    for (std::uint32_t i = 0; i < 1000; ++i) {
      TermPtr key = gen.gen();
      IndexEntry e{i, i % 2 ? Side::Left : Side::Right, {}};
      dt.insert(key, e);
      naive.insert(key, e);
      items.emplace_back(key, e);
    }
    auto sorted = [](std::vector<IndexEntry> v) {
      std::sort(v.begin(), v.end());
      return v;
    };
    bool all_ok = true;
    for (int qn = 0; qn < 30; ++qn) {
      TermPtr query = qn % 3 == 0 ? items[static_cast<std::size_t>(gen.pick(1000))].first
                                  : gen.gen();
      std::vector<IndexEntry> exact, raw, filtered;
      naive.retrieve_unifiable(query, exact);
      dt.retrieve_unifiable(query, raw);
      for (const auto& e : raw) {
        const auto& key = items[e.clause].first;
        if (unify(key, query)) filtered.push_back(e);
      }
      all_ok &= sorted(filtered) == sorted(exact);

      exact.clear();
      raw.clear();
      filtered.clear();
      naive.retrieve_generalizations(query, exact);
      dt.retrieve_generalizations(query, raw);
      for (const auto& e : raw) {
        const auto& key = items[e.clause].first;
        if (match(key, query)) filtered.push_back(e);
      }
      all_ok &= sorted(filtered) == sorted(exact);
    }
    crit.check(all_ok);
  }
}

TEST_CASE("criterion 6: ordering property suite") {
  Criterion crit(6, "reduction-ordering properties on >= 10^4 instances per ordering");
  int n = 10000;
  run_ordering_property_suite(OrderingKind::Kbo, n, 20101);
  run_ordering_property_suite(OrderingKind::Nrkbo, n, 20102);
  run_ordering_property_suite(OrderingKind::Lpo, n, 20103);
  run_ordering_property_suite(OrderingKind::Rpo, n, 20104);
  // the harness CHECKs internally; reaching this point without a doctest
  // failure in this case means every sampled property held
  crit.check(true);
}

TEST_CASE("criterion 7: demodulation ordering guard") {
  Criterion crit(7, "every demodulation step rewrites strictly downwards, at emission and replay");
  std::int64_t steps = 0;
  int demod_lines_checked = 0;
  // refutation corpus: emission guard is a hard check inside the prover; any
  // violation would have thrown. Replay re-verifies each recorded step.
  for (const char* file : {"group_right_identity.p", "group_right_inverse.p",
                           "group_double_inverse.p", "group_inverse_identity.p",
                           "group_inverse_product.p", "abelian_rearrange.p",
                           "bool_group_comm.p"}) {
    Problem p = parse_problem(data_file(file), file);
    RunConfig cfg;
    RunReport r = run(p, cfg);
    crit.check(r.outcome.kind == Outcome::Kind::Proof);
    steps += r.outcome.stats.demod_steps;
    if (r.trace) {
      crit.check(check_trace(p, *r.trace).valid);
      Signature sig = p.signature;
      ProofTrace t = parse_trace(*r.trace, sig);
      for (const auto& line : t.lines)
        if (line.step.kind == ProofStep::Kind::Inferred &&
            line.step.rule == RuleKind::Demodulate)
          ++demod_lines_checked;
    }
  }
  for (const auto& c : corpus()) {
    KnowledgeBase kb = build_kb(c.equations);
    CorpusRun r = run_corpus_case(c, kb);
    crit.check(r.success);
    crit.check(r.trace_ok);
  }
  crit.check(steps > 0);
  crit.check(demod_lines_checked > 0);
}

TEST_CASE("criterion 8: knowledge-base persistence") {
  Criterion crit(8, "save/load round trip is exact and query-transparent");
  // one store holding the whole corpus vocabulary
  std::vector<NamedEq> eqs;
  for (const auto& c : corpus())
    for (const auto& e : c.equations) eqs.push_back(e);
  // drop duplicate names (times_s appears twice with different definitions;
  // keep the first)
  std::vector<NamedEq> unique_eqs;
  for (const auto& e : eqs) {
    bool seen = false;
    for (const auto& u : unique_eqs) seen |= std::string(u.name) == e.name;
    if (!seen) unique_eqs.push_back(e);
  }
  KnowledgeBase kb = build_kb(unique_eqs);

  std::ostringstream out;
  kb.save(out);
  std::istringstream in(out.str());
  KnowledgeBase loaded = KnowledgeBase::load(in);
  std::ostringstream out2;
  loaded.save(out2);
  crit.check(out.str() == out2.str());
  crit.check(kb.content_hash() == loaded.content_hash());

  for (const auto& c : corpus()) {
    CorpusRun before = run_corpus_case(c, kb);
    CorpusRun after = run_corpus_case(c, loaded);
    crit.check(before.success == after.success);
    if (before.success && after.success) {
      crit.check(before.narrowing == after.narrowing);
      crit.check(before.trace == after.trace);
    }
  }
}
