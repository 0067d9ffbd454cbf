#include <benchmark/benchmark.h>

#include <random>

#include "ueq/index.hpp"
#include "ueq/library.hpp"
#include "ueq/parser.hpp"
#include "ueq/runner.hpp"
#include "ueq/term.hpp"
#include "ueq/term_io.hpp"

namespace {

using namespace ueq;

struct Gen {
  Signature sig;
  std::vector<Symbol> symbols;
  std::vector<Symbol> constants;
  std::mt19937 rng{12345};

  Gen() {
    for (const char* n : {"a", "b", "c"}) constants.push_back(sig.intern(n, 0));
    symbols = constants;
    for (const char* n : {"f", "g"}) symbols.push_back(sig.intern(n, 1));
    for (const char* n : {"h", "k"}) symbols.push_back(sig.intern(n, 2));
  }
  bool coin(double p) { return std::uniform_real_distribution<>(0, 1)(rng) < p; }
  int pick(int n) { return std::uniform_int_distribution<>(0, n - 1)(rng); }
  TermPtr term(int depth = 0) {
    if (depth >= 5 || coin(0.3)) {
      if (coin(0.5)) return Term::var(pick(4));
      return Term::constant(constants[static_cast<std::size_t>(pick(3))]);
    }
    Symbol f = symbols[static_cast<std::size_t>(pick(static_cast<int>(symbols.size())))];
    std::vector<TermPtr> args;
    for (std::uint32_t i = 0; i < f.arity; ++i) args.push_back(term(depth + 1));
    return Term::app(f, std::move(args));
  }
};

void BM_Unify(benchmark::State& state) {
  Gen gen;
  std::vector<std::pair<TermPtr, TermPtr>> pairs;
  for (int i = 0; i < 512; ++i) pairs.emplace_back(gen.term(), gen.term());
  std::size_t i = 0;
  for (auto _ : state) {
    auto& [a, b] = pairs[i++ % pairs.size()];
    benchmark::DoNotOptimize(unify(a, b));
  }
}
BENCHMARK(BM_Unify);

void BM_Match(benchmark::State& state) {
  Gen gen;
  std::vector<std::pair<TermPtr, TermPtr>> pairs;
  for (int i = 0; i < 512; ++i) {
    TermPtr pattern = gen.term();
    Subst inst;
    std::vector<std::int32_t> vars;
    collect_vars(pattern, vars);
    for (auto v : vars) inst.bind(v, gen.term(3));
    pairs.emplace_back(pattern, inst.apply(pattern));
  }
  std::size_t i = 0;
  for (auto _ : state) {
    auto& [p, t] = pairs[i++ % pairs.size()];
    benchmark::DoNotOptimize(match(p, t));
  }
}
BENCHMARK(BM_Match);

void BM_IndexRetrieveUnifiable(benchmark::State& state) {
  Gen gen;
  DiscriminationTree dt;
  for (std::uint32_t i = 0; i < static_cast<std::uint32_t>(state.range(0)); ++i)
    dt.insert(gen.term(), IndexEntry{i, Side::Left, {}});
  std::vector<TermPtr> queries;
  for (int i = 0; i < 128; ++i) queries.push_back(gen.term());
  std::size_t i = 0;
  std::vector<IndexEntry> out;
  for (auto _ : state) {
    out.clear();
    dt.retrieve_unifiable(queries[i++ % queries.size()], out);
    benchmark::DoNotOptimize(out.size());
  }
}
BENCHMARK(BM_IndexRetrieveUnifiable)->Arg(1000)->Arg(10000);

void BM_NaiveRetrieveUnifiable(benchmark::State& state) {
  Gen gen;
  NaiveIndex naive;
  for (std::uint32_t i = 0; i < static_cast<std::uint32_t>(state.range(0)); ++i)
    naive.insert(gen.term(), IndexEntry{i, Side::Left, {}});
  std::vector<TermPtr> queries;
  for (int i = 0; i < 128; ++i) queries.push_back(gen.term());
  std::size_t i = 0;
  std::vector<IndexEntry> out;
  for (auto _ : state) {
    out.clear();
    naive.retrieve_unifiable(queries[i++ % queries.size()], out);
    benchmark::DoNotOptimize(out.size());
  }
}
BENCHMARK(BM_NaiveRetrieveUnifiable)->Arg(1000);

void BM_OrderingCompare(benchmark::State& state) {
  Gen gen;
  OrderingKind kind = static_cast<OrderingKind>(state.range(0));
  TermOrdering ord(kind, &gen.sig);
  std::vector<std::pair<TermPtr, TermPtr>> pairs;
  for (int i = 0; i < 512; ++i) pairs.emplace_back(gen.term(), gen.term());
  std::size_t i = 0;
  for (auto _ : state) {
    auto& [a, b] = pairs[i++ % pairs.size()];
    benchmark::DoNotOptimize(ord.compare(a, b));
  }
}
BENCHMARK(BM_OrderingCompare)
    ->Arg(static_cast<int>(OrderingKind::Kbo))
    ->Arg(static_cast<int>(OrderingKind::Nrkbo))
    ->Arg(static_cast<int>(OrderingKind::Lpo))
    ->Arg(static_cast<int>(OrderingKind::Rpo));

const char* kGroupRightInverse =
    "cnf(assoc, axiom, mult(mult(X,Y),Z) = mult(X,mult(Y,Z))).\n"
    "cnf(left_identity, axiom, mult(e,X) = X).\n"
    "cnf(left_inverse, axiom, mult(inv(X),X) = e).\n"
    "cnf(right_inverse, negated_conjecture, mult(a,inv(a)) != e).\n";

void BM_GroupRightInverse(benchmark::State& state) {
  for (auto _ : state) {
    Problem p = parse_problem(kGroupRightInverse, "bench");
    RunConfig cfg;
    RunReport r = run(p, cfg);
    if (r.outcome.kind != Outcome::Kind::Proof) state.SkipWithError("no proof");
    benchmark::DoNotOptimize(r.trace);
  }
}
BENCHMARK(BM_GroupRightInverse)->Unit(benchmark::kMillisecond);

void BM_SmartMatch(benchmark::State& state) {
  KnowledgeBase kb;
  {
    TermCursor::VarScope s;
    TermCursor cl("pred(s(N))", kb.signature());
    TermPtr l = cl.read_term_named(s);
    TermCursor cr("N", kb.signature());
    TermPtr r = cr.read_term_named(s);
    kb.add_equation("pred_s", l, r);
  }
  SmartMatchQuery q;
  TermCursor::VarScope s;
  TermCursor cl("le(pred(X),pred(Y))", kb.signature());
  q.lhs = cl.read_term_named(s);
  TermCursor cr("le(n,m)", kb.signature());
  q.rhs = cr.read_term_named(s);
  for (auto _ : state) {
    SmartMatchResult res = kb.smart_match(q);
    if (!res.success) state.SkipWithError("no match");
    benchmark::DoNotOptimize(res.substitution);
  }
}
BENCHMARK(BM_SmartMatch)->Unit(benchmark::kMicrosecond);

void BM_CheckTrace(benchmark::State& state) {
  Problem p = parse_problem(kGroupRightInverse, "bench");
  RunConfig cfg;
  RunReport r = run(p, cfg);
  if (!r.trace) {
    state.SkipWithError("no trace");
    return;
  }
  for (auto _ : state) {
    CheckResult cr = check_trace(p, *r.trace);
    if (!cr.valid) state.SkipWithError("invalid trace");
    benchmark::DoNotOptimize(cr);
  }
}
BENCHMARK(BM_CheckTrace)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
