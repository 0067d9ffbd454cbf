#pragma once

#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "ueq/term.hpp"
#include "ueq/term_io.hpp"

namespace ueqtest {

using namespace ueq;

/// Builds terms from text; named variables (X, Y, N0...) share one scope so
/// the same name is the same variable across calls.
struct Fx {
  Signature sig;
  TermCursor::VarScope scope;

  TermPtr t(std::string_view s) {
    TermCursor cur(s, sig);
    TermPtr out = cur.read_term_named(scope);
    return out;
  }
  std::int32_t var(std::string_view name) {
    TermPtr v = t(name);
    return v->var_id();
  }
  std::string str(const TermPtr& x) { return print_term(x, sig); }
};

/// Random terms over a small mixed-arity signature.
struct RandomTermGen {
  Signature* sig;
  std::vector<Symbol> symbols;
  std::vector<Symbol> constants;
  int max_depth = 5;
  int num_vars = 4;
  std::mt19937 rng;

  RandomTermGen(Signature* s, unsigned seed, int max_arity = 3) : sig(s), rng(seed) {
    const char* names0[] = {"a", "b", "c"};
    const char* names1[] = {"f", "g"};
    const char* names2[] = {"h", "k"};
    const char* names3[] = {"p"};
    for (auto n : names0) constants.push_back(sig->intern(n, 0));
    symbols = constants;
    if (max_arity >= 1)
      for (auto n : names1) symbols.push_back(sig->intern(n, 1));
    if (max_arity >= 2)
      for (auto n : names2) symbols.push_back(sig->intern(n, 2));
    if (max_arity >= 3)
      for (auto n : names3) symbols.push_back(sig->intern(n, 3));
  }

  bool coin(double p) { return std::uniform_real_distribution<double>(0, 1)(rng) < p; }
  int pick(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng); }

  TermPtr gen(int depth = 0, bool ground = false) {
    if (depth >= max_depth || coin(0.3)) {
      if (!ground && coin(0.5)) return Term::var(pick(num_vars));
      return Term::constant(constants[pick(static_cast<int>(constants.size()))]);
    }
    Symbol f = symbols[pick(static_cast<int>(symbols.size()))];
    std::vector<TermPtr> args;
    for (std::uint32_t i = 0; i < f.arity; ++i) args.push_back(gen(depth + 1, ground));
    return Term::app(f, std::move(args));
  }

  TermPtr gen_ground(int depth = 0) { return gen(depth, true); }

  /// Random substitution over (a subset of) t's variables.
  Subst gen_subst(const TermPtr& t, double bind_prob = 0.8, bool ground = false) {
    std::vector<std::int32_t> vars;
    collect_vars(t, vars);
    Subst out;
    for (auto v : vars)
      if (coin(bind_prob)) out.bind(v, gen(max_depth - 2, ground));
    return out;
  }
};

/// Node count computed the long way: the independent oracle for weight().
inline int count_nodes(const TermPtr& t) {
  if (t->is_var()) return 1;
  int n = 1;
  for (const auto& a : t->args()) n += count_nodes(a);
  return n;
}

}  // namespace ueqtest
