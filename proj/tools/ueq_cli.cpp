#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "ueq/library.hpp"
#include "ueq/parser.hpp"
#include "ueq/runner.hpp"
#include "ueq/trace.hpp"

namespace {

using namespace ueq;

constexpr int kExitProof = 0;
constexpr int kExitNoProof = 1;
constexpr int kExitResourceOut = 2;
constexpr int kExitInputError = 3;

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open '" + path + "'");
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

void write_text(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot open '" + path + "' for writing");
  f << text;
}

std::pair<int, int> parse_ratio(const std::string& s) {
  auto colon = s.find(':');
  if (colon == std::string::npos) throw std::runtime_error("expected a:w ratio, e.g. 1:4");
  int a = std::stoi(s.substr(0, colon));
  int w = std::stoi(s.substr(colon + 1));
  if (a < 0 || w < 0 || (a == 0 && w == 0))
    throw std::runtime_error("age:weight ratio must be non-negative and not 0:0");
  return {a, w};
}

struct NamedEquation {
  std::string name;
  TermPtr left;
  TermPtr right;
};

// line format: name: lhs = rhs   ('#' comments, blank lines ignored)
std::vector<NamedEquation> parse_equation_lines(const std::string& text, Signature& sig) {
  std::vector<NamedEquation> out;
  std::size_t start = 0;
  int lineno = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string::npos) end = text.size();
    std::string line = text.substr(start, end - start);
    start = end + 1;
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    bool blank = true;
    for (char c : line)
      if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
    if (blank) continue;
    auto colon = line.find(':');
    if (colon == std::string::npos)
      throw ParseError("expected 'name: lhs = rhs'", lineno, 1);
    NamedEquation eq;
    eq.name = line.substr(0, colon);
    while (!eq.name.empty() && std::isspace(static_cast<unsigned char>(eq.name.back())))
      eq.name.pop_back();
    TermCursor cur(std::string_view(line).substr(colon + 1), sig, lineno);
    TermCursor::VarScope scope;
    eq.left = cur.read_term_named(scope);
    cur.expect('=');
    eq.right = cur.read_term_named(scope);
    if (!cur.at_end()) cur.fail("trailing input");
    out.push_back(std::move(eq));
  }
  return out;
}

const char* limit_name(LimitKind k) {
  switch (k) {
    case LimitKind::Timeout: return "timeout";
    case LimitKind::Iterations: return "iteration cap";
    case LimitKind::WeightCap: return "weight cap (clauses were dropped)";
    case LimitKind::NarrowingBound: return "narrowing bound";
    case LimitKind::Cancelled: return "cancelled";
    default: return "none";
  }
}

void print_stats(const SaturationStats& st) {
  std::cerr << "  iterations " << st.iterations << ", generated " << st.generated
            << ", simplified away " << st.simplified_away << ", dropped by weight "
            << st.dropped_weight << ", demodulation steps " << st.demod_steps << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ueq - unit-equality superposition prover with a persistent equation library"};

  std::string problem_path;
  std::string ordering_name = "lpo";
  bool portfolio = false;
  double timeout = 10.0;
  int max_weight = 100;
  std::string age_weight = "1:4";
  int narrowing = 3;
  std::string kb_path, save_kb_path, add_equations_path, smart_query, trace_out, check_path,
      config_path;
  std::vector<std::string> locals;

  app.add_option("problem", problem_path, "TPTP CNF problem file");
  app.add_option("--ordering", ordering_name, "term ordering: kbo, nrkbo, lpo, rpo")
      ->check(CLI::IsMember({"kbo", "nrkbo", "lpo", "rpo"}));
  app.add_flag("--portfolio", portfolio, "run all four orderings concurrently, first proof wins");
  app.add_option("--timeout", timeout, "saturation timeout in seconds (negative: none)");
  app.add_option("--max-weight", max_weight, "silently drop inferred clauses heavier than this");
  app.add_option("--age-weight", age_weight, "selection ratio a:w (age picks : weight picks)");
  app.add_option("--narrowing", narrowing, "smart-match narrowing bound per goal lineage");
  app.add_option("--kb", kb_path, "knowledge-base file to load");
  app.add_option("--save-kb", save_kb_path, "write the knowledge base here before exiting");
  app.add_option("--add-equations", add_equations_path,
                 "file of 'name: lhs = rhs' lines to insert into the knowledge base");
  app.add_option("--smart-match", smart_query,
                 "match a conclusion against a goal up to the knowledge base: \"lhs = rhs\"");
  app.add_option("--local", locals, "query-local equation 'name: lhs = rhs' (repeatable)");
  app.add_option("--trace-out", trace_out, "write the proof trace to this file ('-': stdout)");
  app.add_option("--check", check_path, "verify a trace file against the problem and exit");
  app.add_option("--config", config_path, "ordering config file (weight/precedence overrides)");

  CLI11_PARSE(app, argc, argv);

  try {
    SaturationParams params;
    params.ordering = *ordering_kind_from(ordering_name);
    params.timeout_seconds = timeout;
    params.max_weight = max_weight;
    std::tie(params.age_ratio, params.weight_ratio) = parse_ratio(age_weight);
    if (!config_path.empty()) params.overrides = parse_ordering_config(slurp(config_path));

    // trace checking mode: against a problem file, or against a knowledge
    // base plus the query the trace came from
    if (!check_path.empty()) {
      Problem problem;
      if (!problem_path.empty()) {
        problem = parse_problem(slurp(problem_path), problem_path);
      } else if (!kb_path.empty() && !smart_query.empty()) {
        KnowledgeBase kb = KnowledgeBase::load_file(kb_path);
        SmartMatchQuery q;
        TermCursor cur(smart_query, kb.signature());
        TermCursor::VarScope scope;
        q.lhs = cur.read_term_named(scope);
        cur.expect('=');
        q.rhs = cur.read_term_named(scope);
        for (const auto& l : locals) {
          auto eqs = parse_equation_lines(l + "\n", kb.signature());
          for (auto& eq : eqs) q.local_equations.push_back({eq.name, eq.left, eq.right});
        }
        problem = kb.query_problem(q);
      } else {
        std::cerr << "error: --check needs the problem file the trace refers to, or "
                     "--kb together with the --smart-match query\n";
        return kExitInputError;
      }
      CheckResult r = check_trace(problem, slurp(check_path), params.overrides);
      if (r.valid) {
        std::cout << "Valid\n";
        return kExitProof;
      }
      std::cout << "Invalid at line " << r.line << ": " << r.reason << "\n";
      return kExitNoProof;
    }

    // knowledge-base modes
    if (!smart_query.empty() || !add_equations_path.empty() || !save_kb_path.empty()) {
      KnowledgeBase kb =
          kb_path.empty() ? KnowledgeBase(params) : KnowledgeBase::load_file(kb_path);
      if (!add_equations_path.empty()) {
        auto eqs = parse_equation_lines(slurp(add_equations_path), kb.signature());
        for (const auto& eq : eqs) {
          auto rep = kb.add_equation(eq.name, eq.left, eq.right);
          std::cerr << "add " << eq.name << ": "
                    << (rep.subsumed ? "subsumed, no change" : "ok") << ", " << rep.generated
                    << " clauses generated\n";
        }
      }
      if (!save_kb_path.empty()) kb.save_file(save_kb_path);
      if (smart_query.empty()) return kExitProof;

      SmartMatchQuery q;
      q.max_narrowing = narrowing;
      q.timeout_seconds = timeout;
      {
        TermCursor cur(smart_query, kb.signature());
        TermCursor::VarScope scope;
        q.lhs = cur.read_term_named(scope);
        cur.expect('=');
        q.rhs = cur.read_term_named(scope);
        for (const auto& l : locals) {
          auto eqs = parse_equation_lines(l + "\n", kb.signature());
          for (auto& eq : eqs) q.local_equations.push_back({eq.name, eq.left, eq.right});
        }
        auto t0 = std::chrono::steady_clock::now();
        SmartMatchResult res = kb.smart_match(q);
        double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                              t0)
                        .count();
        if (res.success) {
          std::cout << "Match found (" << res.narrowing_steps << " narrowing steps, "
                    << res.clauses_generated << " clauses, " << ms << " ms)\n";
          // report the instantiation using the query's variable names
          std::vector<std::pair<std::string, std::int32_t>> named(scope.names.begin(),
                                                                  scope.names.end());
          std::sort(named.begin(), named.end(),
                    [](const auto& a, const auto& b) { return a.second < b.second; });
          for (const auto& [name, id] : named)
            if (const TermPtr* t = res.substitution.lookup(id))
              std::cout << "  " << name << " := " << print_term(*t, kb.signature()) << "\n";
          if (!trace_out.empty()) write_text(trace_out, res.trace);
          return kExitProof;
        }
        std::cout << "No match within the narrowing bound";
        if (res.limit == LimitKind::Timeout || res.limit == LimitKind::Cancelled)
          std::cout << " (stopped by " << limit_name(res.limit) << ")";
        std::cout << " (" << res.clauses_generated << " clauses, " << ms << " ms)\n";
        return res.limit == LimitKind::Timeout || res.limit == LimitKind::Cancelled
                   ? kExitResourceOut
                   : kExitNoProof;
      }
    }

    // refutation mode
    if (problem_path.empty()) {
      std::cerr << "error: no problem file given (see --help)\n";
      return kExitInputError;
    }
    auto t0 = std::chrono::steady_clock::now();
    Problem problem = parse_problem(slurp(problem_path), problem_path);
    double parse_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    if (problem.goals.empty()) {
      std::cerr << "error: no goal (negated conjecture) in the problem\n";
      return kExitInputError;
    }
    RunConfig cfg;
    cfg.params = params;
    cfg.portfolio = portfolio;
    RunReport report = run(problem, cfg);
    std::cerr << "timing: parse " << parse_ms << " ms, saturate " << report.saturate_ms
              << " ms, trace " << report.trace_ms << " ms\n";
    print_stats(report.outcome.stats);
    switch (report.outcome.kind) {
      case Outcome::Kind::Proof:
        std::cout << "Proof found (ordering " << to_string(report.ordering) << ")\n";
        if (!trace_out.empty() && report.trace) write_text(trace_out, *report.trace);
        return kExitProof;
      case Outcome::Kind::Saturated:
        std::cout << "Saturated without a proof\n";
        return kExitNoProof;
      case Outcome::Kind::ResourceOut:
        std::cout << "Resource limit hit: " << limit_name(report.outcome.limit) << "\n";
        return kExitResourceOut;
    }
    return kExitResourceOut;
  } catch (const ParseError& e) {
    std::cerr << "input error (line " << e.line << ", column " << e.column << "): " << e.what()
              << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
}
