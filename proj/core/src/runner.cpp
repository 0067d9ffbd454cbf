#include "ueq/runner.hpp"

#include <atomic>
#include <chrono>
#include <memory>
#include <mutex>
#include <thread>

namespace ueq {

namespace {

struct Instance {
  OrderingKind ordering;
  std::unique_ptr<Prover> prover;
  Outcome outcome;
};

std::unique_ptr<Prover> build_prover(const Problem& problem, const SaturationParams& params) {
  auto prover = std::make_unique<Prover>(params, &problem.signature);
  for (const auto& c : problem.axioms) prover->add_input(Sign::Positive, c.left, c.right, c.name);
  for (const auto& c : problem.goals) prover->add_input(Sign::Negative, c.left, c.right, c.name);
  return prover;
}

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

RunReport run(const Problem& problem, const RunConfig& config) {
  RunReport report;
  auto t0 = std::chrono::steady_clock::now();

  Instance* winner = nullptr;
  std::vector<Instance> instances;
  if (!config.portfolio) {
    instances.push_back(Instance{config.params.ordering, build_prover(problem, config.params), {}});
    instances[0].outcome = instances[0].prover->saturate();
  } else {
    std::atomic<bool> cancel{false};
    std::mutex m;
    int first_proof = -1;
    for (OrderingKind k : config.portfolio_orderings) {
      SaturationParams p = config.params;
      p.ordering = k;
      instances.push_back(Instance{k, build_prover(problem, p), {}});
    }
    std::vector<std::thread> threads;
    threads.reserve(instances.size());
    for (std::size_t i = 0; i < instances.size(); ++i) {
      threads.emplace_back([&, i] {
        instances[i].outcome = instances[i].prover->saturate(&cancel);
        if (instances[i].outcome.kind == Outcome::Kind::Proof) {
          std::lock_guard<std::mutex> lock(m);
          if (first_proof < 0) first_proof = static_cast<int>(i);
          cancel.store(true, std::memory_order_relaxed);
        }
      });
    }
    for (auto& t : threads) t.join();
    if (first_proof >= 0) winner = &instances[first_proof];
  }

  if (!winner) {
    // prefer a proof, then a genuine saturation verdict, else the first instance
    for (auto& inst : instances)
      if (inst.outcome.kind == Outcome::Kind::Proof) {
        winner = &inst;
        break;
      }
    if (!winner)
      for (auto& inst : instances)
        if (inst.outcome.kind == Outcome::Kind::Saturated) {
          winner = &inst;
          break;
        }
    if (!winner) winner = &instances.front();
  }

  report.saturate_ms = ms_since(t0);
  report.outcome = winner->outcome;
  report.ordering = winner->ordering;
  if (winner->outcome.kind == Outcome::Kind::Proof) {
    auto t1 = std::chrono::steady_clock::now();
    ProofTrace t = emit_trace(winner->prover->bag(), *winner->outcome.proof, winner->ordering);
    report.trace = print_trace(t, problem.signature);
    report.trace_ms = ms_since(t1);
  }
  return report;
}

int exit_code(const RunReport& report) {
  switch (report.outcome.kind) {
    case Outcome::Kind::Proof: return 0;
    case Outcome::Kind::Saturated: return 1;
    case Outcome::Kind::ResourceOut: return 2;
  }
  return 2;
}

}  // namespace ueq
