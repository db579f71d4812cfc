#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "dompack/digraph.hpp"

namespace dompack {

struct Verdict {
  bool ok = true;
  std::string expected;
  std::string observed;
};

// A checkable statement: `generate` supplies the instance for one trial and
// `check` judges any digraph on its own, so a dumped counterexample can be
// replayed in isolation.
struct TheoremCheck {
  std::string id;
  std::string statement;
  // Largest order the check can handle; effective max_n is clamped to it.
  std::size_t order_cap;
  std::function<Digraph(std::uint64_t seed, std::size_t trial, std::size_t trials,
                        std::size_t max_n)>
      generate;
  std::function<Verdict(const Digraph&)> check;
};

const std::vector<TheoremCheck>& theorem_checks();
const TheoremCheck* find_theorem_check(const std::string& id);

struct Counterexample {
  std::size_t trial = 0;
  std::string instance;  // canonical edge list
  std::string expected;
  std::string observed;
};

struct VerificationReport {
  std::string theorem_id;
  std::size_t trials = 0;
  std::size_t passes = 0;
  std::vector<Counterexample> counterexamples;
  std::uint64_t seed = 0;
  std::size_t max_n = 0;
  double elapsed_seconds = 0;
};

// Seed for trial i; trials are independent of each other and of order.
std::uint64_t trial_seed(std::uint64_t base, std::size_t trial);

// Runs `trials` instances, optionally across threads. The report does not
// depend on the thread count. Throws ContractError for an unknown id.
VerificationReport run_verification(const std::string& theorem_id, std::size_t trials,
                                    std::size_t max_n, std::uint64_t seed,
                                    std::size_t threads = 1);

}  // namespace dompack
