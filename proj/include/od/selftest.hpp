#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "od/chain.hpp"
#include "od/term.hpp"

namespace od {

struct SuiteResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

// One synthesized step of a rope spine: the descriptor it was built
// over, the inputs, and the resulting collapse.
struct SpineStep {
  RopeDescriptor desc;
  SynthInputs inputs;
  Term rho;
};

// Grows random rope spines rooted at pi, synthesizing a valid collapse
// at every step. Deterministic for a fixed seed.
std::vector<SpineStep> gen_spine(std::uint64_t seed, int n_levels, int steps);

SuiteResult suite_order_axioms(int max_size, int n_levels, std::uint64_t seed);
SuiteResult suite_fragment_oracle(int max_size);
SuiteResult suite_collapse_bound(int max_size, int n_levels);
SuiteResult suite_rgbnd(std::uint64_t seed, int count);
SuiteResult suite_odbnd(std::uint64_t seed, int count);
SuiteResult suite_rope_laws(std::uint64_t seed, int count);
SuiteResult suite_worked_example();
SuiteResult suite_inset_equivalence(std::uint64_t seed, int count);
SuiteResult suite_st_decrease(std::uint64_t seed, int count);
SuiteResult suite_roundtrip(int max_size, int n_levels, int fuzz_count, std::uint64_t seed);
SuiteResult suite_prec_containment(int max_size, int n_levels);

// The full battery at selftest scale.
std::vector<SuiteResult> run_selftest(std::uint64_t seed, int n_levels);

}  // namespace od
