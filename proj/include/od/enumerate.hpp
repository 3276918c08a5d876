#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "od/order.hpp"
#include "od/term.hpp"

namespace od {

struct EnumConfig {
  int n_levels = 4;
  int max_size = 5;
  std::vector<Term> subscript_seed;  // defaults to [Omega, Pi] when empty
  int max_q_len = 1;
  long count_cap = 200000;
};

struct EnumResult {
  std::vector<Term> terms;
  bool truncated = false;
};

// All valid canonical terms up to the size budget, in (size, spelling)
// order. Deterministic for a fixed config.
EnumResult enumerate_valid(const EnumConfig& cfg);

// Size measure used by the enumerator (documented in enumerate.cpp).
int enum_weight(const Term& t);

// Independent comparator for the {0, +, phi} fragment. Shares no code
// with cmp. Errors on terms containing Omega, Pi, successors or collapses.
Ordering oracle_veblen_cmp(const Term& a, const Term& b);

bool in_veblen_fragment(const Term& t);

struct ScanReport {
  bool passed = true;
  std::string counterexample;
  long pairs = 0;
  long triples = 0;
};

using Comparator = Ordering (*)(const Term&, const Term&);

// Trichotomy and antisymmetry over all pairs; transitivity over all
// triples of a deterministic <=200-term subset plus sampled triples.
// The comparator parameter exists so the harness itself can be fed a
// deliberately broken relation.
ScanReport order_axiom_scan(const std::vector<Term>& terms, std::uint64_t seed = 1,
                            Comparator compare = cmp);

// A strictly decreasing walk from start by random valid moves.
std::vector<Term> descent_sample(std::uint64_t seed, const Term& start, int max_steps);

}  // namespace od
