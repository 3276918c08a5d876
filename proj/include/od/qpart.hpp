#pragma once

#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "od/report.hpp"
#include "od/term.hpp"

namespace od {

// Derived view of a Q part at one level j: the predecessor pd_j, the
// stepping/range pair in_j = (st_j, rg_j) when defined, and whether j
// is an active index of the diagram itself.
struct QView {
  Term pd;
  std::optional<Term> st;
  std::optional<Term> rg;
  bool defined_in = false;
};

// rho must be a collapse with nonempty Q part; 2 <= j <= last level.
QView derive(const Term& rho, int j);

// Active index set In(rho); empty for an empty Q part.
std::set<int> in_set(const Term& rho);

// in_j(t) for arbitrary t: the (st, rg) pair, or nullopt when t carries
// no Q part (or inherits nothing at level j).
std::optional<std::pair<Term, Term>> in_pair(const Term& t, int j);

// The shape conditions on Q(d^q_sigma alpha) for a given level count.
ValidityReport shape_check(const Term& sigma, const std::vector<Quad>& q, const Term& alpha,
                           int n_levels);

}  // namespace od
