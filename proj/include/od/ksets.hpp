#pragma once

#include <vector>

#include "od/order.hpp"
#include "od/term.hpp"

namespace od {

// Finite set of terms, deduplicated by structural identity.
using KSet = std::vector<Term>;

void kset_insert(KSet& s, const Term& t);
void kset_union(KSet& s, const KSet& other);

// Y < beta : every element below beta.
bool kset_below(const KSet& s, const Term& beta);
// beta <= Y : some element at or above beta.
bool kset_reaches(const Term& beta, const KSet& s);
// max under cmp; Zero for the empty set.
Term kset_max(const KSet& s);

// K alpha: coefficient set over all subscripts.
KSet k_all(const Term& alpha);

// D_sigma(alpha): collapses with subscript sigma reachable in alpha.
KSet d_set(const Term& sigma, const Term& alpha);

// B_sigma(alpha) = max of bodies over D_sigma(alpha); Zero when empty.
Term b_at(const Term& sigma, const Term& alpha);

// B_{>sigma}(alpha) over the finite subscript support of alpha.
Term b_above(const Term& sigma, const Term& alpha);
Term b_above_set(const Term& sigma, const std::vector<Term>& xs);

// K_sigma alpha.
KSet k_at(const Term& sigma, const Term& alpha);
KSet k_at_set(const Term& sigma, const std::vector<Term>& xs);

// max K_sigma alpha; Zero for the empty set.
Term k_max(const Term& sigma, const Term& alpha);

}  // namespace od
