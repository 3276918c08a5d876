#pragma once

#include <vector>

#include "od/report.hpp"
#include "od/term.hpp"

namespace od {

// All conditions a collapse d^q_sigma alpha must satisfy, assuming its
// proper subterms are already known valid.
ValidityReport check_d(const Term& sigma, const std::vector<Quad>& q, const Term& alpha,
                       int n_levels);

// Recursive closure of check_d over every D-subterm of t.
ValidityReport check_term(const Term& t, int n_levels);

// gamma = max{B_pi(beta), B_{>sigma}({sigma, alpha})} + omega^beta, with the
// bound B_{>sigma}({sigma, gamma, gamma + max K_sigma(alpha)}) < gamma
// verified before returning.
Term gamma_bound(const Term& alpha, const Term& beta, const Term& sigma);

}  // namespace od
