#pragma once

#include <map>
#include <set>
#include <utility>
#include <vector>

#include "od/report.hpp"
#include "od/term.hpp"

namespace od {

// Abstract rope: the subscript spine sigma_0..sigma_n, the knotting
// numbers n_0 < ... < n_l = n-1, and the knot indices i_0..i_{l-1}.
// The degenerate rope (single root sigma, no knot numbers) stands for a
// collapse introduced directly below the root.
struct RopeDescriptor {
  int n_levels = 4;  // N
  std::vector<Term> sigmas;
  std::vector<int> knot_numbers;
  std::vector<int> knot_indices;

  int spine_len() const { return static_cast<int>(sigmas.size()) - 1; }  // n
  int knot_count() const {  // l
    return knot_numbers.empty() ? 0 : static_cast<int>(knot_numbers.size()) - 1;
  }
};

// Caller-supplied pieces for Q-part synthesis: the body alpha, the top
// stepping value st_{N-1}, and the bodies of the lower stepping values
// st_i = d_{kappa^+} st_lower[i].
struct SynthInputs {
  Term body;
  Term st_top;
  std::map<int, Term> st_lower;
};

// Structural sanity of a descriptor; throws od::error on violation.
void validate_descriptor(const RopeDescriptor& desc);

// m(i) = max{m <= l : for all p < m, i <= i_p}.
int m_index(const RopeDescriptor& desc, int i);

// {N-1} plus every i with an i-knot above position m(i).
std::set<int> in_from_rope(const RopeDescriptor& desc);

// sigma_{n_{m(i)}+1}; the root sigma_0 for the degenerate rope.
Term pd_from_rope(const RopeDescriptor& desc, int i);

// The i-origin subscript: minimal q in (n_{m(i+1)}, n_{m(i)}] whose term
// is the i-range of some sigma_{p+1} at or above it, else pd_i.
Term rg_from_rope(const RopeDescriptor& desc, int i);

// Builds rho = d^q_sigma alpha over the rope and reports its validity.
// The report is returned rather than asserted.
std::pair<Term, ValidityReport> synth(const RopeDescriptor& desc, const SynthInputs& inputs);

// The arithmetic consequences of the rope structure, checked against the
// actual Q parts of the spine terms.
ValidityReport verify_rope_laws(const RopeDescriptor& desc);

// m(i+1); the synthesized resolvent subscript is sigmas[knots[m(i+1)]+1].
int resolvent_level(const RopeDescriptor& desc, int i);

}  // namespace od
