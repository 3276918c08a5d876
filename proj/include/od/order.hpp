#pragma once

#include <vector>

#include "od/term.hpp"

namespace od {

enum class Ordering { LT, EQ, GT };

inline Ordering flip(Ordering o) {
  return o == Ordering::LT ? Ordering::GT : o == Ordering::GT ? Ordering::LT : Ordering::EQ;
}

const char* to_string(Ordering o);

// Total comparison on canonical terms. EQ iff structural identity.
Ordering cmp(const Term& a, const Term& b);

inline bool lt(const Term& a, const Term& b) { return cmp(a, b) == Ordering::LT; }
inline bool le(const Term& a, const Term& b) { return cmp(a, b) != Ordering::GT; }
inline bool gt(const Term& a, const Term& b) { return cmp(a, b) == Ordering::GT; }
inline bool ge(const Term& a, const Term& b) { return cmp(a, b) != Ordering::LT; }

Term max_term(const Term& a, const Term& b);

// b reachable from a by repeatedly taking the D subscript (strict).
bool prec(const Term& a, const Term& b);
bool preceq(const Term& a, const Term& b);

// [pd_i(sigma), pd_i(pd_i(sigma)), ...]; empty when sigma has no pd_i.
std::vector<Term> pd_chain(const Term& sigma, int i);

// b on the pd_i chain of a (strict).
bool prec_i(const Term& a, const Term& b, int i);
bool preceq_i(const Term& a, const Term& b, int i);

}  // namespace od
