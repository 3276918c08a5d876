#include "od/order.hpp"

#include <algorithm>

#include "od/ksets.hpp"
#include "od/qpart.hpp"

namespace od {

const char* to_string(Ordering o) {
  switch (o) {
    case Ordering::LT: return "LT";
    case Ordering::EQ: return "EQ";
    case Ordering::GT: return "GT";
  }
  return "?";
}

Term max_term(const Term& a, const Term& b) { return cmp(a, b) == Ordering::LT ? b : a; }

namespace {

bool is_sc(const Term& t) { return classify(t).in_sc; }

// Lexicographic measure for collapses: body first, then the flattened
// Q part element-wise, a proper prefix counting as smaller.
Ordering cmp_measure(const Term& r1, const Term& r2) {
  Ordering c = cmp(r1.body(), r2.body());
  if (c != Ordering::EQ) return c;
  const auto& q1 = r1.quads();
  const auto& q2 = r2.quads();
  const std::size_t n = std::min(q1.size(), q2.size());
  for (std::size_t i = 0; i < n; ++i) {
    c = cmp(q1[i].nu, q2[i].nu);
    if (c != Ordering::EQ) return c;
    c = cmp(q1[i].kappa, q2[i].kappa);
    if (c != Ordering::EQ) return c;
    c = cmp(q1[i].tau, q2[i].tau);
    if (c != Ordering::EQ) return c;
    if (q1[i].level != q2[i].level)
      return q1[i].level < q2[i].level ? Ordering::LT : Ordering::GT;
  }
  if (q1.size() != q2.size()) return q1.size() < q2.size() ? Ordering::LT : Ordering::GT;
  return Ordering::EQ;
}

// Shared recipe of the D-vs-D clauses: decide by the measure, guarded by
// the K sets at the pivot subscript mu.
Ordering cmp_d_recipe(const Term& r1, const Term& r2, const Term& mu, Ordering measure) {
  if (measure == Ordering::LT)
    return kset_below(k_at_set(mu, csupport(r1)), r2) ? Ordering::LT : Ordering::GT;
  return kset_below(k_at_set(mu, csupport(r2)), r1) ? Ordering::GT : Ordering::LT;
}

Ordering cmp_d_d(const Term& r1, const Term& r2) {
  const Term& s1 = r1.sub();
  const Term& s2 = r2.sub();
  if (s1.same(s2)) {
    return cmp_d_recipe(r1, r2, s1, cmp_measure(r1, r2));
  }
  // A collapse sits below its own subscript chain.
  if (le(s1, r2)) return Ordering::LT;
  if (le(s2, r1)) return Ordering::GT;
  Ordering measure = cmp_measure(r1, r2);
  if (measure == Ordering::EQ) measure = cmp(s1, s2);  // tie-break, subscripts differ
  return cmp_d_recipe(r1, r2, cmp(s1, s2) == Ordering::LT ? s1 : s2, measure);
}

}  // namespace

Ordering cmp(const Term& a, const Term& b) {
  if (a.same(b)) return Ordering::EQ;
  // Zero is the minimum.
  if (a.is(Kind::Zero)) return Ordering::LT;
  if (b.is(Kind::Zero)) return Ordering::GT;
  // Sums: additive-normal-form comparison.
  if (a.is(Kind::Sum) && b.is(Kind::Sum)) {
    const auto& xs = a.parts();
    const auto& ys = b.parts();
    const std::size_t n = std::min(xs.size(), ys.size());
    for (std::size_t i = 0; i < n; ++i) {
      Ordering c = cmp(xs[i], ys[i]);
      if (c != Ordering::EQ) return c;
    }
    return xs.size() < ys.size() ? Ordering::LT : Ordering::GT;
  }
  if (a.is(Kind::Sum)) return cmp(a.parts()[0], b) == Ordering::LT ? Ordering::LT : Ordering::GT;
  if (b.is(Kind::Sum)) return cmp(a, b.parts()[0]) == Ordering::GT ? Ordering::GT : Ordering::LT;
  // Veblen terms.
  if (a.is(Kind::Phi) && b.is(Kind::Phi)) {
    Ordering c = cmp(a.phi_first(), b.phi_first());
    if (c == Ordering::EQ) return cmp(a.phi_second(), b.phi_second());
    if (c == Ordering::LT)
      return cmp(a.phi_second(), b) == Ordering::LT ? Ordering::LT : Ordering::GT;
    return cmp(a, b.phi_second()) == Ordering::GT ? Ordering::GT : Ordering::LT;
  }
  if (a.is(Kind::Phi)) {
    // b is strongly critical here.
    return lt(a.phi_first(), b) && lt(a.phi_second(), b) ? Ordering::LT : Ordering::GT;
  }
  if (b.is(Kind::Phi)) return lt(b.phi_first(), a) && lt(b.phi_second(), a) ? Ordering::GT
                                                                            : Ordering::LT;
  // Both strongly critical. A collapse is below every term on its
  // subscript path; this overrides the generic clauses below.
  if (a.is(Kind::D)) {
    const auto path = subscript_path(a);
    for (std::size_t i = 1; i < path.size(); ++i)
      if (path[i].same(b)) return Ordering::LT;
  }
  if (b.is(Kind::D)) {
    const auto path = subscript_path(b);
    for (std::size_t i = 1; i < path.size(); ++i)
      if (path[i].same(a)) return Ordering::GT;
  }
  // pi is the maximum of the regulars.
  if (a.is(Kind::Pi)) return Ordering::GT;
  if (b.is(Kind::Pi)) return Ordering::LT;
  if (a.is(Kind::D) && b.is(Kind::D)) return cmp_d_d(a, b);
  // x^+ is the least regular above x.
  if (b.is(Kind::RSucc)) return cmp(b.rsucc_base(), a) == Ordering::LT ? Ordering::GT
                                                                       : Ordering::LT;
  if (a.is(Kind::RSucc)) return cmp(a.rsucc_base(), b) == Ordering::LT ? Ordering::LT
                                                                       : Ordering::GT;
  // Omega versus a collapse: decided by the subscript.
  if (a.is(Kind::Omega)) return lt(omega(), b.sub()) ? Ordering::LT : Ordering::GT;
  return lt(omega(), a.sub()) ? Ordering::GT : Ordering::LT;
}

bool prec(const Term& a, const Term& b) {
  if (!a.is(Kind::D)) return false;
  const auto path = subscript_path(a);
  for (std::size_t i = 1; i < path.size(); ++i)
    if (path[i].same(b)) return true;
  return false;
}

bool preceq(const Term& a, const Term& b) { return a.same(b) || prec(a, b); }

std::vector<Term> pd_chain(const Term& sigma, int i) {
  std::vector<Term> out;
  Term cur = sigma;
  while (cur.is(Kind::D) && !cur.quads().empty()) {
    Term next = derive(cur, i).pd;
    out.push_back(next);
    cur = next;
  }
  return out;
}

bool prec_i(const Term& a, const Term& b, int i) {
  for (const Term& t : pd_chain(a, i))
    if (t.same(b)) return true;
  return false;
}

bool preceq_i(const Term& a, const Term& b, int i) { return a.same(b) || prec_i(a, b, i); }

}  // namespace od
