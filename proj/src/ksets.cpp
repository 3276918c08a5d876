#include "od/ksets.hpp"

namespace od {

void kset_insert(KSet& s, const Term& t) {
  for (const Term& x : s)
    if (x.same(t)) return;
  s.push_back(t);
}

void kset_union(KSet& s, const KSet& other) {
  for (const Term& t : other) kset_insert(s, t);
}

bool kset_below(const KSet& s, const Term& beta) {
  for (const Term& x : s)
    if (cmp(x, beta) != Ordering::LT) return false;
  return true;
}

bool kset_reaches(const Term& beta, const KSet& s) {
  for (const Term& x : s)
    if (cmp(beta, x) != Ordering::GT) return true;
  return false;
}

Term kset_max(const KSet& s) {
  Term m = zero();
  for (const Term& x : s)
    if (cmp(m, x) == Ordering::LT) m = x;
  return m;
}

KSet k_all(const Term& alpha) {
  KSet out;
  switch (alpha.kind()) {
    case Kind::Zero:
      return out;
    case Kind::Sum:
      for (const Term& p : alpha.parts()) kset_union(out, k_all(p));
      return out;
    case Kind::Phi:
      kset_union(out, k_all(alpha.phi_first()));
      kset_union(out, k_all(alpha.phi_second()));
      return out;
    default:
      // strongly critical
      out.push_back(alpha);
      return out;
  }
}

KSet d_set(const Term& sigma, const Term& alpha) {
  if (!classify(sigma).in_r) throw error("d_set subscript must be recursively regular");
  KSet out;
  switch (alpha.kind()) {
    case Kind::Zero:
    case Kind::Omega:
    case Kind::Pi:
      return out;
    case Kind::Sum:
      for (const Term& p : alpha.parts()) kset_union(out, d_set(sigma, p));
      return out;
    case Kind::Phi:
      kset_union(out, d_set(sigma, alpha.phi_first()));
      kset_union(out, d_set(sigma, alpha.phi_second()));
      return out;
    case Kind::RSucc:
      return d_set(sigma, alpha.rsucc_base());
    case Kind::D: {
      const Term& tau = alpha.sub();
      Ordering c = cmp(tau, sigma);
      if (c == Ordering::GT) {
        for (const Term& x : csupport(alpha)) kset_union(out, d_set(sigma, x));
      } else if (c == Ordering::EQ) {
        kset_insert(out, alpha);
        for (const Term& x : csupport(alpha)) kset_union(out, d_set(sigma, x));
      } else {
        kset_union(out, d_set(sigma, tau));
      }
      return out;
    }
  }
  return out;
}

Term b_at(const Term& sigma, const Term& alpha) {
  Term m = zero();
  for (const Term& d : d_set(sigma, alpha)) m = max_term(m, d.body());
  return m;
}

Term b_above_set(const Term& sigma, const std::vector<Term>& xs) {
  // Only subscripts occurring in xs (and pi) can contribute a nonempty
  // D set, so the sup over all tau > sigma is a finite max.
  KSet cands;
  kset_insert(cands, pi());
  for (const Term& x : xs)
    for (const Term& s : d_subscripts(x)) kset_insert(cands, s);
  Term m = zero();
  for (const Term& tau : cands) {
    if (cmp(tau, sigma) != Ordering::GT) continue;
    for (const Term& x : xs) m = max_term(m, b_at(tau, x));
  }
  return m;
}

Term b_above(const Term& sigma, const Term& alpha) { return b_above_set(sigma, {alpha}); }

KSet k_at(const Term& sigma, const Term& alpha) {
  if (!classify(sigma).in_r) throw error("k_at subscript must be recursively regular");
  KSet out;
  switch (alpha.kind()) {
    case Kind::Zero:
    case Kind::Omega:
    case Kind::Pi:
      return out;
    case Kind::Sum:
      for (const Term& p : alpha.parts()) kset_union(out, k_at(sigma, p));
      return out;
    case Kind::Phi:
      kset_union(out, k_at(sigma, alpha.phi_first()));
      kset_union(out, k_at(sigma, alpha.phi_second()));
      return out;
    case Kind::RSucc:
      return k_at(sigma, alpha.rsucc_base());
    case Kind::D: {
      const Term& tau = alpha.sub();
      Ordering c = cmp(tau, sigma);
      if (c == Ordering::LT && !preceq(tau, sigma)) return k_at(sigma, tau);
      if (c == Ordering::GT) {
        for (const Term& x : csupport(alpha)) kset_union(out, k_at(sigma, x));
        return out;
      }
      // tau == sigma, or tau strictly below sigma on its subscript path.
      kset_insert(out, alpha);
      for (const Term& x : csupport(alpha)) kset_union(out, k_at(sigma, x));
      return out;
    }
  }
  return out;
}

KSet k_at_set(const Term& sigma, const std::vector<Term>& xs) {
  KSet out;
  for (const Term& x : xs) kset_union(out, k_at(sigma, x));
  return out;
}

Term k_max(const Term& sigma, const Term& alpha) { return kset_max(k_at(sigma, alpha)); }

}  // namespace od
