#include "od/validity.hpp"

#include <optional>
#include <string>

#include "od/ksets.hpp"
#include "od/order.hpp"
#include "od/qpart.hpp"
#include "od/textio.hpp"

namespace od {

namespace {

bool in_dq(const Term& t) { return t.is(Kind::D) && !t.quads().empty(); }

std::string level_tag(int i) { return "i=" + std::to_string(i); }

bool pairs_equal(const std::optional<std::pair<Term, Term>>& a,
                 const std::optional<std::pair<Term, Term>>& b) {
  if (!a && !b) return true;
  if (!a || !b) return false;
  return a->first.same(b->first) && a->second.same(b->second);
}

// The unique entry of the subscript path of rho lying in D_kappa.
std::optional<Term> locate_alpha1(const Term& rho, const Term& kappa) {
  for (const Term& t : subscript_path(rho))
    if (t.is(Kind::D) && t.sub().same(kappa)) return t;
  return std::nullopt;
}

// in_i-inherited rg of an arbitrary term, undefined when absent.
std::optional<Term> rg_of(const Term& t, int i) {
  auto p = in_pair(t, i);
  if (!p) return std::nullopt;
  return p->second;
}

std::optional<Term> st_of(const Term& t, int i) {
  auto p = in_pair(t, i);
  if (!p) return std::nullopt;
  return p->first;
}

// Kappa candidates for the D^Q.2 quantifier: the bound itself, Omega,
// and every D-subterm subscript of st not exceeding the bound. K_kappa
// is piecewise constant between occurring subscripts, so this finite
// set decides the universally quantified condition.
std::vector<Term> dq2_candidates(const Term& st, const Term& bound) {
  std::vector<Term> out;
  auto push = [&out](const Term& t) {
    for (const Term& y : out)
      if (y.same(t)) return;
    out.push_back(t);
  };
  push(bound);
  if (le(omega(), bound)) push(omega());
  for (const Term& s : d_subscripts(st))
    if (le(s, bound)) push(s);
  return out;
}

}  // namespace

ValidityReport check_d(const Term& sigma, const std::vector<Quad>& q, const Term& alpha,
                       int n_levels) {
  if (n_levels < 4) throw error("level count must be at least 4");
  if (!classify(sigma).in_r) throw error("check_d subscript must be recursively regular");

  ValidityReport rep = shape_check(sigma, q, alpha, n_levels);
  const Term rho = rep.subject;

  // Their shape decides whether the Q-part accessors below make sense.
  const bool shape_ok = rep.valid;

  {
    std::vector<Term> support = csupport(rho);
    Term bound = b_above_set(sigma, support);
    bool ok = lt(bound, alpha);
    rep.add("eq:Odmu", ok,
            ok ? "" : "B_{>sigma} = " + print_term(bound) + " not below body");
  }

  if (q.empty() || !shape_ok) return rep;

  for (int i : in_set(rho)) {
    QView view = derive(rho, i);
    const Term kappa = *view.rg;
    const Term st = *view.st;
    const Term pd = view.pd;
    const Term pd_next = (i < n_levels - 1) ? derive(rho, i + 1).pd : pi();

    // D^Q.11
    {
      bool ok = true;
      std::string detail;
      if (!pairs_equal(in_pair(kappa, i), in_pair(pd_next, i))) {
        ok = false;
        detail = "in_i(rg_i) differs from in_i(pd_{i+1})";
      }
      if (!preceq_i(kappa, pd_next, i)) {
        ok = false;
        detail = "rg_i not below pd_{i+1} in the i-chain";
      }
      if (i < n_levels - 1 && pd.same(pd_next)) {
        ok = false;
        detail = "pd_i equals pd_{i+1}";
      }
      if (!preceq_i(pd, kappa, i)) {
        ok = false;
        detail = "pd_i not below rg_i in the i-chain";
      }
      rep.add("DQ.11", ok, detail.empty() ? level_tag(i) : level_tag(i) + ": " + detail);
    }

    // D^Q.12: one of the three branches.
    {
      std::string branch;
      // 12.1
      if (kappa.same(pd)) {
        if (auto alpha1 = locate_alpha1(rho, kappa);
            alpha1 && lt(b_above(kappa, st), alpha1->body()))
          branch = "12.1";
      }
      // 12.2
      if (branch.empty()) {
        auto rg_pd = rg_of(pd, i);
        auto st_pd = st_of(pd, i);
        if (rg_pd && kappa.same(*rg_pd) && st_pd && lt(st, *st_pd)) branch = "12.2";
      }
      // 12.3
      if (branch.empty()) {
        auto rg_pd = rg_of(pd, i);
        if (rg_pd && prec_i(*rg_pd, kappa, i)) {
          bool range_ok = true;
          std::vector<Term> taus;
          taus.push_back(*rg_pd);
          for (const Term& t : pd_chain(*rg_pd, i)) taus.push_back(t);
          for (const Term& tau : taus) {
            if (!prec_i(tau, kappa, i)) continue;
            auto rg_tau = rg_of(tau, i);
            if (!rg_tau || !preceq_i(*rg_tau, kappa, i)) range_ok = false;
          }
          // sigma_1: the i-chain-least term above pd whose i-range is kappa.
          std::optional<Term> sigma1;
          for (const Term& t : pd_chain(pd, i)) {
            if (!prec_i(t, kappa, i)) continue;
            auto rg_t = rg_of(t, i);
            if (rg_t && rg_t->same(kappa)) {
              sigma1 = t;
              break;
            }
          }
          if (range_ok && sigma1) {
            auto st1 = st_of(*sigma1, i);
            if (st1 && lt(st, *st1)) branch = "12.3";
          }
        }
      }
      rep.add("DQ.12", !branch.empty(),
              branch.empty() ? level_tag(i) + ": no branch holds"
                             : level_tag(i) + ": via " + branch);
    }

    // D^Q.2
    {
      bool ok = true;
      std::string detail;
      for (const Term& kap : dq2_candidates(st, kappa)) {
        if (!kset_below(k_at(kap, st), rho)) {
          ok = false;
          detail = "K at " + print_term(kap) + " reaches the diagram";
        }
      }
      rep.add("DQ.2", ok, detail.empty() ? level_tag(i) : level_tag(i) + ": " + detail);
    }
  }

  return rep;
}

namespace {

// Canonical-form invariants that constructors enforce; re-verified here
// so that check_term stands on its own.
bool structurally_canonical(const Term& t) {
  switch (t.kind()) {
    case Kind::Zero:
    case Kind::Omega:
    case Kind::Pi:
      return true;
    case Kind::Sum: {
      const auto& ps = t.parts();
      if (ps.size() < 2) return false;
      for (const Term& p : ps)
        if (!classify(p).in_p || !structurally_canonical(p)) return false;
      for (std::size_t i = 0; i + 1 < ps.size(); ++i)
        if (cmp(ps[i], ps[i + 1]) == Ordering::LT) return false;
      return true;
    }
    case Kind::Phi: {
      const Term& b = t.phi_second();
      if (b.is(Kind::Phi) && cmp(b.phi_first(), t.phi_first()) == Ordering::GT) return false;
      return structurally_canonical(t.phi_first()) && structurally_canonical(b);
    }
    case Kind::RSucc:
      return classify(t.rsucc_base()).in_r && !t.rsucc_base().is(Kind::Pi) &&
             structurally_canonical(t.rsucc_base());
    case Kind::D: {
      if (!classify(t.sub()).in_r) return false;
      if (!structurally_canonical(t.sub()) || !structurally_canonical(t.body())) return false;
      for (const Quad& q : t.quads()) {
        if (q.level < 2) return false;
        if (!structurally_canonical(q.nu) || !structurally_canonical(q.kappa) ||
            !structurally_canonical(q.tau))
          return false;
      }
      return true;
    }
  }
  return false;
}

}  // namespace

ValidityReport check_term(const Term& t, int n_levels) {
  if (n_levels < 4) throw error("level count must be at least 4");
  ValidityReport rep;
  rep.subject = t;
  rep.add("subterms", structurally_canonical(t), "canonical form");

  // Validate D-subterms bottom-up; report the subject's own conditions
  // in full and summarize inner failures.
  std::vector<Term> ds;
  for (const Term& s : subterm_closure(t))
    if (s.is(Kind::D)) ds.push_back(s);
  // subterm_closure lists enclosing terms before their components;
  // reverse for bottom-up order.
  for (auto it = ds.rbegin(); it != ds.rend(); ++it) {
    const Term& d = *it;
    ValidityReport inner = check_d(d.sub(), d.quads(), d.body(), n_levels);
    if (d.same(t)) {
      rep.merge(inner);
    } else if (!inner.valid) {
      std::string why;
      for (const auto& c : inner.checks)
        if (!c.passed) {
          why = c.label + (c.detail.empty() ? "" : " (" + c.detail + ")");
          break;
        }
      rep.add("subterms", false, print_term(d) + " fails " + why);
    }
  }
  return rep;
}

Term gamma_bound(const Term& alpha, const Term& beta, const Term& sigma) {
  if (!classify(sigma).in_r || !lt(sigma, pi()))
    throw error("gamma_bound needs a regular subscript below pi");
  // Hypothesis: B_tau(beta) <= B_tau(alpha) for every tau below pi,
  // checked over the finite subscript support of beta.
  for (const Term& tau : d_subscripts(beta)) {
    if (!lt(tau, pi())) continue;
    if (gt(b_at(tau, beta), b_at(tau, alpha))) throw error("OdbndB hypothesis violated");
  }
  Term head = max_term(b_at(pi(), beta), b_above_set(sigma, {sigma, alpha}));
  Term gamma = mk_sum({head, mk_phi(zero(), beta)});
  Term gamma_k = mk_sum({gamma, k_max(sigma, alpha)});
  if (!lt(b_above_set(sigma, {sigma, gamma, gamma_k}), gamma))
    throw error("gamma_bound conclusion failed");
  return gamma;
}

}  // namespace od
