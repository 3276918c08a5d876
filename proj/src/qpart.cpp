#include "od/qpart.hpp"

#include <string>

#include "od/ksets.hpp"
#include "od/order.hpp"
#include "od/textio.hpp"

namespace od {

namespace {

bool in_dq(const Term& t) { return t.is(Kind::D) && !t.quads().empty(); }

}  // namespace

QView derive(const Term& rho, int j) {
  if (!in_dq(rho)) throw error("not in D^Q");
  const auto& q = rho.quads();
  if (j < 2) throw error("derive level out of range");
  // m = min{m <= l : j <= j_m}
  std::size_t m = 0;
  while (m < q.size() && q[m].level < j) ++m;
  if (m == q.size()) throw error("derive level out of range");
  QView view;
  view.pd = q[m].tau;
  if (q[m].level == j) {
    view.st = q[m].nu;
    view.rg = q[m].kappa;
    view.defined_in = true;
    return view;
  }
  view.defined_in = false;
  // in_j is inherited from pd_j when that carries a Q part.
  if (in_dq(q[m].tau)) {
    QView inner = derive(q[m].tau, j);
    view.st = inner.st;
    view.rg = inner.rg;
  }
  return view;
}

std::set<int> in_set(const Term& rho) {
  if (!rho.is(Kind::D)) throw error("in_set needs a collapse");
  std::set<int> out;
  for (const Quad& q : rho.quads()) out.insert(q.level);
  return out;
}

std::optional<std::pair<Term, Term>> in_pair(const Term& t, int j) {
  if (!in_dq(t)) return std::nullopt;
  if (j < 2) return std::nullopt;
  bool covered = false;
  for (const Quad& q : t.quads())
    if (q.level >= j) covered = true;
  if (!covered) return std::nullopt;
  QView v = derive(t, j);
  if (!v.st) return std::nullopt;
  return std::make_pair(*v.st, *v.rg);
}

ValidityReport shape_check(const Term& sigma, const std::vector<Quad>& q, const Term& alpha,
                           int n_levels) {
  if (n_levels < 4) throw error("level count must be at least 4");
  if (sigma.empty() || alpha.empty()) throw error("shape_check: empty term slot");
  if (!classify(sigma).in_r) throw error("shape_check subscript must be recursively regular");
  for (const Quad& quad : q)
    if (quad.nu.empty() || quad.kappa.empty() || quad.tau.empty())
      throw error("shape_check: empty term slot in quadruple");

  ValidityReport rep;
  rep.subject = mk_d(sigma, q, alpha);
  if (q.empty()) {
    rep.add("shape.1", true, "empty Q part");
    return rep;
  }
  const std::size_t l = q.size() - 1;

  // shape.1: 2 <= j_0 < ... < j_l = N-1.
  {
    bool ok = q[0].level >= 2;
    for (std::size_t m = 0; m + 1 < q.size(); ++m)
      if (q[m].level >= q[m + 1].level) ok = false;
    std::string detail;
    if (q[l].level != n_levels - 1) {
      ok = false;
      detail = "j_l must be N-1";
    }
    rep.add("shape.1", ok, detail);
  }

  // shape.2: kappa_l = pi, kappa_m in R below pi, sigma reachable.
  {
    bool ok = q[l].kappa.is(Kind::Pi);
    std::string detail = ok ? "" : "kappa_l must be pi";
    for (std::size_t m = 0; m < q.size(); ++m) {
      const Term& k = q[m].kappa;
      if (m < l && !(classify(k).in_r && lt(k, pi()))) {
        ok = false;
        detail = "kappa_" + std::to_string(m) + " not a regular below pi";
      }
      if (!preceq(sigma, k)) {
        ok = false;
        detail = "sigma not reachable from kappa_" + std::to_string(m);
      }
    }
    rep.add("shape.2", ok, detail);
  }

  // shape.3: nu bounds, and everything in q above pi equals nu_l.
  {
    bool ok = true;
    std::string detail;
    if (sigma.is(Kind::Pi) && gt(q[l].nu, alpha)) {
      ok = false;
      detail = "nu_l must not exceed the body when sigma is pi";
    }
    for (std::size_t m = 0; m < l; ++m) {
      if (q[m].kappa.is(Kind::Pi) || !classify(q[m].kappa).in_r) continue;  // shape.2's problem
      if (ge(q[m].nu, mk_rsucc(q[m].kappa))) {
        ok = false;
        detail = "nu_" + std::to_string(m) + " must be below kappa^+";
      }
    }
    for (const Quad& quad : q)
      for (const Term* beta : {&quad.nu, &quad.kappa, &quad.tau})
        if (gt(*beta, pi()) && !beta->same(q[l].nu)) {
          ok = false;
          detail = "element above pi must equal nu_l";
        }
    rep.add("shape.3", ok, detail);
  }

  // shape.4: tau_0 = sigma, tau_m in {pi} + D^Q with sigma reachable,
  // and tau_l = pi only under sigma = pi.
  {
    bool ok = q[0].tau.same(sigma);
    std::string detail = ok ? "" : "tau_0 must equal the subscript";
    for (std::size_t m = 0; m < q.size(); ++m) {
      const Term& t = q[m].tau;
      if (!(t.is(Kind::Pi) || in_dq(t))) {
        ok = false;
        detail = "tau_" + std::to_string(m) + " must be pi or carry a Q part";
      }
      if (!preceq(sigma, t)) {
        ok = false;
        detail = "sigma not reachable from tau_" + std::to_string(m);
      }
    }
    if (q[l].tau.is(Kind::Pi) && !sigma.is(Kind::Pi)) {
      ok = false;
      detail = "tau_l = pi forces sigma = pi";
    }
    rep.add("shape.4", ok, detail);
  }

  return rep;
}

}  // namespace od
