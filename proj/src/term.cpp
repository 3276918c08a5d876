#include "od/term.hpp"

#include <algorithm>

#include "od/order.hpp"

namespace od {

namespace {

Term make(TermNode node) { return Term(std::make_shared<const TermNode>(std::move(node))); }

const Term& require(const Term& t, const char* what) {
  if (t.empty()) throw error(std::string("null term in ") + what);
  return t;
}

}  // namespace

Kind Term::kind() const {
  if (!node_) throw error("null term");
  return node_->kind;
}

const std::vector<Term>& Term::parts() const {
  if (!is(Kind::Sum)) throw error("not a sum");
  return node_->parts;
}

const Term& Term::phi_first() const {
  if (!is(Kind::Phi)) throw error("not a phi term");
  return node_->a;
}

const Term& Term::phi_second() const {
  if (!is(Kind::Phi)) throw error("not a phi term");
  return node_->b;
}

const Term& Term::rsucc_base() const {
  if (!is(Kind::RSucc)) throw error("not a successor term");
  return node_->base;
}

const Term& Term::sub() const {
  if (!is(Kind::D)) throw error("not a collapse");
  return node_->sub;
}

const Term& Term::body() const {
  if (!is(Kind::D)) throw error("not a collapse");
  return node_->body;
}

const std::vector<Quad>& Term::quads() const {
  if (!is(Kind::D)) throw error("not a collapse");
  return node_->quads;
}

bool quads_same(const std::vector<Quad>& a, const std::vector<Quad>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].level != b[i].level || !a[i].nu.same(b[i].nu) || !a[i].kappa.same(b[i].kappa) ||
        !a[i].tau.same(b[i].tau))
      return false;
  }
  return true;
}

bool Term::same(const Term& other) const {
  if (node_ == other.node_) return true;
  if (!node_ || !other.node_) return false;
  if (node_->kind != other.node_->kind) return false;
  switch (node_->kind) {
    case Kind::Zero:
    case Kind::Omega:
    case Kind::Pi:
      return true;
    case Kind::Sum: {
      if (node_->parts.size() != other.node_->parts.size()) return false;
      for (std::size_t i = 0; i < node_->parts.size(); ++i)
        if (!node_->parts[i].same(other.node_->parts[i])) return false;
      return true;
    }
    case Kind::Phi:
      return node_->a.same(other.node_->a) && node_->b.same(other.node_->b);
    case Kind::RSucc:
      return node_->base.same(other.node_->base);
    case Kind::D:
      return node_->sub.same(other.node_->sub) && node_->body.same(other.node_->body) &&
             quads_same(node_->quads, other.node_->quads);
  }
  return false;
}

namespace {

Term make_atom(Kind k) {
  TermNode node;
  node.kind = k;
  return make(std::move(node));
}

}  // namespace

Term zero() {
  static const Term t = make_atom(Kind::Zero);
  return t;
}

Term omega() {
  static const Term t = make_atom(Kind::Omega);
  return t;
}

Term pi() {
  static const Term t = make_atom(Kind::Pi);
  return t;
}

Term mk_sum(std::vector<Term> parts) {
  std::vector<Term> flat;
  for (const Term& p : parts) {
    require(p, "mk_sum");
    if (p.is(Kind::Zero)) continue;
    if (p.is(Kind::Sum)) {
      for (const Term& q : p.parts()) flat.push_back(q);
    } else {
      flat.push_back(p);
    }
  }
  if (flat.empty()) return zero();
  std::stable_sort(flat.begin(), flat.end(),
                   [](const Term& x, const Term& y) { return cmp(x, y) == Ordering::GT; });
  if (flat.size() == 1) return flat[0];
  TermNode node;
  node.kind = Kind::Sum;
  node.parts = std::move(flat);
  return make(std::move(node));
}

Term mk_phi(const Term& a, const Term& b) {
  require(a, "mk_phi");
  require(b, "mk_phi");
  // phi_a fixes phi-terms with a greater first argument.
  if (b.is(Kind::Phi) && cmp(b.phi_first(), a) == Ordering::GT) return b;
  TermNode node;
  node.kind = Kind::Phi;
  node.a = a;
  node.b = b;
  return make(std::move(node));
}

Term mk_rsucc(const Term& base) {
  require(base, "mk_rsucc");
  if (!classify(base).in_r) throw error("successor base must be recursively regular");
  if (base.is(Kind::Pi)) throw error("successor of the top regular is not a term");
  TermNode node;
  node.kind = Kind::RSucc;
  node.base = base;
  return make(std::move(node));
}

Term mk_d(const Term& sub, std::vector<Quad> q, const Term& body) {
  require(sub, "mk_d");
  require(body, "mk_d");
  if (!classify(sub).in_r) throw error("collapse subscript must be recursively regular");
  for (const Quad& quad : q) {
    require(quad.nu, "mk_d quad");
    require(quad.kappa, "mk_d quad");
    require(quad.tau, "mk_d quad");
    if (quad.level < 2) throw error("quad level must be at least 2");
  }
  TermNode node;
  node.kind = Kind::D;
  node.sub = sub;
  node.body = body;
  node.quads = std::move(q);
  return make(std::move(node));
}

ClassFlags classify(const Term& t) {
  require(t, "classify");
  switch (t.kind()) {
    case Kind::Zero:
    case Kind::Sum:
      return {};
    case Kind::Phi:
      return {.in_p = true};
    case Kind::Omega:
    case Kind::Pi:
    case Kind::RSucc:
    case Kind::D:
      return {.in_p = true, .in_sc = true, .in_r = true};
  }
  return {};
}

Term body(const Term& t) {
  if (!t.is(Kind::D)) throw error("no body");
  return t.body();
}

std::vector<Term> csupport(const Term& t) {
  if (!t.is(Kind::D)) throw error("csupport needs a collapse");
  std::vector<Term> out;
  auto push = [&out](const Term& x) {
    for (const Term& y : out)
      if (y.same(x)) return;
    out.push_back(x);
  };
  push(t.sub());
  push(t.body());
  for (const Quad& q : t.quads()) {
    push(q.nu);
    push(q.kappa);
    push(q.tau);
  }
  return out;
}

std::vector<Term> subscript_path(const Term& t) {
  if (!t.is(Kind::D)) throw error("subscript path needs a collapse");
  std::vector<Term> out;
  Term cur = t;
  out.push_back(cur);
  while (cur.is(Kind::D)) {
    cur = cur.sub();
    out.push_back(cur);
  }
  return out;
}

std::size_t term_size(const Term& t) {
  require(t, "term_size");
  switch (t.kind()) {
    case Kind::Zero:
    case Kind::Omega:
    case Kind::Pi:
      return 1;
    case Kind::Sum: {
      std::size_t n = 1;
      for (const Term& p : t.parts()) n += term_size(p);
      return n;
    }
    case Kind::Phi:
      return 1 + term_size(t.phi_first()) + term_size(t.phi_second());
    case Kind::RSucc:
      return 1 + term_size(t.rsucc_base());
    case Kind::D: {
      std::size_t n = 1 + term_size(t.sub()) + term_size(t.body());
      for (const Quad& q : t.quads())
        n += term_size(q.nu) + term_size(q.kappa) + term_size(q.tau);
      return n;
    }
  }
  return 1;
}

namespace {

void collect(const Term& t, std::vector<Term>& out) {
  for (const Term& y : out)
    if (y.same(t)) return;
  out.push_back(t);
  switch (t.kind()) {
    case Kind::Zero:
    case Kind::Omega:
    case Kind::Pi:
      return;
    case Kind::Sum:
      for (const Term& p : t.parts()) collect(p, out);
      return;
    case Kind::Phi:
      collect(t.phi_first(), out);
      collect(t.phi_second(), out);
      return;
    case Kind::RSucc:
      collect(t.rsucc_base(), out);
      return;
    case Kind::D:
      collect(t.sub(), out);
      collect(t.body(), out);
      for (const Quad& q : t.quads()) {
        collect(q.nu, out);
        collect(q.kappa, out);
        collect(q.tau, out);
      }
      return;
  }
}

}  // namespace

std::vector<Term> subterm_closure(const Term& t) {
  std::vector<Term> out;
  collect(t, out);
  return out;
}

std::vector<Term> d_subscripts(const Term& t) {
  std::vector<Term> out;
  for (const Term& s : subterm_closure(t)) {
    if (!s.is(Kind::D)) continue;
    bool seen = false;
    for (const Term& y : out)
      if (y.same(s.sub())) {
        seen = true;
        break;
      }
    if (!seen) out.push_back(s.sub());
  }
  return out;
}

}  // namespace od
