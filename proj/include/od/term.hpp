#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace od {

class error : public std::runtime_error {
 public:
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

enum class Kind { Zero, Omega, Pi, Sum, Phi, RSucc, D };

struct TermNode;

// An ordinal diagram. Immutable value; cheap to copy and share.
class Term {
 public:
  Term() = default;
  explicit Term(std::shared_ptr<const TermNode> node) : node_(std::move(node)) {}

  bool empty() const { return node_ == nullptr; }
  Kind kind() const;
  bool is(Kind k) const { return !empty() && kind() == k; }

  // Structural identity of canonical forms.
  bool same(const Term& other) const;

  const std::vector<Term>& parts() const;       // Sum
  const Term& phi_first() const;                // Phi
  const Term& phi_second() const;               // Phi
  const Term& rsucc_base() const;               // RSucc
  const Term& sub() const;                      // D
  const Term& body() const;                     // D
  const std::vector<struct Quad>& quads() const;  // D

  const TermNode* raw() const { return node_.get(); }

 private:
  std::shared_ptr<const TermNode> node_;
};

// One quadruple nu kappa tau j of a Q part.
struct Quad {
  Term nu;
  Term kappa;
  Term tau;
  int level = 0;  // the j component
};

struct TermNode {
  Kind kind = Kind::Zero;
  std::vector<Term> parts;  // Sum
  Term a, b;                // Phi
  Term base;                // RSucc
  Term sub, body;           // D
  std::vector<Quad> quads;  // D
};

struct ClassFlags {
  bool in_p = false;
  bool in_sc = false;
  bool in_r = false;
};

Term zero();
Term omega();
Term pi();

// Canonicalizing constructors. They are the only way to build composite
// terms, so every Term in the system is canonical by construction.
Term mk_sum(std::vector<Term> parts);
Term mk_phi(const Term& a, const Term& b);
Term mk_rsucc(const Term& base);
Term mk_d(const Term& sub, std::vector<Quad> q, const Term& body);

ClassFlags classify(const Term& t);

// Body of a collapse; "no body" error on anything else.
Term body(const Term& t);

// c(rho) = {tau, alpha} union the terms of the Q part, deduplicated.
std::vector<Term> csupport(const Term& t);

// The chain t, sub(t), sub(sub(t)), ... down to the first non-D term.
std::vector<Term> subscript_path(const Term& t);

// Node count; strictly decreases into subterms.
std::size_t term_size(const Term& t);

// All subterms (including t itself and Q-part components), deduplicated.
std::vector<Term> subterm_closure(const Term& t);

// Subscripts of D-subterms of t, deduplicated.
std::vector<Term> d_subscripts(const Term& t);

bool quads_same(const std::vector<Quad>& a, const std::vector<Quad>& b);

}  // namespace od
