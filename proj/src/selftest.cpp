#include "od/selftest.hpp"

#include <map>
#include <set>
#include <string>

#include "od/enumerate.hpp"
#include "od/ksets.hpp"
#include "od/order.hpp"
#include "od/qpart.hpp"
#include "od/textio.hpp"
#include "od/validity.hpp"

namespace od {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ull;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

Term numeral(int k) {
  std::vector<Term> parts(static_cast<std::size_t>(k), mk_phi(zero(), zero()));
  return mk_sum(parts);
}

SuiteResult pass(std::string name, std::string detail) {
  return {std::move(name), true, std::move(detail)};
}

SuiteResult fail(std::string name, std::string detail) {
  return {std::move(name), false, std::move(detail)};
}

}  // namespace

// ---------------------------------------------------------------------------
// Spine generator.
//
// Grows one rope by repeatedly synthesizing a collapse over the current
// descriptor and then extending the rope, with or without a knot at the
// new junction. Bodies are escalating omega-powers of pure {0,+,phi}
// terms, so every coefficient-set bound reduces to comparisons between
// those towers; stepping values follow strictly decreasing ladders.
// ---------------------------------------------------------------------------

namespace {

struct SpineState {
  int n_levels;
  std::vector<Term> sigmas{pi()};
  std::vector<int> knots;
  std::vector<int> indices;
  std::vector<Term> bodies{zero()};  // bodies[k] = body of sigma_k
  // Spine terms are single shared nodes, so node identity keys suffice.
  std::map<const TermNode*, int> st_top_value;
  std::map<std::pair<const TermNode*, int>, int> alpha_countdown;
  int root_ladder = 300;
};

RopeDescriptor current_rope(const SpineState& s) {
  return {s.n_levels, s.sigmas, s.knots, s.indices};
}

}  // namespace

std::vector<SpineStep> gen_spine(std::uint64_t seed, int n_levels, int steps) {
  std::uint64_t state = seed;
  SpineState s;
  s.n_levels = n_levels;
  std::vector<SpineStep> out;
  for (int step = 0; step < steps; ++step) {
    RopeDescriptor desc = current_rope(s);
    SynthInputs inputs;

    // st_{N-1}: below the ladder value of pd_{N-1}, fresh at the root.
    Term pd_top = pd_from_rope(desc, n_levels - 1);
    int st_val;
    if (pd_top.is(Kind::Pi)) {
      s.root_ladder -= 1 + static_cast<int>(splitmix64(state) % 3);
      st_val = s.root_ladder;
    } else {
      st_val = s.st_top_value.at(pd_top.raw()) - 1 - static_cast<int>(splitmix64(state) % 3);
    }
    if (st_val < 1) throw error("spine ladder exhausted");
    inputs.st_top = numeral(st_val);

    // Lower stepping values: body of the origin plus a decreasing tail.
    for (int i : in_from_rope(desc)) {
      if (i == n_levels - 1) continue;
      Term kappa = rg_from_rope(desc, i);
      auto key = std::make_pair(kappa.raw(), i);
      auto it = s.alpha_countdown.find(key);
      int c = (it == s.alpha_countdown.end()) ? 60 : it->second;
      c -= 1 + static_cast<int>(splitmix64(state) % 2);
      if (c < 1) throw error("alpha ladder exhausted");
      s.alpha_countdown[key] = c;
      inputs.st_lower[i] = mk_sum({kappa.body(), numeral(c)});
    }

    // Body: an omega power above everything referenced so far.
    inputs.body =
        mk_phi(zero(), mk_sum({s.bodies.back(), numeral(st_val), mk_phi(zero(), zero())}));

    auto [rho, report] = synth(desc, inputs);
    out.push_back({desc, inputs, rho});
    if (!report.valid) return out;  // caller inspects the last step

    // Extend the rope: with a knot at the new junction or without.
    const int n = desc.spine_len();
    bool add_knot = n >= 1 && (splitmix64(state) % 2 == 0);
    if (add_knot) {
      int idx = 2 + static_cast<int>(splitmix64(state) %
                                     static_cast<std::uint64_t>(n_levels - 3));
      s.indices.push_back(idx);
      s.knots.push_back(n);
    } else {
      if (s.knots.empty())
        s.knots.push_back(0);
      else
        s.knots.back() = n;
    }
    s.sigmas.push_back(rho);
    s.bodies.push_back(inputs.body);
    s.st_top_value[rho.raw()] = st_val;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Suites.
// ---------------------------------------------------------------------------

SuiteResult suite_order_axioms(int max_size, int n_levels, std::uint64_t seed) {
  EnumConfig cfg;
  cfg.max_size = max_size;
  cfg.n_levels = n_levels;
  EnumResult res = enumerate_valid(cfg);
  ScanReport scan = order_axiom_scan(res.terms, seed);
  std::string detail = std::to_string(res.terms.size()) + " terms, " +
                       std::to_string(scan.pairs) + " pairs, " + std::to_string(scan.triples) +
                       " triples";
  if (!scan.passed) return fail("order-axioms", scan.counterexample);
  return pass("order-axioms", detail);
}

namespace {

// All {0,+,phi} terms within a node-count budget, by iterated closure.
std::vector<Term> fragment_terms(std::size_t size_cap) {
  std::vector<Term> terms{zero()};
  std::set<std::string> seen{print_term(zero())};
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Term> snapshot = terms;
    auto add = [&](const Term& t) {
      if (term_size(t) > size_cap) return;
      std::string p = print_term(t);
      if (seen.count(p)) return;
      seen.insert(p);
      terms.push_back(t);
      grew = true;
    };
    for (const Term& a : snapshot) {
      for (const Term& b : snapshot) {
        Term f = mk_phi(a, b);
        if (f.is(Kind::Phi) && f.phi_first().same(a) && f.phi_second().same(b)) add(f);
        if (classify(a).in_p && classify(b).in_p) add(mk_sum({a, b}));
        if (a.is(Kind::Sum) && classify(b).in_p) {
          std::vector<Term> parts = a.parts();
          parts.push_back(b);
          add(mk_sum(parts));
        }
      }
    }
  }
  return terms;
}

}  // namespace

SuiteResult suite_fragment_oracle(int max_size) {
  std::vector<Term> terms = fragment_terms(static_cast<std::size_t>(2 * max_size - 1));
  long checked = 0;
  for (const Term& a : terms)
    for (const Term& b : terms) {
      if (cmp(a, b) != oracle_veblen_cmp(a, b))
        return fail("fragment-oracle",
                    "disagreement on " + print_term(a) + " / " + print_term(b));
      ++checked;
    }
  return pass("fragment-oracle",
              std::to_string(terms.size()) + " terms, " + std::to_string(checked) + " pairs");
}

SuiteResult suite_collapse_bound(int max_size, int n_levels) {
  EnumConfig cfg;
  cfg.max_size = max_size;
  cfg.n_levels = n_levels;
  EnumResult res = enumerate_valid(cfg);
  long checked = 0;
  for (const Term& t : res.terms) {
    if (!t.is(Kind::D)) continue;
    ++checked;
    if (cmp(t, t.sub()) != Ordering::LT)
      return fail("collapse-bound", print_term(t) + " not below its subscript");
  }
  return pass("collapse-bound", std::to_string(checked) + " collapses");
}

SuiteResult suite_rgbnd(std::uint64_t seed, int count) {
  EnumConfig cfg;
  cfg.max_size = 5;
  EnumResult res = enumerate_valid(cfg);
  std::vector<Term> regulars;
  for (const Term& t : res.terms)
    if (classify(t).in_r) regulars.push_back(t);
  std::uint64_t state = seed;
  int accepted = 0;
  long attempts = 0;
  while (accepted < count) {
    if (++attempts > 200000)
      return fail("rgbnd", "generator exhausted after " + std::to_string(accepted) + " pairs");
    const Term& kappa = regulars[splitmix64(state) % regulars.size()];
    Term tau;
    if (splitmix64(state) % 2 == 0 && !kappa.is(Kind::Pi)) {
      tau = mk_rsucc(kappa);
    } else {
      tau = regulars[splitmix64(state) % regulars.size()];
      if (cmp(kappa, tau) != Ordering::LT) continue;
    }
    const Term& a0 = res.terms[splitmix64(state) % res.terms.size()];
    const Term& a1 = res.terms[splitmix64(state) % res.terms.size()];
    if (cmp(a0, a1) != Ordering::LT) continue;
    if (!lt(b_above(kappa, a0), a0) || !lt(b_above(kappa, a1), a1)) continue;
    // The subscript's own collapse history must stay below the bodies;
    // implicit in the source construction, explicit here.
    if (!lt(b_above_set(tau, {tau}), a0)) continue;
    Term d0 = mk_d(tau, {}, a0);
    Term d1 = mk_d(tau, {}, a1);
    if (!check_term(d0, cfg.n_levels).valid || !check_term(d1, cfg.n_levels).valid)
      return fail("rgbnd", "collapse not valid for " + print_term(d0) + " / " + print_term(d1));
    if (cmp(d0, d1) != Ordering::LT)
      return fail("rgbnd", "monotonicity broken: " + print_term(d0) + " vs " + print_term(d1));
    ++accepted;
  }
  return pass("rgbnd", std::to_string(accepted) + " pairs");
}

SuiteResult suite_odbnd(std::uint64_t seed, int count) {
  EnumConfig cfg;
  cfg.max_size = 5;
  EnumResult res = enumerate_valid(cfg);
  std::vector<Term> regulars;
  for (const Term& t : res.terms)
    if (classify(t).in_r && lt(t, pi())) regulars.push_back(t);
  std::uint64_t state = seed;
  int accepted = 0;
  long attempts = 0;
  while (accepted < count) {
    if (++attempts > 200000)
      return fail("odbnd", "generator exhausted after " + std::to_string(accepted) + " triples");
    const Term& sigma = regulars[splitmix64(state) % regulars.size()];
    const Term& alpha = res.terms[splitmix64(state) % res.terms.size()];
    const Term& beta = res.terms[splitmix64(state) % res.terms.size()];
    Term gamma;
    try {
      gamma = gamma_bound(alpha, beta, sigma);
    } catch (const error&) {
      continue;  // hypothesis failed; gamma_bound re-checks its own conclusion
    }
    Term gamma_k = mk_sum({gamma, k_max(sigma, alpha)});
    if (!lt(b_above_set(sigma, {sigma, gamma, gamma_k}), gamma))
      return fail("odbnd", "bound broken for gamma = " + print_term(gamma));
    if (!check_term(mk_d(sigma, {}, gamma), cfg.n_levels).valid ||
        !check_term(mk_d(sigma, {}, gamma_k), cfg.n_levels).valid)
      return fail("odbnd", "derived collapse not valid for gamma = " + print_term(gamma));
    ++accepted;
  }
  return pass("odbnd", std::to_string(accepted) + " triples");
}

SuiteResult suite_rope_laws(std::uint64_t seed, int count) {
  std::uint64_t state = seed;
  int descriptors = 0;
  int spine_idx = 0;
  while (descriptors < count) {
    int n_levels = 4 + static_cast<int>(splitmix64(state) % 2);
    int steps = 6 + static_cast<int>(splitmix64(state) % 9);
    std::vector<SpineStep> spine = gen_spine(splitmix64(state), n_levels, steps);
    ++spine_idx;
    for (const SpineStep& st : spine) {
      ValidityReport built = check_term(st.rho, st.desc.n_levels);
      if (!built.valid) {
        std::string why;
        for (const auto& c : built.checks)
          if (!c.passed) {
            why = c.label + " " + c.detail;
            break;
          }
        return fail("rope-laws", "spine " + std::to_string(spine_idx) + ": " +
                                     print_term(st.rho) + " invalid: " + why);
      }
      ValidityReport laws = verify_rope_laws(st.desc);
      if (!laws.valid) {
        std::string why;
        for (const auto& c : laws.checks)
          if (!c.passed) {
            why = c.label + " " + c.detail;
            break;
          }
        return fail("rope-laws", "spine " + std::to_string(spine_idx) + ": " + why);
      }
      ++descriptors;
    }
  }
  return pass("rope-laws", std::to_string(descriptors) + " descriptors");
}

SuiteResult suite_worked_example() {
  // The three-rule figure: sigma over the root, tau over [pi, sigma],
  // then rho over [pi, sigma, tau] with a knot of index 2.
  SynthInputs in_sigma;
  in_sigma.st_top = numeral(10);
  in_sigma.body = mk_phi(zero(), numeral(11));
  auto [sigma, rep_sigma] = synth({4, {pi()}, {}, {}}, in_sigma);
  if (!rep_sigma.valid) return fail("worked-example", "sigma invalid");

  SynthInputs in_tau;
  in_tau.st_top = numeral(9);
  in_tau.body = mk_phi(zero(), mk_sum({in_sigma.body, numeral(10)}));
  auto [tau, rep_tau] = synth({4, {pi(), sigma}, {0}, {}}, in_tau);
  if (!rep_tau.valid) return fail("worked-example", "tau invalid");

  RopeDescriptor fig{4, {pi(), sigma, tau}, {0, 1}, {2}};
  SynthInputs in_rho;
  in_rho.st_top = numeral(8);
  in_rho.st_lower[2] = mk_sum({tau.body(), numeral(20)});
  in_rho.body = mk_phi(zero(), mk_sum({in_tau.body, numeral(9)}));
  auto [rho, rep_rho] = synth(fig, in_rho);
  if (!rep_rho.valid) return fail("worked-example", "rho invalid");

  std::set<int> expected_in{2, 3};
  if (in_set(rho) != expected_in) return fail("worked-example", "In(rho) != {2,3}");
  if (!derive(rho, 3).pd.same(sigma)) return fail("worked-example", "pd_3(rho) != sigma");
  if (!derive(rho, 2).pd.same(tau)) return fail("worked-example", "pd_2(rho) != tau");
  if (!derive(rho, 2).rg || !derive(rho, 2).rg->same(tau))
    return fail("worked-example", "rg_2(rho) != tau");
  return pass("worked-example", "In={2,3}, pd_3=sigma, rg_2=pd_2=tau");
}

SuiteResult suite_inset_equivalence(std::uint64_t seed, int count) {
  std::uint64_t state = seed;
  for (int run = 0; run < count; ++run) {
    int n_levels = 4 + static_cast<int>(splitmix64(state) % 5);  // 4..8
    int l = static_cast<int>(splitmix64(state) % 9);             // 0..8
    std::vector<int> indices;
    for (int m = 0; m < l; ++m)
      indices.push_back(2 + static_cast<int>(splitmix64(state) %
                                             static_cast<std::uint64_t>(n_levels - 3)));
    std::vector<int> knots;
    for (int m = 0; m <= l; ++m) knots.push_back(m);
    RopeDescriptor desc{n_levels, {}, knots, indices};
    std::set<int> via_rope = in_from_rope(desc);
    // Decreasing-first-occurrence description.
    std::set<int> via_desc{n_levels - 1};
    for (int m = 0; m < l; ++m) {
      bool strictly_above = true;
      for (int p = 0; p < m; ++p)
        if (indices[p] <= indices[m]) strictly_above = false;
      if (strictly_above) via_desc.insert(indices[m]);
    }
    if (via_rope != via_desc) {
      std::string seq;
      for (int i : indices) seq += std::to_string(i) + ",";
      return fail("inset-equivalence", "indices " + seq);
    }
  }
  return pass("inset-equivalence", std::to_string(count) + " sequences");
}

SuiteResult suite_st_decrease(std::uint64_t seed, int count) {
  std::uint64_t state = seed;
  long steps_checked = 0;
  int spines = 0;
  while (steps_checked < count) {
    int n_levels = 4 + static_cast<int>(splitmix64(state) % 2);
    std::vector<SpineStep> spine = gen_spine(splitmix64(state), n_levels, 10);
    ++spines;
    for (const SpineStep& st : spine) {
      Term cur = st.rho;
      while (cur.is(Kind::D) && !cur.quads().empty()) {
        Term next = derive(cur, n_levels - 1).pd;
        auto st_cur = in_pair(cur, n_levels - 1);
        auto st_next = in_pair(next, n_levels - 1);
        if (!st_cur) return fail("st-decrease", "missing st at " + print_term(cur));
        if (st_next) {
          if (cmp(st_cur->first, st_next->first) != Ordering::LT)
            return fail("st-decrease", "no decrease from " + print_term(next) + " to " +
                                           print_term(cur));
          ++steps_checked;
        }
        cur = next;
      }
    }
  }
  return pass("st-decrease",
              std::to_string(steps_checked) + " chain steps over " + std::to_string(spines) +
                  " spines");
}

SuiteResult suite_roundtrip(int max_size, int n_levels, int fuzz_count, std::uint64_t seed) {
  EnumConfig cfg;
  cfg.max_size = max_size;
  cfg.n_levels = n_levels;
  EnumResult res = enumerate_valid(cfg);
  for (const Term& t : res.terms) {
    std::string spelling = print_term(t);
    Term back;
    try {
      back = parse_term({spelling});
    } catch (const error& e) {
      return fail("round-trip", spelling + " failed to parse back: " + e.what());
    }
    if (!back.same(t)) return fail("round-trip", spelling + " changed under round trip");
  }
  // Fuzzing: grammar-flavored and raw byte strings must never crash.
  std::uint64_t state = seed;
  const std::string alphabet = "0Wpfd[](),;+^1234567890 \t\nxyz!@";
  for (int run = 0; run < fuzz_count; ++run) {
    std::size_t len = splitmix64(state) % 40;
    std::string input;
    for (std::size_t i = 0; i < len; ++i) {
      if (splitmix64(state) % 8 == 0)
        input += static_cast<char>(splitmix64(state) % 256);
      else
        input += alphabet[splitmix64(state) % alphabet.size()];
    }
    try {
      (void)parse_term({input});
    } catch (const error&) {
      // positioned rejection is the expected outcome
    }
  }
  return pass("round-trip", std::to_string(res.terms.size()) + " spellings, " +
                                std::to_string(fuzz_count) + " fuzz inputs");
}

SuiteResult suite_prec_containment(int max_size, int n_levels) {
  EnumConfig cfg;
  cfg.max_size = max_size;
  cfg.n_levels = n_levels;
  EnumResult res = enumerate_valid(cfg);
  long checked = 0;
  for (const Term& t : res.terms) {
    if (!t.is(Kind::D) || t.quads().empty()) continue;
    for (int i = 2; i <= n_levels - 2; ++i) {
      for (const Term& above : pd_chain(t, i + 1)) {
        ++checked;
        if (!prec_i(t, above, i))
          return fail("prec-containment",
                      print_term(t) + " reaches " + print_term(above) + " at " +
                          std::to_string(i + 1) + " but not at " + std::to_string(i));
      }
    }
  }
  return pass("prec-containment", std::to_string(checked) + " links");
}

std::vector<SuiteResult> run_selftest(std::uint64_t seed, int n_levels) {
  std::vector<SuiteResult> out;
  out.push_back(suite_order_axioms(4, n_levels, seed));
  out.push_back(suite_fragment_oracle(5));
  out.push_back(suite_collapse_bound(4, n_levels));
  out.push_back(suite_rgbnd(seed + 1, 120));
  out.push_back(suite_odbnd(seed + 2, 120));
  out.push_back(suite_rope_laws(seed + 3, 40));
  out.push_back(suite_worked_example());
  out.push_back(suite_inset_equivalence(seed + 4, 2000));
  out.push_back(suite_st_decrease(seed + 5, 40));
  out.push_back(suite_roundtrip(4, n_levels, 10000, seed + 6));
  out.push_back(suite_prec_containment(4, n_levels));
  return out;
}

}  // namespace od
