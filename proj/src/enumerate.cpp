#include "od/enumerate.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "od/ksets.hpp"
#include "od/qpart.hpp"
#include "od/textio.hpp"
#include "od/validity.hpp"

namespace od {

// Size budget used by the enumerator. Zero is free, the other atoms
// weigh 1, a Veblen application adds 2, a successor or collapse shell
// adds 1, and sums weigh the total of their parts. Atomic collapse
// subscripts are free (they come from the seed); composite ones pay
// their own weight less the shell, which keeps nesting from snowballing.
int enum_weight(const Term& t) {
  switch (t.kind()) {
    case Kind::Zero:
      return 0;
    case Kind::Omega:
    case Kind::Pi:
      return 1;
    case Kind::Phi:
      return 2 + enum_weight(t.phi_first()) + enum_weight(t.phi_second());
    case Kind::Sum: {
      int w = 0;
      for (const Term& p : t.parts()) w += enum_weight(p);
      return w;
    }
    case Kind::RSucc:
      return 1 + enum_weight(t.rsucc_base());
    case Kind::D: {
      int w = 1 + enum_weight(t.body()) + std::max(0, enum_weight(t.sub()) - 1);
      for (const Quad& q : t.quads())
        w += enum_weight(q.nu) + enum_weight(q.kappa) + enum_weight(q.tau);
      return w;
    }
  }
  return 0;
}

namespace {

struct Pool {
  std::vector<std::vector<Term>> by_weight;  // valid canonical terms
  std::set<std::string> seen;
  std::vector<Term> subscripts;  // seed + collapses from earlier weights
  long count = 0;
};

bool try_emit(Pool& pool, const EnumConfig& cfg, int weight, const Term& t) {
  if (enum_weight(t) != weight) return false;  // canonicalization shrank it
  std::string spelling = print_term(t);
  if (pool.seen.count(spelling)) return false;
  if (!check_term(t, cfg.n_levels).valid) return false;
  pool.seen.insert(spelling);
  pool.by_weight[weight].push_back(t);
  ++pool.count;
  return true;
}

// pool_p must be sorted non-increasingly under cmp, so picking parts at
// non-decreasing indices enumerates each sorted multiset exactly once.
void gen_sums(Pool& pool, const EnumConfig& cfg, int weight, const std::vector<Term>& pool_p,
              std::vector<Term>& acc, int remaining, std::size_t from) {
  if (pool.count >= cfg.count_cap) return;
  if (remaining == 0) {
    if (acc.size() >= 2) try_emit(pool, cfg, weight, mk_sum(acc));
    return;
  }
  for (std::size_t k = from; k < pool_p.size(); ++k) {
    const Term& part = pool_p[k];
    int w = enum_weight(part);
    if (w > remaining) continue;
    acc.push_back(part);
    gen_sums(pool, cfg, weight, pool_p, acc, remaining - w, k);
    acc.pop_back();
  }
}

void gen_quadded(Pool& pool, const EnumConfig& cfg, int weight) {
  if (cfg.max_q_len < 1) return;
  const int top = cfg.n_levels - 1;
  for (const Term& sub : pool.subscripts) {
    // tau_0 must be the subscript and kappa_l must be pi, so candidate
    // kappas and taus live on the subscript path.
    std::vector<Term> path_terms;
    if (sub.is(Kind::Pi)) {
      path_terms.push_back(sub);
    } else if (sub.is(Kind::D)) {
      path_terms = subscript_path(sub);
    } else {
      continue;  // no Q part can satisfy sigma <= kappa_l = pi
    }
    const int w_sub = enum_weight(sub);
    // Single quadruple (nu, pi, sub, N-1).
    {
      int fixed = 1 + 1 + w_sub;  // shell + kappa=pi + tau=sub
      for (int w_nu = 0; fixed + w_nu <= weight; ++w_nu) {
        int w_body = weight - fixed - w_nu;
        if (w_body < 0 || w_body >= static_cast<int>(pool.by_weight.size())) continue;
        for (const Term& nu : pool.by_weight[w_nu]) {
          for (const Term& body : pool.by_weight[w_body]) {
            if (pool.count >= cfg.count_cap) return;
            try_emit(pool, cfg, weight, mk_d(sub, {{nu, pi(), sub, top}}, body));
          }
        }
      }
    }
    if (cfg.max_q_len < 2) continue;
    // Two quadruples (nu0, kappa0, sub, i), (nu1, pi, tau1, N-1).
    for (int i = 2; i <= top - 1; ++i) {
      for (const Term& kappa0 : path_terms) {
        if (kappa0.is(Kind::Pi)) continue;
        for (const Term& tau1 : path_terms) {
          int fixed = 1 + enum_weight(kappa0) + w_sub + 1 + enum_weight(tau1);
          if (fixed > weight) continue;
          for (int w_nu0 = 0; fixed + w_nu0 <= weight; ++w_nu0) {
            for (int w_nu1 = 0; fixed + w_nu0 + w_nu1 <= weight; ++w_nu1) {
              int w_body = weight - fixed - w_nu0 - w_nu1;
              if (w_body < 0) continue;
              for (const Term& nu0 : pool.by_weight[w_nu0]) {
                for (const Term& nu1 : pool.by_weight[w_nu1]) {
                  for (const Term& body : pool.by_weight[w_body]) {
                    if (pool.count >= cfg.count_cap) return;
                    try_emit(pool, cfg, weight,
                             mk_d(sub, {{nu0, kappa0, sub, i}, {nu1, pi(), tau1, top}}, body));
                  }
                }
              }
            }
          }
        }
      }
    }
  }
}

}  // namespace

EnumResult enumerate_valid(const EnumConfig& cfg) {
  if (cfg.max_size < 1) throw error("enumeration size must be at least 1");
  EnumResult result;
  Pool pool;
  pool.by_weight.resize(cfg.max_size + 1);
  pool.subscripts = cfg.subscript_seed;
  if (pool.subscripts.empty()) pool.subscripts = {omega(), pi()};

  pool.by_weight[0].push_back(zero());
  pool.seen.insert(print_term(zero()));
  ++pool.count;

  for (int w = 1; w <= cfg.max_size && pool.count < cfg.count_cap; ++w) {
    if (w == 1) {
      try_emit(pool, cfg, 1, omega());
      try_emit(pool, cfg, 1, pi());
    }
    // Veblen applications.
    for (int wa = 0; wa + 2 <= w; ++wa) {
      int wb = w - 2 - wa;
      for (const Term& a : pool.by_weight[wa]) {
        for (const Term& b : pool.by_weight[wb]) {
          if (pool.count >= cfg.count_cap) break;
          Term r = mk_phi(a, b);
          if (r.is(Kind::Phi) && r.phi_first().same(a) && r.phi_second().same(b))
            try_emit(pool, cfg, w, r);
        }
      }
    }
    // Sums of additively principal parts.
    {
      std::vector<Term> pool_p;
      for (int pw = 1; pw <= w; ++pw)
        for (const Term& t : pool.by_weight[pw])
          if (classify(t).in_p) pool_p.push_back(t);
      std::sort(pool_p.begin(), pool_p.end(),
                [](const Term& x, const Term& y) { return cmp(x, y) == Ordering::GT; });
      std::vector<Term> acc;
      gen_sums(pool, cfg, w, pool_p, acc, w, 0);
    }
    // Next-regular terms.
    for (const Term& base : pool.by_weight[w - 1]) {
      if (pool.count >= cfg.count_cap) break;
      if (classify(base).in_r && !base.is(Kind::Pi)) try_emit(pool, cfg, w, mk_rsucc(base));
    }
    // Collapses without a Q part.
    for (const Term& sub : pool.subscripts) {
      for (const Term& body : pool.by_weight[w - 1]) {
        if (pool.count >= cfg.count_cap) break;
        try_emit(pool, cfg, w, mk_d(sub, {}, body));
      }
    }
    // Collapses with a Q part.
    gen_quadded(pool, cfg, w);
    // Collapses of this weight join the subscript pool for later weights.
    for (const Term& t : pool.by_weight[w])
      if (t.is(Kind::D)) pool.subscripts.push_back(t);
  }

  result.truncated = pool.count >= cfg.count_cap;
  for (int w = 0; w <= cfg.max_size; ++w) {
    auto& bucket = pool.by_weight[w];
    std::sort(bucket.begin(), bucket.end(), [](const Term& x, const Term& y) {
      return print_term(x) < print_term(y);
    });
    for (const Term& t : bucket) result.terms.push_back(t);
  }
  return result;
}

bool in_veblen_fragment(const Term& t) {
  switch (t.kind()) {
    case Kind::Zero:
      return true;
    case Kind::Phi:
      return in_veblen_fragment(t.phi_first()) && in_veblen_fragment(t.phi_second());
    case Kind::Sum: {
      for (const Term& p : t.parts())
        if (!in_veblen_fragment(p)) return false;
      return true;
    }
    default:
      return false;
  }
}

namespace {

// Independent comparator over normal-form lists of Veblen applications.
// Deliberately organized around part lists rather than term dispatch.

struct VPart {
  Term a;
  Term b;
};

std::vector<VPart> vparts(const Term& t) {
  std::vector<VPart> out;
  if (t.is(Kind::Zero)) return out;
  if (t.is(Kind::Phi)) {
    out.push_back({t.phi_first(), t.phi_second()});
    return out;
  }
  for (const Term& p : t.parts()) out.push_back({p.phi_first(), p.phi_second()});
  return out;
}

int vcmp_term(const Term& x, const Term& y);

int vcmp_part(const VPart& p, const VPart& q) {
  int heads = vcmp_term(p.a, q.a);
  if (heads == 0) return vcmp_term(p.b, q.b);
  if (heads < 0) {
    // phi(a1,b1) < phi(a2,b2) iff b1 < phi(a2,b2) when a1 < a2
    int c = vcmp_term(p.b, mk_phi(q.a, q.b));
    return c < 0 ? -1 : 1;
  }
  int c = vcmp_term(mk_phi(p.a, p.b), q.b);
  return c > 0 ? 1 : -1;
}

int vcmp_term(const Term& x, const Term& y) {
  std::vector<VPart> xs = vparts(x);
  std::vector<VPart> ys = vparts(y);
  const std::size_t n = std::min(xs.size(), ys.size());
  for (std::size_t i = 0; i < n; ++i) {
    int c = vcmp_part(xs[i], ys[i]);
    if (c != 0) return c;
  }
  if (xs.size() == ys.size()) return 0;
  return xs.size() < ys.size() ? -1 : 1;
}

}  // namespace

Ordering oracle_veblen_cmp(const Term& a, const Term& b) {
  if (!in_veblen_fragment(a) || !in_veblen_fragment(b))
    throw error("oracle restricted to the 0/+/phi fragment");
  int c = vcmp_term(a, b);
  return c < 0 ? Ordering::LT : c > 0 ? Ordering::GT : Ordering::EQ;
}

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ull;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

}  // namespace

ScanReport order_axiom_scan(const std::vector<Term>& terms, std::uint64_t seed,
                            Comparator compare) {
  ScanReport rep;
  const std::size_t n = terms.size();
  for (std::size_t i = 0; i < n && rep.passed; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      Ordering ab = compare(terms[i], terms[j]);
      Ordering ba = compare(terms[j], terms[i]);
      ++rep.pairs;
      bool same = terms[i].same(terms[j]);
      if (ab != flip(ba) || (ab == Ordering::EQ) != same) {
        rep.passed = false;
        rep.counterexample = "pair " + print_term(terms[i]) + " / " + print_term(terms[j]) +
                             ": " + to_string(ab) + " vs " + to_string(ba);
        break;
      }
    }
  }
  if (!rep.passed) return rep;

  // Transitivity on a deterministic spread of at most 200 terms.
  std::vector<std::size_t> subset;
  std::size_t stride = n <= 200 ? 1 : (n + 199) / 200;
  for (std::size_t i = 0; i < n; i += stride) subset.push_back(i);
  const std::size_t m = subset.size();
  std::vector<std::vector<Ordering>> mat(m, std::vector<Ordering>(m, Ordering::EQ));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) mat[i][j] = compare(terms[subset[i]], terms[subset[j]]);
  auto check_triple = [&](std::size_t i, std::size_t j, std::size_t k, bool from_matrix) {
    Ordering ij = from_matrix ? mat[i][j] : compare(terms[i], terms[j]);
    Ordering jk = from_matrix ? mat[j][k] : compare(terms[j], terms[k]);
    Ordering ik = from_matrix ? mat[i][k] : compare(terms[i], terms[k]);
    ++rep.triples;
    if (ij == Ordering::LT && jk == Ordering::LT && ik != Ordering::LT) return false;
    return true;
  };
  for (std::size_t i = 0; i < m && rep.passed; ++i)
    for (std::size_t j = 0; j < m && rep.passed; ++j)
      for (std::size_t k = 0; k < m; ++k)
        if (!check_triple(i, j, k, true)) {
          rep.passed = false;
          rep.counterexample = "triple " + print_term(terms[subset[i]]) + " < " +
                               print_term(terms[subset[j]]) + " < " +
                               print_term(terms[subset[k]]);
          break;
        }
  if (!rep.passed) return rep;

  // Random triples over the full set.
  std::uint64_t state = seed;
  long samples = n > 200 ? 20000 : 0;
  for (long s = 0; s < samples; ++s) {
    std::size_t i = splitmix64(state) % n;
    std::size_t j = splitmix64(state) % n;
    std::size_t k = splitmix64(state) % n;
    if (!check_triple(i, j, k, false)) {
      rep.passed = false;
      rep.counterexample = "sampled triple " + print_term(terms[i]) + " / " +
                           print_term(terms[j]) + " / " + print_term(terms[k]);
      break;
    }
  }
  return rep;
}

std::vector<Term> descent_sample(std::uint64_t seed, const Term& start, int max_steps) {
  std::vector<Term> walk;
  walk.push_back(start);
  std::uint64_t state = seed;
  Term cur = start;
  for (int step = 0; step < max_steps && !cur.is(Kind::Zero); ++step) {
    // Moves: strictly smaller subterms, proper sum prefixes, and Zero.
    std::vector<Term> moves;
    auto push = [&moves](const Term& t) {
      for (const Term& y : moves)
        if (y.same(t)) return;
      moves.push_back(t);
    };
    for (const Term& s : subterm_closure(cur))
      if (lt(s, cur)) push(s);
    if (cur.is(Kind::Sum)) {
      const auto& ps = cur.parts();
      for (std::size_t k = 1; k < ps.size(); ++k)
        push(mk_sum(std::vector<Term>(ps.begin(), ps.begin() + k)));
    }
    push(zero());
    Term next = moves[splitmix64(state) % moves.size()];
    if (!lt(next, cur)) throw error("descent step failed to decrease");
    walk.push_back(next);
    cur = next;
  }
  return walk;
}

}  // namespace od
