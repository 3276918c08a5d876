#include "od/chain.hpp"

#include <string>

#include "od/order.hpp"
#include "od/qpart.hpp"
#include "od/textio.hpp"
#include "od/validity.hpp"

namespace od {

namespace {

bool in_dq(const Term& t) { return t.is(Kind::D) && !t.quads().empty(); }

std::optional<Term> rg_of(const Term& t, int i) {
  auto p = in_pair(t, i);
  if (!p) return std::nullopt;
  return p->second;
}

}  // namespace

void validate_descriptor(const RopeDescriptor& desc) {
  if (desc.n_levels < 4) throw error("descriptor level count must be at least 4");
  if (desc.sigmas.empty()) throw error("descriptor needs at least the root subscript");
  if (!classify(desc.sigmas[0]).in_r) throw error("root subscript must be recursively regular");
  const int n = desc.spine_len();
  for (int p = 0; p + 1 <= n; ++p) {
    const Term& next = desc.sigmas[p + 1];
    if (!next.is(Kind::D) || !next.sub().same(desc.sigmas[p]))
      throw error("sigma_" + std::to_string(p + 1) + " must be a collapse of sigma_" +
                  std::to_string(p));
  }
  if (n == 0) {
    if (!desc.knot_numbers.empty() || !desc.knot_indices.empty())
      throw error("degenerate rope admits no knots");
    return;
  }
  if (desc.knot_numbers.empty()) throw error("knot numbers must end at n-1");
  for (std::size_t m = 0; m + 1 < desc.knot_numbers.size(); ++m)
    if (desc.knot_numbers[m] >= desc.knot_numbers[m + 1])
      throw error("knot numbers must increase strictly");
  if (desc.knot_numbers.front() < 0) throw error("knot numbers must be nonnegative");
  if (desc.knot_numbers.back() != n - 1) throw error("knot numbers must end at n-1");
  if (static_cast<int>(desc.knot_indices.size()) != desc.knot_count())
    throw error("one knot index per knot below the edge");
  for (int idx : desc.knot_indices)
    if (idx < 2 || idx > desc.n_levels - 2)
      throw error("knot index out of range: " + std::to_string(idx));
}

int m_index(const RopeDescriptor& desc, int i) {
  if (i < 2 || i >= desc.n_levels) throw error("m_index level out of range");
  const int l = desc.knot_count();
  int m = 0;
  while (m < l && desc.knot_indices[m] >= i) ++m;
  return m;
}

std::set<int> in_from_rope(const RopeDescriptor& desc) {
  std::set<int> out;
  out.insert(desc.n_levels - 1);
  for (int i = 2; i <= desc.n_levels - 2; ++i) {
    int m = m_index(desc, i);
    for (int p = 0; p < m; ++p)
      if (desc.knot_indices[p] == i) out.insert(i);
  }
  return out;
}

Term pd_from_rope(const RopeDescriptor& desc, int i) {
  if (desc.spine_len() == 0) return desc.sigmas[0];
  return desc.sigmas[desc.knot_numbers[m_index(desc, i)] + 1];
}

Term rg_from_rope(const RopeDescriptor& desc, int i) {
  auto in = in_from_rope(desc);
  if (!in.count(i)) throw error("rg undefined outside the active index set");
  if (i == desc.n_levels - 1) throw error("the top range is always the root");
  const Term pd = pd_from_rope(desc, i);
  const int hi = desc.knot_numbers[m_index(desc, i)];
  const int lo = desc.knot_numbers[m_index(desc, i + 1)];
  // Minimal q in (lo, hi] originating i for some sigma_{p+1} at or above
  // it that the new diagram reaches in the i-chain.
  for (int q = lo + 1; q <= hi; ++q) {
    for (int p = q; p <= hi; ++p) {
      const Term& cand = desc.sigmas[p + 1];
      if (!preceq_i(pd, cand, i)) continue;
      auto rg = rg_of(cand, i);
      if (rg && rg->same(desc.sigmas[q])) return desc.sigmas[q];
    }
  }
  return pd;
}

std::pair<Term, ValidityReport> synth(const RopeDescriptor& desc, const SynthInputs& inputs) {
  validate_descriptor(desc);
  if (inputs.body.empty() || inputs.st_top.empty()) throw error("synth needs body and st_top");
  if (!desc.sigmas[0].is(Kind::Pi))
    throw error("the top quadruple demands a pi root");
  const int n_levels = desc.n_levels;
  std::vector<Quad> quads;
  for (int i : in_from_rope(desc)) {
    Quad quad;
    quad.level = i;
    quad.tau = pd_from_rope(desc, i);
    if (i == n_levels - 1) {
      quad.kappa = desc.sigmas[0];
      quad.nu = inputs.st_top;
    } else {
      quad.kappa = rg_from_rope(desc, i);
      auto it = inputs.st_lower.find(i);
      if (it == inputs.st_lower.end())
        throw error("missing st input for level " + std::to_string(i));
      quad.nu = mk_d(mk_rsucc(quad.kappa), {}, it->second);
    }
    quads.push_back(quad);
  }
  const Term& sigma = desc.sigmas.back();
  Term rho = mk_d(sigma, std::move(quads), inputs.body);
  return {rho, check_term(rho, n_levels)};
}

ValidityReport verify_rope_laws(const RopeDescriptor& desc) {
  validate_descriptor(desc);
  ValidityReport rep;
  if (!desc.sigmas.empty()) rep.subject = desc.sigmas.back();
  const int n = desc.spine_len();
  for (int i : in_from_rope(desc)) {
    if (i == desc.n_levels - 1) continue;
    const std::string tag = "i=" + std::to_string(i);
    const Term pd = pd_from_rope(desc, i);
    const Term rg = rg_from_rope(desc, i);
    const Term pd_next = pd_from_rope(desc, i + 1);

    {
      bool ok = true;
      std::string detail;
      auto lhs = in_pair(rg, i);
      auto rhs = in_pair(pd_next, i);
      bool pair_eq = (!lhs && !rhs) ||
                     (lhs && rhs && lhs->first.same(rhs->first) && lhs->second.same(rhs->second));
      if (!pair_eq) {
        ok = false;
        detail = "in_i(rg_i) differs from in_i(pd_{i+1})";
      }
      if (!preceq_i(pd, rg, i) || !preceq_i(rg, pd_next, i)) {
        ok = false;
        detail = "pd_i, rg_i, pd_{i+1} not chained";
      }
      if (pd.same(pd_next)) {
        ok = false;
        detail = "pd_i equals pd_{i+1}";
      }
      rep.add("rope.a", ok, detail.empty() ? tag : tag + ": " + detail);
    }

    {
      bool ok = true;
      std::string detail;
      auto rg_pd = rg_of(pd, i);
      if (rg_pd) {
        for (int t = 0; t <= n; ++t) {
          const Term& st = desc.sigmas[t];
          if (!preceq_i(*rg_pd, st, i) || !prec_i(st, rg, i)) continue;
          auto rg_t = rg_of(st, i);
          if (!rg_t || !preceq_i(*rg_t, rg, i)) {
            ok = false;
            detail = "sigma_" + std::to_string(t) + " escapes the i-origin bound";
          }
        }
      }
      rep.add("rope.b", ok, detail.empty() ? tag : tag + ": " + detail);
    }

    {
      auto rg_pd = rg_of(pd, i);
      bool ok = rg.same(pd) || (rg_pd && preceq_i(*rg_pd, rg, i));
      rep.add("rope.c", ok, tag);
    }
  }
  if (rep.checks.empty()) rep.add("rope.a", true, "no lower active index");
  return rep;
}

int resolvent_level(const RopeDescriptor& desc, int i) {
  if (i < 1 || i >= desc.n_levels - 1) throw error("resolvent level out of range");
  if (desc.knot_count() == 0) return 0;
  return m_index(desc, i + 1);
}

}  // namespace od
