#include "klr/pbwcanon.hpp"

#include <algorithm>

namespace klr {

FElement root_vector(ShuffleContext& ctx, const Root& alpha,
                     const ConvexOrder& order) {
  if (alpha.ht() == 1) {
    int i = 0;
    while (alpha.c[i] == 0) ++i;
    return ctx.theta(i);
  }
  auto pairs = minimal_pairs(alpha, order);
  if (pairs.empty()) throw error("no minimal pair for " + alpha.to_string());
  const auto& [beta, gamma] = pairs.front();
  FElement rb = root_vector(ctx, beta, order);
  FElement rg = root_vector(ctx, gamma, order);
  return ctx.fmul(rg, rb) - ctx.fmul(rb, rg).scaled(RatFn(LaurentPoly::q(1)));
}

FElement pbw_monomial(ShuffleContext& ctx, const KostantPartition& lam,
                      const ConvexOrder& order) {
  for (size_t t = 0; t + 1 < lam.parts.size(); ++t)
    if (order.less(lam.parts[t], lam.parts[t + 1]))
      throw error("Kostant partition parts not weakly decreasing");
  FElement r = ctx.unit();
  for (const auto& part : lam.parts) r = ctx.fmul(r, root_vector(ctx, part, order));
  LaurentPoly fact(1);
  std::map<Root, int> mult;
  for (const auto& part : lam.parts) mult[part] += 1;
  for (const auto& [root, m] : mult) fact *= qfact(m);
  return r.scaled(RatFn(LaurentPoly(1), fact));
}

FElement dual_pbw(ShuffleContext& ctx, const KostantPartition& lam,
                  const ConvexOrder& order) {
  for (size_t t = 0; t + 1 < lam.parts.size(); ++t)
    if (order.less(lam.parts[t], lam.parts[t + 1]))
      throw error("Kostant partition parts not weakly decreasing");
  FElement r = ctx.unit();
  LaurentPoly onemq2 = LaurentPoly(1) - LaurentPoly::q(2);
  for (const auto& part : lam.parts) {
    FElement dual = root_vector(ctx, part, order).scaled(RatFn(onemq2));
    r = ctx.fmul(r, dual);
  }
  return r.scaled(RatFn(LaurentPoly::q(s_lambda(lam))));
}

LaurentPoly PMatrix::at(const KostantPartition& lam,
                        const KostantPartition& mu) const {
  auto it = entries.find({lam, mu});
  return it == entries.end() ? LaurentPoly() : it->second;
}

std::vector<KostantPartition> linearize_kps(
    const ConvexOrder& order, std::vector<KostantPartition> kps) {
  // repeatedly extract a bilex-maximal element (smallest map key among ties)
  std::vector<KostantPartition> out;
  std::vector<KostantPartition> rest = std::move(kps);
  std::sort(rest.begin(), rest.end());
  while (!rest.empty()) {
    size_t pick = rest.size();
    for (size_t a = 0; a < rest.size(); ++a) {
      bool maximal = true;
      for (size_t b = 0; b < rest.size(); ++b)
        if (a != b && bilex_less(order, rest[a], rest[b])) maximal = false;
      if (maximal) {
        pick = a;
        break;
      }
    }
    if (pick == rest.size()) throw error("bilex order has no maximal element");
    out.push_back(rest[pick]);
    rest.erase(rest.begin() + pick);
  }
  return out;
}

PbwBasis make_pbw_basis(ShuffleContext& ctx, const Weight& alpha,
                        const ConvexOrder& order) {
  PbwBasis basis;
  basis.alpha = alpha;
  basis.order = order;
  basis.kps = linearize_kps(order, kostant_partitions(alpha, order));
  for (const auto& lam : basis.kps) {
    basis.r.emplace(lam, pbw_monomial(ctx, lam, order));
    basis.rstar.emplace(lam, dual_pbw(ctx, lam, order));
  }
  for (const auto& lam : basis.kps)
    for (const auto& mu : basis.kps) {
      RatFn v = ctx.lusztig_form(basis.r.at(lam), basis.rstar.at(mu));
      RatFn expect(lam == mu ? 1 : 0);
      if (v != expect)
        throw error("PBW duality failed at " + lam.to_string() + " / " +
                    mu.to_string());
    }
  return basis;
}

std::map<std::pair<KostantPartition, KostantPartition>, LaurentPoly>
bar_matrix(ShuffleContext& ctx, const PbwBasis& basis) {
  std::map<std::pair<KostantPartition, KostantPartition>, LaurentPoly> m;
  for (const auto& lam : basis.kps) {
    FElement barred = ctx.bar_f(basis.r.at(lam));
    for (const auto& mu : basis.kps) {
      RatFn v = ctx.lusztig_form(barred, basis.rstar.at(mu));
      if (v.is_zero()) continue;
      LaurentPoly entry = v.to_laurent();
      if (lam == mu) {
        if (!entry.is_one()) throw error("bar matrix diagonal is not 1");
      } else if (!bilex_less(basis.order, lam, mu)) {
        throw error("bar matrix support violates triangularity");
      }
      m[{lam, mu}] = std::move(entry);
    }
  }
  return m;
}

CanonicalBasis canonical_basis(ShuffleContext& ctx, const PbwBasis& basis) {
  auto M = bar_matrix(ctx, basis);
  const auto& kps = basis.kps;  // maximal first
  size_t m = kps.size();
  std::map<KostantPartition, int> index;
  for (size_t a = 0; a < m; ++a) index[kps[a]] = static_cast<int>(a);

  // b-vectors in r-coordinates
  std::vector<std::vector<LaurentPoly>> bvec(m,
                                             std::vector<LaurentPoly>(m));
  auto bar_coords = [&](const std::vector<LaurentPoly>& v) {
    // bar(sum v_mu r_mu) = sum_nu (sum_mu bar(v_mu) M_{mu,nu}) r_nu
    std::vector<LaurentPoly> out(m);
    for (size_t a = 0; a < m; ++a) {
      if (v[a].is_zero()) continue;
      LaurentPoly vb = v[a].barred();
      for (size_t b = 0; b < m; ++b) {
        auto it = M.find({kps[a], kps[b]});
        if (it != M.end()) out[b] += vb * it->second;
      }
    }
    return out;
  };

  for (size_t a = 0; a < m; ++a) {
    const auto& lam = kps[a];
    std::vector<LaurentPoly> cur(m);
    cur[a] = LaurentPoly(1);
    // d = bar(r_lambda) - r_lambda, supported on mu > lambda (processed)
    std::vector<LaurentPoly> d = bar_coords(cur);
    d[a] -= LaurentPoly(1);
    // peel off b_mu contributions from the <=-minimal end
    std::vector<LaurentPoly> A(m);
    for (size_t b = m; b-- > 0;) {
      // kps is maximal-first, so scan from the back (minimal side) upward
      if (d[b].is_zero()) continue;
      if (b >= a) throw error("bar defect not supported above lambda");
      A[b] = d[b];
      for (size_t t = 0; t < m; ++t)
        if (!bvec[b][t].is_zero()) d[t] -= A[b] * bvec[b][t];
    }
    for (size_t b = 0; b < m; ++b) {
      if (A[b].is_zero()) continue;
      // solve pi - bar(pi) = A_b with pi in qZ[q]
      LaurentPoly Ab = A[b];
      if ((Ab + Ab.barred()) != LaurentPoly())
        throw error("bar defect is not antisymmetric");
      LaurentPoly pi;
      for (const auto& [e, c] : Ab.terms())
        if (e > 0) pi += LaurentPoly::term(c, e);
      if (Ab.coeff(0) != 0) throw error("bar defect has a constant term");
      for (size_t t = 0; t < m; ++t) cur[t] += pi * bvec[b][t];
    }
    // post-hoc checks: bar invariance and qZ[q] unitriangularity
    std::vector<LaurentPoly> check = bar_coords(cur);
    if (check != cur) throw error("canonical basis vector is not bar-invariant");
    for (size_t t = 0; t < m; ++t) {
      if (t == a) {
        if (!cur[t].is_one()) throw error("canonical basis diagonal not 1");
      } else if (!cur[t].is_zero()) {
        if (!bilex_less(basis.order, lam, kps[t]))
          throw error("canonical basis support violates triangularity");
        if (!cur[t].in_q_zq())
          throw error("canonical basis off-diagonal not in qZ[q]");
      }
    }
    bvec[a] = std::move(cur);
  }

  CanonicalBasis out;
  out.p.kps = kps;
  for (size_t a = 0; a < m; ++a) {
    const auto& mu = kps[a];
    FElement el;
    bool first = true;
    for (size_t t = 0; t < m; ++t) {
      if (bvec[a][t].is_zero()) continue;
      out.p.entries[{kps[t], mu}] = bvec[a][t];
      FElement term = basis.r.at(kps[t]).scaled(RatFn(bvec[a][t]));
      el = first ? term : el + term;
      first = false;
    }
    out.b.emplace(mu, std::move(el));
  }
  return out;
}

std::map<KostantPartition, FElement> dual_canonical_basis(
    const PbwBasis& basis, const PMatrix& p) {
  std::map<KostantPartition, FElement> out;
  // process from the <=-minimal end upward: b*_lam = r*_lam - sum p b*_mu
  for (size_t a = basis.kps.size(); a-- > 0;) {
    const auto& lam = basis.kps[a];
    FElement el = basis.rstar.at(lam);
    for (size_t b = a + 1; b < basis.kps.size(); ++b) {
      const auto& mu = basis.kps[b];
      LaurentPoly c = p.at(lam, mu);
      if (!c.is_zero()) el = el - out.at(mu).scaled(RatFn(c));
    }
    el.character();  // asserts Laurent entries
    out.emplace(lam, std::move(el));
  }
  return out;
}

}  // namespace klr
