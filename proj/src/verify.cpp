#include "klr/verify.hpp"

#include <random>

#include "klr/fshuffle.hpp"
#include "klr/multipoly.hpp"
#include "klr/nilhecke.hpp"
#include "klr/pbwcanon.hpp"
#include "klr/qhalg.hpp"
#include "klr/repchar.hpp"

namespace klr {

namespace {

using Rng = std::mt19937;

LaurentPoly random_laurent(Rng& rng) {
  std::uniform_int_distribution<int> nterms(0, 3), exp(-4, 4), coeff(-5, 5);
  LaurentPoly p;
  int t = nterms(rng);
  for (int i = 0; i < t; ++i) p += LaurentPoly::term(coeff(rng), exp(rng));
  return p;
}

MultiPoly random_multipoly(Rng& rng, int n) {
  std::uniform_int_distribution<int> nterms(1, 3), exp(0, 3), coeff(-4, 4);
  MultiPoly p(n);
  int t = nterms(rng);
  for (int i = 0; i < t; ++i) {
    std::vector<int> e(n);
    for (int j = 0; j < n; ++j) e[j] = exp(rng);
    p.add_term(std::move(e), coeff(rng));
  }
  return p;
}

QHElement random_qh(Rng& rng, QhAlgebra& alg) {
  const auto& words = alg.words();
  int n = alg.strands();
  std::uniform_int_distribution<int> nterms(1, 2), widx(0, words.size() - 1),
      exp(0, 2), coeff(-3, 3);
  auto perms = all_permutations(n);
  std::uniform_int_distribution<int> pidx(0, perms.size() - 1);
  QHElement e;
  int t = nterms(rng);
  for (int i = 0; i < t; ++i) {
    std::vector<int> exps(n);
    for (int j = 0; j < n; ++j) exps[j] = exp(rng);
    int c = coeff(rng);
    if (c == 0) c = 1;
    e.add(QhKey{words[widx(rng)], perms[pidx(rng)], exps}, LaurentPoly(c));
  }
  return e;
}

// weights of height <= h over the quiver
std::vector<Weight> small_weights(const Quiver& q, int h) {
  std::vector<Weight> out;
  Weight cur = Weight::zero(q.size());
  auto rec = [&](auto&& self, int i, int left) -> void {
    if (i == q.size()) {
      if (cur.ht() >= 1) out.push_back(cur);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      cur.c[i] = v;
      self(self, i + 1, left - v);
    }
    cur.c[i] = 0;
  };
  rec(rec, 0, h);
  return out;
}

bool check_qring(Rng& rng, bool full) {
  int top = full ? 7 : 5;
  for (int n = 1; n <= top; ++n) {
    int e = n * (n - 1) / 2;
    if (poincare(n) != LaurentPoly::q(e) * qfact(n)) return false;
  }
  for (int trial = 0; trial < 50; ++trial) {
    LaurentPoly a = random_laurent(rng), b = random_laurent(rng);
    if (bar(bar(a)) != a) return false;
    if (bar(a + b) != bar(a) + bar(b)) return false;
    if (bar(a * b) != bar(a) * bar(b)) return false;
    if (!a.is_zero() && !b.is_zero()) {
      RatFn x(a, b), y(b, a);
      if (!(x * y).is_one()) return false;
      LaurentPoly c = random_laurent(rng);
      if (!c.is_zero() && RatFn(a * c, b * c) != x) return false;
    }
  }
  return true;
}

bool check_demazure(Rng& rng, bool full) {
  int n = full ? 4 : 3;
  for (int trial = 0; trial < 40; ++trial) {
    MultiPoly f = random_multipoly(rng, n), g = random_multipoly(rng, n);
    for (int i = 1; i < n; ++i) {
      if (!demazure(i, demazure(i, f)).is_zero()) return false;
      MultiPoly lhs = demazure(i, f * g);
      MultiPoly rhs = demazure(i, f) * g + f.swapped(i) * demazure(i, g);
      if (lhs != rhs) return false;
    }
    for (int i = 1; i + 1 < n; ++i) {
      MultiPoly a = demazure(i, demazure(i + 1, demazure(i, f)));
      MultiPoly b = demazure(i + 1, demazure(i, demazure(i + 1, f)));
      if (a != b) return false;
    }
  }
  return true;
}

bool check_nilhecke_basis(bool full) {
  int top = full ? 4 : 3;
  for (int n = 1; n <= top; ++n) {
    auto bs = basis_b(n);
    if (!(bs.at(Permutation::longest(n)) == MultiPoly::constant(n, 1)))
      return false;
    LaurentPoly dimsum;
    for (const auto& [w, b] : bs) {
      if (!b.is_zero() && b.degree2() != n * (n - 1) - 2 * w.length())
        return false;
      dimsum += LaurentPoly::q(n * (n - 1) - 2 * w.length());
    }
    if (dimsum != LaurentPoly::q(n * (n - 1) / 2) * qfact(n)) return false;
    // e_n projects onto b_id
    QHElement en = nil_en(n);
    for (const auto& [w, b] : bs) {
      MultiPoly acted = nil_act(en, b);
      if (w.is_identity() ? acted != b : !acted.is_zero()) return false;
    }
    // idempotency via straightening
    QhAlgebra alg = nil_algebra(n);
    if (alg.multiply(en, en) != en) return false;
  }
  return true;
}

}  // namespace

bool defining_relations_hold(QhAlgebra& alg) {
  int n = alg.strands();
  const auto& words = alg.words();
  for (const auto& i : words) {
    QHElement idem = alg.idem(i);
    for (const auto& j : words) {
      QHElement prod = alg.multiply(idem, alg.idem(j));
      if (i == j ? prod != idem : !prod.is_zero()) return false;
    }
    for (int k = 1; k <= n; ++k) {
      QHElement xk = alg.x_idem(k, i);
      if (alg.multiply(idem, alg.x(k)) != xk) return false;
      for (int l = 1; l <= n; ++l) {
        QHElement a = alg.multiply(alg.x_idem(k, i), alg.x(l));
        QHElement b = alg.multiply(alg.x_idem(l, i), alg.x(k));
        if (a != b) return false;
      }
    }
    for (int k = 1; k < n; ++k) {
      QHElement tk = alg.tau_idem(k, i);
      // 1_j tau_k 1_i nonzero only for j = t_k(i)
      Word ti = Permutation::transposition(n, k).act(i);
      if (alg.multiply(alg.idem(ti), tk) != tk) return false;
      // (tau_k x_l - x_{t_k(l)} tau_k) 1_i
      for (int l = 1; l <= n; ++l) {
        int tkl = l == k ? k + 1 : (l == k + 1 ? k : l);
        QHElement lhs = alg.multiply(alg.tau(k), alg.x_idem(l, i)) -
                        alg.multiply(alg.x(tkl), tk);
        QHElement rhs;
        if (i.letter(k) == i.letter(k + 1) && (l == k || l == k + 1))
          rhs = alg.idem(i).scaled(LaurentPoly(l == k + 1 ? 1 : -1));
        if (lhs != rhs) return false;
      }
      // quadratic
      QHElement t2 = alg.multiply(alg.tau(k), tk);
      QPoly p = QPoly::of(alg.quiver(), i.letter(k), i.letter(k + 1));
      QHElement rhs;
      for (const auto& [uv, c] : p.coeffs) {
        std::vector<int> exps(n, 0);
        exps[k - 1] = uv.first;
        exps[k] = uv.second;
        rhs.add(QhKey{i, Permutation::identity(n), exps}, LaurentPoly(c));
      }
      if (t2 != rhs) return false;
      // distant commutation
      for (int l = k + 2; l < n; ++l) {
        QHElement a = alg.multiply(alg.tau(l), tk);
        QHElement b = alg.multiply(alg.tau(k), alg.tau_idem(l, i));
        if (a != b) return false;
      }
    }
    // braid
    for (int k = 1; k + 1 < n; ++k) {
      QHElement lhs =
          alg.multiply(alg.tau(k + 1),
                       alg.multiply(alg.tau(k), alg.tau_idem(k + 1, i))) -
          alg.multiply(alg.tau(k),
                       alg.multiply(alg.tau(k + 1), alg.tau_idem(k, i)));
      QHElement rhs;
      if (i.letter(k) == i.letter(k + 2)) {
        QPoly p = QPoly::of(alg.quiver(), i.letter(k), i.letter(k + 1));
        for (const auto& [uv, c] : p.coeffs) {
          auto [du, dv] = uv;
          for (int t = 0; t <= du - 1; ++t) {
            std::vector<int> exps(n, 0);
            exps[k - 1] = t;
            exps[k] = dv;
            exps[k + 1] = du - 1 - t;
            rhs.add(QhKey{i, Permutation::identity(n), exps}, LaurentPoly(c));
          }
        }
      }
      if (lhs != rhs) return false;
    }
  }
  return true;
}

namespace {

bool check_qhalg(Rng& rng, const Quiver& q, bool full) {
  int h = full ? 3 : 2;
  for (const auto& alpha : small_weights(q, h)) {
    QhAlgebra alg(q, alpha);
    if (!defining_relations_hold(alg)) return false;
    int triples = full ? 10 : 4;
    for (int t = 0; t < triples; ++t) {
      QHElement a = random_qh(rng, alg), b = random_qh(rng, alg),
                c = random_qh(rng, alg);
      if (alg.multiply(alg.multiply(a, b), c) !=
          alg.multiply(a, alg.multiply(b, c)))
        return false;
    }
  }
  return true;
}

bool check_iden(const Quiver& q, int cutoff, bool full) {
  int h = full ? 3 : 2;
  for (const auto& alpha : small_weights(q, h)) {
    QhAlgebra alg(q, alpha);
    for (const auto& i : alg.words())
      for (const auto& j : alg.words())
        if (!(alg.enumerate_basis(i, j, cutoff) ==
              alg.graded_dim_formula(i, j, cutoff)))
          return false;
  }
  return true;
}

bool check_shuffle(Rng& rng, const Quiver& q, bool full) {
  ShuffleContext ctx(q);
  std::uniform_int_distribution<int> len(0, 2), vert(0, q.size() - 1);
  auto random_word = [&] {
    std::vector<int> v(len(rng));
    for (auto& x : v) x = vert(rng);
    return Word(v);
  };
  int trials = full ? 30 : 10;
  for (int t = 0; t < trials; ++t) {
    Word a = random_word(), b = random_word(), c = random_word();
    Character ab = shuffle(q, a, b);
    Character lhs = shuffle(q, ab, Character{{{c, LaurentPoly(1)}}});
    Character rhs = shuffle(q, Character{{{a, LaurentPoly(1)}}}, shuffle(q, b, c));
    if (lhs != rhs) return false;
    if (a.weight(q.size()) == b.weight(q.size()))
      if (ctx.gram_entry(a, b) != ctx.gram_entry(b, a)) return false;
  }
  return true;
}

bool check_serre(const Quiver& q) {
  for (int i = 0; i < q.size(); ++i)
    for (int j = 0; j < q.size(); ++j) {
      if (i == j) continue;
      ShuffleContext ctx(q);
      if (!ctx.serre_check(i, j).is_zero()) return false;
    }
  return true;
}

bool check_mackey(Rng& rng, const Quiver& q, bool full) {
  std::uniform_int_distribution<int> len(1, 3), vert(0, q.size() - 1),
      coeff(-2, 2), exp(-1, 1);
  int trials = full ? 50 : 10;
  for (int t = 0; t < trials; ++t) {
    std::vector<int> a(len(rng)), b(len(rng));
    for (auto& x : a) x = vert(rng);
    for (auto& x : b) x = vert(rng);
    // characters supported on the S_n-orbits of the base words
    Character chX, chY;
    Word wa{a}, wb{b};
    Weight alpha = wa.weight(q.size()), beta_w = wb.weight(q.size());
    for (const auto& w : words_of_weight(q, alpha)) {
      int c = coeff(rng);
      if (c != 0) chX.add(w, LaurentPoly::term(c, exp(rng)));
    }
    chX.add(wa, LaurentPoly(1));
    for (const auto& w : words_of_weight(q, beta_w)) {
      int c = coeff(rng);
      if (c != 0) chY.add(w, LaurentPoly::term(c, exp(rng)));
    }
    chY.add(wb, LaurentPoly(1));
    Weight total = alpha + beta_w;
    // random split (beta, gamma)
    std::vector<Weight> splits;
    Weight cur = Weight::zero(q.size());
    auto rec = [&](auto&& self, int i) -> void {
      if (i == q.size()) {
        splits.push_back(cur);
        return;
      }
      for (int v = 0; v <= total.c[i]; ++v) {
        cur.c[i] = v;
        self(self, i + 1);
      }
      cur.c[i] = 0;
    };
    rec(rec, 0);
    std::uniform_int_distribution<int> pick(0, splits.size() - 1);
    Weight beta = splits[pick(rng)];
    Weight gamma = total - beta;
    if (!mackey_character_check(q, chX, chY, beta, gamma)) return false;
  }
  return true;
}

bool check_pbw(const Quiver& q, bool full) {
  auto type = classify_finite_type(q);
  if (!type) return true;  // skipped for non-finite quivers
  int h = full ? (type->family == 'A' ? 5 : 4) : 3;
  ShuffleContext ctx(q);
  for (const auto& w0 : {lex_least_w0(q), lex_greatest_w0(q)}) {
    ConvexOrder ord = convex_order(q, w0);
    for (const auto& alpha : small_weights(q, h)) {
      if (kostant_partitions(alpha, ord).empty()) continue;
      PbwBasis basis = make_pbw_basis(ctx, alpha, ord);  // asserts duality
      CanonicalBasis cb = canonical_basis(ctx, basis);   // asserts bar/qZ[q]
      for (const auto& [key, c] : cb.p.entries)
        if (key.first != key.second && !c.nonneg_coeffs()) return false;
      auto duals = dual_canonical_basis(basis, cb.p);
      for (const auto& lam : basis.kps) {
        Character ch = proper_standard_character(ctx, lam, ord);
        if (ch != basis.rstar.at(lam).character()) return false;
        auto row = decompose_with(duals, ch);
        for (const auto& mu : basis.kps) {
          LaurentPoly expect = cb.p.at(lam, mu);
          LaurentPoly got;
          auto it = row.find(mu);
          if (it != row.end()) got = it->second;
          if (got != expect) return false;
        }
        if (!parity_check(q, duals.at(lam).character())) return false;
      }
    }
  }
  return true;
}

bool check_affine_inner_product(const Quiver& q) {
  // only meaningful for the A_1^(1) shape: two vertices with c_{01} = -2
  if (q.size() != 2 || q.cartan(0, 1) != -2) return true;
  ShuffleContext ctx(q);
  Character ch;
  ch.add(Word({0, 1}), LaurentPoly(1));
  FElement l01 = ctx.solve_expr(ctx.from_character(ch, Weight({1, 1})));
  RatFn v = ctx.lusztig_form(l01, l01);
  LaurentPoly num = LaurentPoly(1) - LaurentPoly::q(2);
  LaurentPoly den = LaurentPoly(1) + LaurentPoly::q(2);
  return v == RatFn(num, den);
}

}  // namespace

VerifyReport run_verification(const Quiver& q,
                              const std::optional<Weight>& alpha,
                              const std::optional<std::vector<int>>& w0,
                              int cutoff, bool full, std::ostream& out) {
  Rng rng(20240811);
  VerifyReport report;
  auto record = [&](const std::string& name, bool ok) {
    report.checks.push_back({name, ok});
    out << (ok ? "PASS " : "FAIL ") << name << "\n";
  };
  auto guard = [&](const std::string& name, auto&& fn) {
    bool ok = false;
    try {
      ok = fn();
    } catch (const std::exception& e) {
      out << "  (" << name << " raised: " << e.what() << ")\n";
      ok = false;
    }
    record(name, ok);
  };

  guard("qring-arithmetic", [&] { return check_qring(rng, full); });
  guard("nilhecke-demazure", [&] { return check_demazure(rng, full); });
  guard("nilhecke-basis", [&] { return check_nilhecke_basis(full); });
  guard("qhalg-relations-associativity", [&] { return check_qhalg(rng, q, full); });
  guard("qhalg-basis-oracle", [&] { return check_iden(q, cutoff, full); });
  guard("shuffle-algebra", [&] { return check_shuffle(rng, q, full); });
  guard("serre-relations", [&] { return check_serre(q); });
  guard("mackey-characters", [&] { return check_mackey(rng, q, full); });
  if (alpha) {
    guard("alpha-block", [&] {
      auto type = classify_finite_type(q);
      if (!type) return true;
      ConvexOrder ord = w0 ? convex_order(q, *w0)
                           : convex_order(q, lex_least_w0(q));
      ShuffleContext ctx(q);
      PbwBasis basis = make_pbw_basis(ctx, *alpha, ord);
      CanonicalBasis cb = canonical_basis(ctx, basis);
      auto duals = dual_canonical_basis(basis, cb.p);
      for (const auto& lam : basis.kps) {
        Character ch = proper_standard_character(ctx, lam, ord);
        auto row = decompose_with(duals, ch);
        for (const auto& mu : basis.kps)
          if ((row.count(mu) ? row.at(mu) : LaurentPoly()) !=
              cb.p.at(lam, mu))
            return false;
      }
      return true;
    });
  }
  guard("pbw-canonical-positivity", [&] { return check_pbw(q, full); });
  guard("affine-inner-product", [&] { return check_affine_inner_product(q); });
  return report;
}

}  // namespace klr
