#include "klr/repchar.hpp"

#include <algorithm>
#include <deque>

#include "klr/qhalg.hpp"

namespace klr {

std::set<Word> word_class(const Quiver& q, const Word& i) {
  std::set<Word> cls = {i};
  std::deque<Word> queue = {i};
  while (!queue.empty()) {
    Word w = queue.front();
    queue.pop_front();
    for (int p = 0; p + 1 < w.size(); ++p) {
      int a = w.v[p], b = w.v[p + 1];
      if (a != b && q.cartan(a, b) == 0) {
        Word s = w;
        std::swap(s.v[p], s.v[p + 1]);
        if (cls.insert(s).second) queue.push_back(s);
      }
    }
  }
  return cls;
}

bool is_homogeneous(const Quiver& q, const Word& i) {
  for (const auto& w : word_class(q, i)) {
    for (int p = 0; p + 1 < w.size(); ++p)
      if (w.v[p] == w.v[p + 1]) return false;
    for (int p = 0; p + 2 < w.size(); ++p)
      if (w.v[p] == w.v[p + 2] && q.cartan(w.v[p], w.v[p + 1]) == -1)
        return false;
  }
  return true;
}

Character HomogeneousModule::character() const {
  Character ch;
  for (const auto& w : basis) ch.add(w, LaurentPoly(1));
  return ch;
}

std::vector<std::vector<int>> HomogeneousModule::tau_matrix(int k) const {
  int d = dim();
  std::vector<std::vector<int>> m(d, std::vector<int>(d, 0));
  for (int col = 0; col < d; ++col) {
    const Word& w = basis[col];
    if (quiver.cartan(w.v[k - 1], w.v[k]) != 0) continue;
    Word s = w;
    std::swap(s.v[k - 1], s.v[k]);
    int row = static_cast<int>(std::lower_bound(basis.begin(), basis.end(), s) -
                               basis.begin());
    m[row][col] = 1;
  }
  return m;
}

std::vector<std::vector<int>> HomogeneousModule::idem_matrix(
    const Word& w) const {
  int d = dim();
  std::vector<std::vector<int>> m(d, std::vector<int>(d, 0));
  auto it = std::lower_bound(basis.begin(), basis.end(), w);
  if (it != basis.end() && *it == w) {
    int p = static_cast<int>(it - basis.begin());
    m[p][p] = 1;
  }
  return m;
}

namespace {

using Mat = std::vector<std::vector<int>>;

Mat mat_mul(const Mat& a, const Mat& b) {
  size_t d = a.size();
  Mat r(d, std::vector<int>(d, 0));
  for (size_t i = 0; i < d; ++i)
    for (size_t k = 0; k < d; ++k) {
      if (a[i][k] == 0) continue;
      for (size_t j = 0; j < d; ++j) r[i][j] += a[i][k] * b[k][j];
    }
  return r;
}

Mat mat_sub(const Mat& a, const Mat& b) {
  Mat r = a;
  for (size_t i = 0; i < r.size(); ++i)
    for (size_t j = 0; j < r.size(); ++j) r[i][j] -= b[i][j];
  return r;
}

Mat mat_scale(int c, const Mat& a) {
  Mat r = a;
  for (auto& row : r)
    for (auto& v : row) v *= c;
  return r;
}

bool mat_zero(const Mat& a) {
  for (const auto& row : a)
    for (int v : row)
      if (v != 0) return false;
  return true;
}

}  // namespace

void HomogeneousModule::verify_relations() const {
  int n = alpha.ht();
  auto words = words_of_weight(quiver, alpha);
  int d = dim();
  Mat id(d, std::vector<int>(d, 0));
  for (int p = 0; p < d; ++p) id[p][p] = 1;

  // idempotents are orthogonal and sum to the identity
  Mat sum(d, std::vector<int>(d, 0));
  for (const auto& w : words) {
    Mat pw = idem_matrix(w);
    for (const auto& w2 : words) {
      Mat prod = mat_mul(pw, idem_matrix(w2));
      if (w == w2 ? !(prod == pw) : !mat_zero(prod))
        throw error("idempotent relation failed");
    }
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) sum[i][j] += pw[i][j];
  }
  if (!(sum == id)) throw error("idempotents do not sum to identity");

  // x_k act as zero, so the commuting and dot-sliding relations reduce to
  // vanishing statements; check the nontrivial right-hand sides vanish too.
  for (int k = 1; k < n; ++k)
    for (const auto& w : words) {
      // (tau_k x_l - x_{t_k(l)} tau_k) 1_w = delta(...) 1_w must be 0
      if (w.v[k - 1] == w.v[k] && !mat_zero(idem_matrix(w)))
        throw error("dot-sliding relation failed (repeated letter in class)");
    }

  // 1_i tau_k = tau_k 1_{t_k(i)}
  for (int k = 1; k < n; ++k) {
    Mat tk = tau_matrix(k);
    for (const auto& w : words) {
      Word s = w;
      std::swap(s.v[k - 1], s.v[k]);
      if (!(mat_mul(idem_matrix(w), tk) == mat_mul(tk, idem_matrix(s))))
        throw error("idempotent/tau relation failed");
    }
  }

  // quadratic: tau_k^2 1_w = q_{w_k, w_{k+1}}(0,0) 1_w
  for (int k = 1; k < n; ++k) {
    Mat tk = tau_matrix(k);
    Mat tk2 = mat_mul(tk, tk);
    for (const auto& w : words) {
      QPoly p = QPoly::of(quiver, w.v[k - 1], w.v[k]);
      int c = static_cast<int>(p.constant_term().get_si());
      Mat lhs = mat_mul(tk2, idem_matrix(w));
      if (!(lhs == mat_scale(c, idem_matrix(w))))
        throw error("quadratic relation failed");
    }
  }

  // distant crossings commute
  for (int k = 1; k < n; ++k)
    for (int l = k + 2; l < n; ++l) {
      Mat a = tau_matrix(k), b = tau_matrix(l);
      if (!(mat_mul(a, b) == mat_mul(b, a)))
        throw error("distant commutation failed");
    }

  // braid relation with its correction term evaluated at x = 0
  for (int k = 1; k + 1 < n; ++k) {
    Mat a = tau_matrix(k), b = tau_matrix(k + 1);
    Mat lhs = mat_sub(mat_mul(b, mat_mul(a, b)), mat_mul(a, mat_mul(b, a)));
    for (const auto& w : words) {
      Mat got = mat_mul(lhs, idem_matrix(w));
      int c = 0;
      if (w.v[k - 1] == w.v[k + 1]) {
        // constant term of [q(x_k,x_{k+1}) - q(x_{k+2},x_{k+1})]/(x_k-x_{k+2})
        QPoly p = QPoly::of(quiver, w.v[k - 1], w.v[k]);
        auto it = p.coeffs.find({1, 0});
        if (it != p.coeffs.end()) c = static_cast<int>(it->second.get_si());
      }
      if (!(got == mat_scale(c, idem_matrix(w))))
        throw error("braid relation failed");
    }
  }
}

HomogeneousModule build_homogeneous(const Quiver& q, const Word& i) {
  if (!is_homogeneous(q, i))
    throw error("word is not homogeneous: " + i.to_string(q));
  HomogeneousModule m;
  m.quiver = q;
  m.alpha = i.weight(q.size());
  auto cls = word_class(q, i);
  m.basis.assign(cls.begin(), cls.end());
  m.verify_relations();
  return m;
}

Character cuspidal_character(ShuffleContext& ctx, const Root& alpha,
                             const ConvexOrder& order) {
  KostantPartition lam{{alpha}};
  return dual_pbw(ctx, lam, order).character();
}

Character proper_standard_character(ShuffleContext& ctx,
                                    const KostantPartition& lam,
                                    const ConvexOrder& order) {
  Character ch;
  ch.add(Word{}, LaurentPoly(1));
  for (const auto& part : lam.parts)
    ch = shuffle(ctx.quiver(), ch, cuspidal_character(ctx, part, order));
  return ch.scaled(LaurentPoly::q(s_lambda(lam)));
}

std::map<KostantPartition, LaurentPoly> decompose_with(
    const std::map<KostantPartition, FElement>& duals, const Character& ch) {
  // column per partition, row per word
  std::set<Word> words;
  for (const auto& [lam, el] : duals)
    for (const auto& [w, c] : el.pv) words.insert(w);
  for (const auto& [w, c] : ch.coeffs) words.insert(w);
  std::vector<Word> rows(words.begin(), words.end());
  std::vector<KostantPartition> cols;
  for (const auto& [lam, el] : duals) cols.push_back(lam);
  RatMatrix a(rows.size(), RatVector(cols.size(), RatFn(0)));
  RatVector b(rows.size(), RatFn(0));
  for (size_t r = 0; r < rows.size(); ++r) {
    for (size_t c = 0; c < cols.size(); ++c) {
      const auto& pv = duals.at(cols[c]).pv;
      auto it = pv.find(rows[r]);
      if (it != pv.end()) a[r][c] = it->second;
    }
    auto it = ch.coeffs.find(rows[r]);
    if (it != ch.coeffs.end()) b[r] = RatFn(it->second);
  }
  auto sol = solve_linear(a, b);
  if (!sol)
    throw error("character is not a combination of dual canonical characters");
  std::map<KostantPartition, LaurentPoly> out;
  for (size_t c = 0; c < cols.size(); ++c)
    if (!(*sol)[c].is_zero()) out[cols[c]] = (*sol)[c].to_laurent();
  return out;
}

std::map<KostantPartition, LaurentPoly> decompose(ShuffleContext& ctx,
                                                  const Character& ch,
                                                  const Weight& alpha,
                                                  const ConvexOrder& order) {
  PbwBasis basis = make_pbw_basis(ctx, alpha, order);
  CanonicalBasis cb = canonical_basis(ctx, basis);
  auto duals = dual_canonical_basis(basis, cb.p);
  return decompose_with(duals, ch);
}

bool parity_check(const Quiver& q, const Character& ch) {
  // p(i) = sum over j<k with i_j < i_k of the form, mod 2
  bool have_class = false;
  int cls = 0;
  for (const auto& [w, c] : ch.coeffs) {
    int p = 0;
    for (int a = 0; a < w.size(); ++a)
      for (int b = a + 1; b < w.size(); ++b)
        if (w.v[a] < w.v[b]) p += q.cartan(w.v[a], w.v[b]);
    p = ((p % 2) + 2) % 2;
    for (const auto& [e, coeff] : c.terms()) {
      int k = (((e - p) % 2) + 2) % 2;
      if (!have_class) {
        cls = k;
        have_class = true;
      } else if (k != cls) {
        return false;
      }
    }
  }
  return true;
}

std::string segment_label(const Quiver& q, const Root& r) {
  auto t = classify_finite_type(q);
  if (!t || t->family != 'A') return "";
  int lo = -1, hi = -1;
  for (int i = 0; i < q.size(); ++i)
    if (r.c[i] == 1) {
      if (lo < 0) lo = i;
      hi = i;
    } else if (r.c[i] != 0) {
      return "";
    }
  return "[" + q.names[lo] + "," + q.names[hi] + "]";
}

std::string multisegment_label(const Quiver& q, const KostantPartition& lam) {
  std::string out;
  for (const auto& part : lam.parts) {
    std::string s = segment_label(q, part);
    if (s.empty()) return "";
    if (!out.empty()) out += "+";
    out += s;
  }
  return out;
}

}  // namespace klr
