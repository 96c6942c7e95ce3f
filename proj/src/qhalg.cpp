#include "klr/qhalg.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <tuple>

namespace klr {

Int QPoly::constant_term() const {
  auto it = coeffs.find({0, 0});
  return it == coeffs.end() ? Int(0) : it->second;
}

QPoly QPoly::of(const Quiver& q, int i, int j) {
  QPoly p;
  if (i == j) return p;
  int a = q.m(i, j), b = q.m(j, i);
  // (v-u)^a (u-v)^b = (-1)^b (v-u)^(a+b)
  int d = a + b;
  for (int t = 0; t <= d; ++t) {
    // coefficient of v^t u^(d-t) in (v-u)^d is C(d,t) (-1)^(d-t)
    Int c;
    mpz_bin_uiui(c.get_mpz_t(), d, t);
    if ((d - t) % 2) c = -c;
    if (b % 2) c = -c;
    p.coeffs[{d - t, t}] = c;
  }
  return p;
}

bool QhKey::operator<(const QhKey& o) const {
  if (word != o.word) return word < o.word;
  if (perm != o.perm) return perm < o.perm;
  return exps < o.exps;
}

void QHElement::add(const QhKey& k, const LaurentPoly& c) {
  if (c.is_zero()) return;
  auto it = terms.find(k);
  if (it == terms.end()) {
    terms.emplace(k, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  }
}

QHElement QHElement::operator+(const QHElement& o) const {
  QHElement r = *this;
  for (const auto& [k, c] : o.terms) r.add(k, c);
  return r;
}

QHElement QHElement::operator-(const QHElement& o) const {
  QHElement r = *this;
  for (const auto& [k, c] : o.terms) r.add(k, -c);
  return r;
}

QHElement QHElement::operator-() const {
  QHElement r;
  for (const auto& [k, c] : terms) r.terms.emplace(k, -c);
  return r;
}

QHElement QHElement::scaled(const LaurentPoly& c) const {
  QHElement r;
  if (c.is_zero()) return r;
  for (const auto& [k, v] : terms) r.terms.emplace(k, v * c);
  return r;
}

std::string TruncSeries::to_string() const {
  return poly.to_string() + " + O(q^" + std::to_string(cutoff + 1) + ")";
}

namespace {

struct BfsTree {
  std::vector<int> root;
  std::map<std::vector<int>, std::vector<int>> parent;
};

// All reduced words of w connected by single braid moves, as a BFS tree
// rooted at the canonical word.
const BfsTree& bfs_tree(const Permutation& w) {
  static std::map<Permutation, BfsTree> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(w);
  if (it != cache.end()) return it->second;
  BfsTree tree;
  tree.root = reduced_word(w);
  std::deque<std::vector<int>> queue = {tree.root};
  std::map<std::vector<int>, bool> seen;
  seen[tree.root] = true;
  while (!queue.empty()) {
    std::vector<int> cur = queue.front();
    queue.pop_front();
    for (size_t p = 0; p + 1 < cur.size(); ++p) {
      if (std::abs(cur[p] - cur[p + 1]) > 1) {
        std::vector<int> nxt = cur;
        std::swap(nxt[p], nxt[p + 1]);
        if (!seen[nxt]) {
          seen[nxt] = true;
          tree.parent[nxt] = cur;
          queue.push_back(nxt);
        }
      }
      if (p + 2 < cur.size() && cur[p] == cur[p + 2] &&
          std::abs(cur[p] - cur[p + 1]) == 1) {
        std::vector<int> nxt = cur;
        std::swap(nxt[p], nxt[p + 1]);
        nxt[p + 2] = nxt[p];
        nxt[p + 1] = cur[p];
        nxt[p] = cur[p + 1];
        // window (a,b,a) -> (b,a,b)
        if (!seen[nxt]) {
          seen[nxt] = true;
          tree.parent[nxt] = cur;
          queue.push_back(nxt);
        }
      }
    }
  }
  return cache.emplace(w, std::move(tree)).first->second;
}

std::vector<std::vector<int>> path_to_root(const BfsTree& tree,
                                           const std::vector<int>& from) {
  std::vector<std::vector<int>> path = {from};
  while (path.back() != tree.root) {
    auto it = tree.parent.find(path.back());
    if (it == tree.parent.end())
      throw error("word is not a reduced expression of the permutation");
    path.push_back(it->second);
  }
  return path;
}

}  // namespace

QhAlgebra::QhAlgebra(const Quiver& q, const Weight& alpha)
    : quiver_(q), alpha_(alpha), n_(alpha.ht()) {
  quiver_.validate();
  if (alpha.size() != quiver_.size()) throw error("weight size mismatch");
  if (!alpha.nonneg()) throw error("weight outside Q^+");
  words_ = words_of_weight(quiver_, alpha_);
  for (size_t i = 0; i < words_.size(); ++i) word_index_[words_[i]] = i;
}

void QhAlgebra::check_word(const Word& i) const {
  if (!word_index_.count(i))
    throw error("word does not have weight alpha: " + i.to_string(quiver_));
}

void QhAlgebra::check_element(const QHElement& e) const {
  for (const auto& [k, c] : e.terms) {
    if (k.perm.size() != n_ || static_cast<int>(k.exps.size()) != n_)
      throw error("element does not belong to this weight block");
    check_word(k.word);
  }
}

QHElement QhAlgebra::idem(const Word& i) const {
  check_word(i);
  QHElement e;
  e.add(QhKey{i, Permutation::identity(n_), std::vector<int>(n_, 0)},
        LaurentPoly(1));
  return e;
}

QHElement QhAlgebra::one() const {
  QHElement e;
  for (const auto& w : words_)
    e.add(QhKey{w, Permutation::identity(n_), std::vector<int>(n_, 0)},
          LaurentPoly(1));
  return e;
}

QHElement QhAlgebra::x_idem(int k, const Word& i) const {
  check_word(i);
  if (k < 1 || k > n_) throw error("x index out of range");
  std::vector<int> e(n_, 0);
  e[k - 1] = 1;
  QHElement r;
  r.add(QhKey{i, Permutation::identity(n_), e}, LaurentPoly(1));
  return r;
}

QHElement QhAlgebra::x(int k) const {
  if (k < 1 || k > n_) throw error("x index out of range");
  QHElement r;
  std::vector<int> e(n_, 0);
  e[k - 1] = 1;
  for (const auto& w : words_)
    r.add(QhKey{w, Permutation::identity(n_), e}, LaurentPoly(1));
  return r;
}

QHElement QhAlgebra::tau_idem(int k, const Word& i) {
  check_word(i);
  if (k < 1 || k >= n_) throw error("tau index out of range");
  QHElement r;
  r.add(QhKey{i, Permutation::transposition(n_, k), std::vector<int>(n_, 0)},
        LaurentPoly(1));
  return r;
}

QHElement QhAlgebra::tau(int k) const {
  if (k < 1 || k >= n_) throw error("tau index out of range");
  QHElement r;
  for (const auto& w : words_)
    r.add(QhKey{w, Permutation::transposition(n_, k), std::vector<int>(n_, 0)},
          LaurentPoly(1));
  return r;
}

QHElement QhAlgebra::mul_x(int l, const QHElement& e) const {
  QHElement r;
  for (const auto& [k, c] : e.terms) {
    QhKey k2 = k;
    k2.exps[l - 1] += 1;
    r.add(k2, c);
  }
  return r;
}

QHElement QhAlgebra::mul_poly(const MultiPoly& f, const QHElement& e) const {
  QHElement r;
  for (const auto& [fe, fc] : f.terms())
    for (const auto& [k, c] : e.terms) {
      QhKey k2 = k;
      for (int t = 0; t < n_; ++t) k2.exps[t] += fe[t];
      r.add(k2, c * LaurentPoly(fc));
    }
  return r;
}

QHElement QhAlgebra::braid_correction(const std::vector<int>& gens, size_t pos,
                                      const Word& i) {
  // gens has window (a, b, a) at pos; the relation lives at strand slots
  // kk, kk+1, kk+2 with kk = min(a, b), below the suffix.
  int a = gens[pos], b = gens[pos + 1];
  int kk = std::min(a, b);
  std::vector<int> suffix(gens.begin() + pos + 3, gens.end());
  Permutation ws = perm_of_word(n_, suffix);
  Word iw = ws.act(i);
  if (iw.letter(kk) != iw.letter(kk + 2)) return {};
  QPoly qij = QPoly::of(quiver_, iw.letter(kk), iw.letter(kk + 1));
  // [q(x_kk, x_kk+1) - q(x_kk+2, x_kk+1)] / (x_kk - x_kk+2)
  MultiPoly Q(n_);
  for (const auto& [uv, c] : qij.coeffs) {
    auto [du, dv] = uv;
    for (int t = 0; t <= du - 1; ++t) {
      std::vector<int> e(n_, 0);
      e[kk - 1] = t;
      e[kk] = dv;
      e[kk + 1] = du - 1 - t;
      Q.add_term(std::move(e), c);
    }
  }
  if (Q.is_zero()) return {};
  QHElement corr = mul_poly(Q, eval_reduced(suffix, i));
  for (size_t t = pos; t-- > 0;) corr = mul_tau(gens[t], corr);
  // sign: window (k+1, k, k+1) enters with +, (k, k+1, k) with -
  return a > b ? corr : -corr;
}

QHElement QhAlgebra::eval_reduced(const std::vector<int>& gens, const Word& i) {
  check_word(i);
  Permutation w = perm_of_word(n_, gens);
  if (static_cast<int>(gens.size()) != w.length())
    throw error("eval_reduced: word is not reduced");
  const BfsTree& tree = bfs_tree(w);
  auto path = path_to_root(tree, gens);
  QHElement r;
  r.add(QhKey{i, w, std::vector<int>(n_, 0)}, LaurentPoly(1));
  // tau_child = tau_parent + correction, walking the tree path
  for (size_t j = path.size() - 1; j-- > 0;) {
    const auto& child = path[j];
    const auto& par = path[j + 1];
    size_t pos = 0;
    while (child[pos] == par[pos]) ++pos;
    if (pos + 2 < child.size() && child[pos] == child[pos + 2] &&
        std::abs(child[pos] - child[pos + 1]) == 1 &&
        par[pos] == child[pos + 1]) {
      r = r + braid_correction(child, pos, i);
    }
    // commuting 2-moves contribute nothing
  }
  return r;
}

const QHElement& QhAlgebra::tau_compose(int k, const Permutation& v,
                                        const Word& i) {
  auto key = std::make_tuple(k, v, i);
  auto it = tau_cache_.find(key);
  if (it != tau_cache_.end()) return it->second;

  QHElement result;
  Permutation u = Permutation::transposition(n_, k).compose(v);
  std::vector<int> canon_v = reduced_word(v);
  if (u.length() == v.length() + 1) {
    std::vector<int> word = {k};
    word.insert(word.end(), canon_v.begin(), canon_v.end());
    result = eval_reduced(word, i);
  } else {
    // descent: rewrite tau_v along a braid path to a word starting with k,
    // then apply the quadratic relation to the doubled crossing
    Permutation vp = u;  // t_k v, one shorter
    std::vector<int> target = {k};
    auto canon_vp = reduced_word(vp);
    target.insert(target.end(), canon_vp.begin(), canon_vp.end());
    const BfsTree& tree = bfs_tree(v);
    auto path = path_to_root(tree, target);  // target ... canon(v)
    // tau_canon(v) = tau_target - sum of corrections along the path
    QHElement corrections;
    for (size_t j = 0; j + 1 < path.size(); ++j) {
      const auto& child = path[j];
      const auto& par = path[j + 1];
      size_t pos = 0;
      while (child[pos] == par[pos]) ++pos;
      if (pos + 2 < child.size() && child[pos] == child[pos + 2] &&
          std::abs(child[pos] - child[pos + 1]) == 1 &&
          par[pos] == child[pos + 1]) {
        corrections = corrections + braid_correction(child, pos, i);
      }
    }
    // main term: tau_k tau_k tau_{vp} 1_i via the quadratic relation
    Word wv = vp.act(i);
    QPoly qij = QPoly::of(quiver_, wv.letter(k), wv.letter(k + 1));
    QHElement main;
    if (!qij.is_zero()) {
      MultiPoly Q(n_);
      for (const auto& [uv, c] : qij.coeffs) {
        auto [du, dv] = uv;
        std::vector<int> e(n_, 0);
        e[k - 1] = du;
        e[k] = dv;
        Q.add_term(std::move(e), c);
      }
      QHElement base;
      base.add(QhKey{i, vp, std::vector<int>(n_, 0)}, LaurentPoly(1));
      main = mul_poly(Q, base);
    }
    if (!corrections.is_zero()) {
      QHElement tk_corr = mul_tau(k, corrections);
      result = main - tk_corr;
    } else {
      result = main;
    }
  }
  return tau_cache_.emplace(std::move(key), std::move(result)).first->second;
}

QHElement QhAlgebra::mul_tau(int k, const QHElement& e) {
  QHElement r;
  for (const auto& [key, c] : e.terms) {
    Word left = key.left_word();
    // dots slide through the crossing, plus the splitting term on equal
    // strand colors
    if (left.letter(k) == left.letter(k + 1)) {
      for (auto& [e2, s] : demazure_exps(key.exps, k)) {
        QhKey k2{key.word, key.perm, std::move(e2)};
        r.add(k2, s > 0 ? c : -c);
      }
    }
    std::vector<int> swapped = key.exps;
    std::swap(swapped[k - 1], swapped[k]);
    const QHElement& t = tau_compose(k, key.perm, key.word);
    for (const auto& [tk, tc] : t.terms) {
      QhKey k2 = tk;
      for (int p = 0; p < n_; ++p) k2.exps[p] += swapped[p];
      r.add(k2, c * tc);
    }
  }
  return r;
}

QHElement QhAlgebra::multiply(const QHElement& a, const QHElement& b) {
  check_element(a);
  check_element(b);
  // group b's monomials by their left word
  std::map<Word, QHElement> by_left;
  for (const auto& [k, c] : b.terms) by_left[k.left_word()].add(k, c);
  QHElement result;
  std::map<std::pair<Permutation, Word>, QHElement> applied;
  for (const auto& [ka, ca] : a.terms) {
    auto bit = by_left.find(ka.word);
    if (bit == by_left.end()) continue;
    auto memo_key = std::make_pair(ka.perm, ka.word);
    auto mit = applied.find(memo_key);
    if (mit == applied.end()) {
      QHElement e = bit->second;
      auto canon = reduced_word(ka.perm);
      for (auto gi = canon.rbegin(); gi != canon.rend(); ++gi)
        e = mul_tau(*gi, e);
      mit = applied.emplace(memo_key, std::move(e)).first;
    }
    for (const auto& [kb, cb] : mit->second.terms) {
      QhKey k2 = kb;
      for (int p = 0; p < n_; ++p) k2.exps[p] += ka.exps[p];
      result.add(k2, ca * cb);
    }
  }
  return result;
}

int QhAlgebra::monomial_degree(const QhKey& k) const {
  int d = deg_w(quiver_, k.perm, k.word);
  for (int e : k.exps) d += 2 * e;
  return d;
}

std::optional<int> QhAlgebra::degree(const QHElement& a) const {
  if (a.is_zero()) return 0;
  std::optional<int> d;
  for (const auto& [k, c] : a.terms) {
    int dk = monomial_degree(k);
    if (!d)
      d = dk;
    else if (*d != dk)
      return std::nullopt;
  }
  return d;
}

QHElement QhAlgebra::psi(const QHElement& a) {
  QHElement r;
  for (const auto& [k, c] : a.terms) {
    QHElement m;
    m.add(QhKey{k.left_word(), Permutation::identity(n_), k.exps},
          LaurentPoly(1));
    for (int g : reduced_word(k.perm)) m = mul_tau(g, m);
    r = r + m.scaled(c);
  }
  return r;
}

TruncSeries QhAlgebra::graded_dim_formula(const Word& i, const Word& j,
                                          int cutoff) const {
  check_word(i);
  check_word(j);
  TruncSeries s;
  s.cutoff = cutoff;
  for (const auto& w : all_permutations(n_)) {
    if (w.act(i) != j) continue;
    int d0 = deg_w(quiver_, w, i);
    // multiply q^d0 by 1/(1-q^2)^n truncated
    for (int k = 0; d0 + 2 * k <= cutoff; ++k) {
      Int c;
      mpz_bin_uiui(c.get_mpz_t(), n_ - 1 + k, n_ - 1);
      s.poly += LaurentPoly::term(c, d0 + 2 * k);
    }
  }
  return s;
}

TruncSeries QhAlgebra::enumerate_basis(const Word& i, const Word& j,
                                       int cutoff) const {
  check_word(i);
  check_word(j);
  TruncSeries s;
  s.cutoff = cutoff;
  for (const auto& w : all_permutations(n_)) {
    if (w.act(i) != j) continue;
    int d0 = deg_w(quiver_, w, i);
    if (d0 > cutoff) continue;
    int budget = (cutoff - d0) / 2;
    // walk every exponent vector with |m| <= budget
    std::vector<int> exps(n_, 0);
    auto rec = [&](auto&& self, int slot, int used) -> void {
      if (slot == n_) {
        s.poly += LaurentPoly::q(d0 + 2 * used);
        return;
      }
      for (int v = 0; used + v <= budget; ++v) {
        exps[slot] = v;
        self(self, slot + 1, used + v);
      }
      exps[slot] = 0;
    };
    rec(rec, 0, 0);
  }
  return s;
}

Word QhAlgebra::sorted_word() const {
  std::vector<int> letters;
  for (int i = 0; i < quiver_.size(); ++i)
    for (int c = 0; c < alpha_.c[i]; ++c) letters.push_back(i);
  return Word(letters);
}

std::vector<QHElement> QhAlgebra::central_elements() const {
  Word i0 = sorted_word();
  std::vector<QHElement> zs;
  for (int j = 1; j <= n_; ++j) {
    QHElement z;
    for (const auto& w : words_) {
      // minimal coset representative u with u(i0) = w: send the ascending
      // block of each letter in i0 to its ascending positions in w
      std::vector<int> im(n_, -1);
      std::map<int, std::vector<int>> slots;
      for (int p = 0; p < n_; ++p) slots[w.v[p]].push_back(p);
      std::map<int, int> next;
      for (int p = 0; p < n_; ++p) {
        int letter = i0.v[p];
        im[p] = slots[letter][next[letter]++];
      }
      Permutation u{im};
      std::vector<int> exps(n_, 0);
      exps[u(j) - 1] = 1;
      z.add(QhKey{w, Permutation::identity(n_), exps}, LaurentPoly(1));
    }
    zs.push_back(std::move(z));
  }
  return zs;
}

std::string QhAlgebra::to_string(const QHElement& e) const {
  if (e.is_zero()) return "0";
  std::string out;
  for (const auto& [k, c] : e.terms) {
    if (!out.empty()) out += " + ";
    std::string body;
    for (int p = 0; p < n_; ++p)
      if (k.exps[p] > 0) {
        if (!body.empty()) body += " ";
        body += "x" + std::to_string(p + 1);
        if (k.exps[p] > 1) body += "^" + std::to_string(k.exps[p]);
      }
    auto rw = reduced_word(k.perm);
    if (!rw.empty()) {
      if (!body.empty()) body += " ";
      body += "tau[";
      for (size_t t = 0; t < rw.size(); ++t) {
        if (t) body += ",";
        body += std::to_string(rw[t]);
      }
      body += "]";
    }
    if (!body.empty()) body += " ";
    body += "1_(" + k.word.to_string(quiver_) + ")";
    if (c.is_one()) {
      out += body;
    } else {
      out += "(" + c.to_string() + ") * " + body;
    }
  }
  return out;
}

namespace {

void check_serre_block(const QhAlgebra& alg, int i, int j, int n) {
  Weight expect = Weight::zero(alg.quiver().size());
  expect.c[i] += n;
  expect.c[j] += 1;
  if (alg.alpha() != expect)
    throw error("algebra weight does not match the Serre block");
}

}  // namespace

QHElement serre_idempotent(QhAlgebra& alg, int i, int j, int r, int s) {
  int n = r + s;
  check_serre_block(alg, i, j, n);
  std::vector<int> letters;
  for (int t = 0; t < r; ++t) letters.push_back(i);
  letters.push_back(j);
  for (int t = 0; t < s; ++t) letters.push_back(i);
  Word w(letters);
  std::vector<int> exps(n + 1, 0);
  for (int p = 2; p <= r; ++p) exps[p - 1] = p - 1;
  for (int t = 2; t <= s; ++t) exps[r + t] = t - 1;
  std::vector<int> im(n + 1);
  for (int p = 1; p <= r; ++p) im[p - 1] = r - p;           // block longest
  im[r] = r;                                                // j strand fixed
  for (int p = r + 2; p <= n + 1; ++p) im[p - 1] = n + r + 2 - p;
  QHElement e;
  e.add(QhKey{w, Permutation{im}, exps}, LaurentPoly(1));
  return e;
}

QHElement serre_tau(QhAlgebra& alg, int i, int j, int r, int s) {
  if (s < 1) throw error("serre_tau needs s >= 1");
  int n = r + s;
  check_serre_block(alg, i, j, n);
  std::vector<int> letters;
  for (int t = 0; t < r + 1; ++t) letters.push_back(i);
  letters.push_back(j);
  for (int t = 0; t < s - 1; ++t) letters.push_back(i);
  Word bottom(letters);
  // leftmost strand crosses right over r i-strands and the j-strand,
  // landing at position r+2; the strands it passes shift left by one
  std::vector<int> im(n + 1);
  im[0] = r + 1;
  for (int p = 2; p <= r + 2; ++p) im[p - 1] = p - 2;
  for (int p = r + 3; p <= n + 1; ++p) im[p - 1] = p - 1;
  QHElement e;
  e.add(QhKey{bottom, Permutation{im}, std::vector<int>(n + 1, 0)},
        LaurentPoly(1));
  return e;
}

}  // namespace klr
