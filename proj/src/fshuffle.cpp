#include "klr/fshuffle.hpp"

#include <algorithm>

namespace klr {

void Character::add(const Word& w, const LaurentPoly& c) {
  if (c.is_zero()) return;
  auto it = coeffs.find(w);
  if (it == coeffs.end()) {
    coeffs.emplace(w, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) coeffs.erase(it);
  }
}

Character Character::operator+(const Character& o) const {
  Character r = *this;
  for (const auto& [w, c] : o.coeffs) r.add(w, c);
  return r;
}

Character Character::operator-(const Character& o) const {
  Character r = *this;
  for (const auto& [w, c] : o.coeffs) r.add(w, -c);
  return r;
}

Character Character::scaled(const LaurentPoly& c) const {
  Character r;
  if (c.is_zero()) return r;
  for (const auto& [w, v] : coeffs) r.coeffs.emplace(w, v * c);
  return r;
}

std::string Character::to_string(const Quiver& q) const {
  std::string out;
  for (const auto& [w, c] : coeffs) {
    if (!out.empty()) out += "\n";
    out += w.to_string(q) + " : " + c.to_string();
  }
  return out.empty() ? "0" : out;
}

Character shuffle(const Quiver& q, const Word& i, const Word& j) {
  int m = i.size(), n = j.size();
  Character out;
  // choose the slots of the first block among m+n positions
  std::vector<int> sel(m + n, 0);
  std::fill(sel.begin(), sel.begin() + m, 1);
  std::sort(sel.begin(), sel.end(), std::greater<int>());
  // iterate over all 0/1 masks with m ones, in a stable order
  std::vector<std::vector<int>> masks;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int pos, int used) -> void {
    if (pos == m + n) {
      if (used == m) masks.push_back(cur);
      return;
    }
    if (used < m) {
      cur.push_back(1);
      self(self, pos + 1, used + 1);
      cur.pop_back();
    }
    if (pos - used < n) {
      cur.push_back(0);
      self(self, pos + 1, used);
      cur.pop_back();
    }
  };
  rec(rec, 0, 0);
  for (const auto& mask : masks) {
    std::vector<int> word(m + n);
    std::vector<int> slot1, slot2;
    int a = 0, b = 0;
    for (int p = 0; p < m + n; ++p) {
      if (mask[p]) {
        word[p] = i.v[a++];
        slot1.push_back(p);
      } else {
        word[p] = j.v[b++];
        slot2.push_back(p);
      }
    }
    // inversions pair a letter of j that lands before a letter of i
    int deg = 0;
    for (int pa = 0; pa < m; ++pa)
      for (int pb = 0; pb < n; ++pb)
        if (slot1[pa] > slot2[pb]) deg -= q.cartan(i.v[pa], j.v[pb]);
    out.add(Word(word), LaurentPoly::q(deg));
  }
  return out;
}

Character shuffle(const Quiver& q, const Character& a, const Character& b) {
  Character out;
  for (const auto& [wa, ca] : a.coeffs)
    for (const auto& [wb, cb] : b.coeffs) {
      Character s = shuffle(q, wa, wb);
      for (const auto& [w, c] : s.coeffs) out.add(w, c * ca * cb);
    }
  return out;
}

bool FElement::is_zero() const {
  for (const auto& [w, c] : pv)
    if (!c.is_zero()) return false;
  return true;
}

FElement FElement::operator+(const FElement& o) const {
  if (wt != o.wt) throw error("FElement weight mismatch");
  FElement r = *this;
  for (const auto& [w, c] : o.pv) {
    auto [it, fresh] = r.pv.emplace(w, c);
    if (!fresh) it->second += c;
  }
  std::erase_if(r.pv, [](const auto& kv) { return kv.second.is_zero(); });
  if (r.expr && o.expr) {
    for (const auto& [w, c] : *o.expr) {
      auto [it, fresh] = r.expr->emplace(w, c);
      if (!fresh) it->second += c;
    }
    std::erase_if(*r.expr, [](const auto& kv) { return kv.second.is_zero(); });
  } else {
    r.expr.reset();
  }
  return r;
}

FElement FElement::operator-(const FElement& o) const {
  return *this + o.scaled(RatFn(-1));
}

FElement FElement::scaled(const RatFn& c) const {
  FElement r = *this;
  for (auto& [w, v] : r.pv) v *= c;
  if (r.expr)
    for (auto& [w, v] : *r.expr) v *= c;
  return r;
}

bool FElement::operator==(const FElement& o) const {
  if (wt != o.wt) return false;
  auto normal = [](const std::map<Word, RatFn>& m) {
    std::map<Word, RatFn> r;
    for (const auto& [w, c] : m)
      if (!c.is_zero()) r.emplace(w, c);
    return r;
  };
  return normal(pv) == normal(o.pv);
}

Character FElement::character() const {
  Character ch;
  for (const auto& [w, c] : pv) {
    if (c.is_zero()) continue;
    ch.add(w, c.to_laurent());
  }
  return ch;
}

RatFn ShuffleContext::gram_entry(const Word& i, const Word& j) {
  int n = i.size();
  // words of different weights pair to zero
  if (j.size() != n ||
      i.weight(quiver_.size()) != j.weight(quiver_.size()))
    return RatFn(0);
  LaurentPoly num;
  for (const auto& w : all_permutations(n))
    if (w.act(i) == j) num += LaurentPoly::q(deg_w(quiver_, w, i));
  LaurentPoly den(1);
  LaurentPoly f = LaurentPoly(1) - LaurentPoly::q(2);
  for (int t = 0; t < n; ++t) den *= f;
  return RatFn(num, den);
}

const ShuffleContext::GramData& ShuffleContext::gram(const Weight& alpha) {
  auto it = gram_cache_.find(alpha);
  if (it != gram_cache_.end()) return it->second;
  GramData g;
  g.words = words_of_weight(quiver_, alpha);
  size_t m = g.words.size();
  g.matrix.assign(m, RatVector(m, RatFn(0)));
  for (size_t a = 0; a < m; ++a)
    for (size_t b = a; b < m; ++b) {
      RatFn v = gram_entry(g.words[b], g.words[a]);
      g.matrix[a][b] = v;
      g.matrix[b][a] = v;  // the form is symmetric
    }
  return gram_cache_.emplace(alpha, std::move(g)).first->second;
}

FElement ShuffleContext::unit() {
  FElement e;
  e.wt = Weight::zero(quiver_.size());
  e.pv[Word{}] = RatFn(1);
  e.expr = std::map<Word, RatFn>{{Word{}, RatFn(1)}};
  return e;
}

FElement ShuffleContext::theta(int vertex) {
  std::vector<int> letters = {vertex};
  return theta_word(Word(letters));
}

FElement ShuffleContext::theta_word(const Word& i) {
  FElement e;
  e.wt = i.weight(quiver_.size());
  const GramData& g = gram(e.wt);
  e.expr = std::map<Word, RatFn>{{i, RatFn(1)}};
  for (const auto& w : g.words) {
    RatFn v = gram_entry(i, w);
    if (!v.is_zero()) e.pv[w] = v;
  }
  return e;
}

FElement ShuffleContext::from_character(const Character& ch,
                                        const Weight& alpha) {
  FElement e;
  e.wt = alpha;
  for (const auto& [w, c] : ch.coeffs) {
    if (w.weight(quiver_.size()) != alpha)
      throw error("character word has wrong weight");
    e.pv[w] = RatFn(c);
  }
  return e;
}

FElement ShuffleContext::fmul(const FElement& x, const FElement& y) {
  FElement r;
  r.wt = x.wt + y.wt;
  for (const auto& [wx, cx] : x.pv) {
    if (cx.is_zero()) continue;
    for (const auto& [wy, cy] : y.pv) {
      if (cy.is_zero()) continue;
      Character s = shuffle(quiver_, wx, wy);
      RatFn c = cx * cy;
      for (const auto& [w, sc] : s.coeffs) {
        RatFn add = c * RatFn(sc);
        auto [it, fresh] = r.pv.emplace(w, add);
        if (!fresh) it->second += add;
      }
    }
  }
  std::erase_if(r.pv, [](const auto& kv) { return kv.second.is_zero(); });
  if (x.expr && y.expr) {
    std::map<Word, RatFn> ex;
    for (const auto& [wx, cx] : *x.expr)
      for (const auto& [wy, cy] : *y.expr) {
        RatFn c = cx * cy;
        if (c.is_zero()) continue;
        Word w = wx.concat(wy);
        auto [it, fresh] = ex.emplace(w, c);
        if (!fresh) it->second += c;
      }
    std::erase_if(ex, [](const auto& kv) { return kv.second.is_zero(); });
    r.expr = std::move(ex);
  }
  return r;
}

FElement ShuffleContext::power(const FElement& x, int n) {
  FElement r = unit();
  for (int t = 0; t < n; ++t) r = fmul(r, x);
  return r;
}

FElement ShuffleContext::divided_power(int vertex, int n) {
  if (n < 0) throw error("divided_power needs n >= 0");
  FElement r = power(theta(vertex), n);
  return r.scaled(RatFn(LaurentPoly(1), qfact(n)));
}

RatFn ShuffleContext::lusztig_form(const FElement& x, const FElement& y) {
  const FElement* xp = &x;
  FElement solved;
  if (!x.expr) {
    solved = solve_expr(x);
    xp = &solved;
  }
  RatFn r(0);
  for (const auto& [w, c] : *xp->expr) {
    auto it = y.pv.find(w);
    if (it != y.pv.end()) r += c * it->second;
  }
  return r;
}

FElement ShuffleContext::solve_expr(const FElement& x) {
  const GramData& g = gram(x.wt);
  size_t m = g.words.size();
  RatVector rhs(m, RatFn(0));
  for (size_t a = 0; a < m; ++a) {
    auto it = x.pv.find(g.words[a]);
    if (it != x.pv.end()) rhs[a] = it->second;
  }
  auto sol = solve_linear(g.matrix, rhs);
  if (!sol)
    throw error("pairing vector is not in f_alpha (Gram system inconsistent)");
  FElement r = x;
  std::map<Word, RatFn> ex;
  for (size_t b = 0; b < m; ++b)
    if (!(*sol)[b].is_zero()) ex.emplace(g.words[b], (*sol)[b]);
  r.expr = std::move(ex);
  // re-verify G expr = pv
  for (size_t a = 0; a < m; ++a) {
    RatFn acc(0);
    for (size_t b = 0; b < m; ++b) {
      auto it = r.expr->find(g.words[b]);
      if (it != r.expr->end()) acc += g.matrix[a][b] * it->second;
    }
    if (acc != rhs[a]) throw error("Gram solve verification failed");
  }
  return r;
}

FElement ShuffleContext::serre_check(int i, int j) {
  if (i == j) throw error("serre_check needs distinct vertices");
  int n = 1 - quiver_.cartan(i, j);
  FElement tj = theta(j);
  FElement acc;
  acc.wt = Weight::zero(quiver_.size());
  bool first = true;
  for (int r = 0; r <= n; ++r) {
    int s = n - r;
    FElement term = fmul(fmul(divided_power(i, r), tj), divided_power(i, s));
    if (r % 2) term = term.scaled(RatFn(-1));
    if (first) {
      acc = term;
      first = false;
    } else {
      acc = acc + term;
    }
  }
  return acc;
}

FElement ShuffleContext::bar_f(const FElement& x) {
  if (!x.expr) throw error("bar_f needs an expr");
  FElement r;
  r.wt = x.wt;
  std::map<Word, RatFn> ex;
  for (const auto& [w, c] : *x.expr)
    if (!c.is_zero()) ex.emplace(w, c.barred());
  // pv = Gram transform of the barred expr
  const GramData& g = gram(x.wt);
  for (size_t a = 0; a < g.words.size(); ++a) {
    RatFn acc(0);
    for (size_t b = 0; b < g.words.size(); ++b) {
      auto it = ex.find(g.words[b]);
      if (it != ex.end()) acc += g.matrix[a][b] * it->second;
    }
    if (!acc.is_zero()) r.pv[g.words[a]] = acc;
  }
  r.expr = std::move(ex);
  return r;
}

std::map<std::pair<Word, Word>, LaurentPoly> restrict_character(
    const Quiver& q, const Character& ch, const Weight& beta,
    const Weight& gamma) {
  std::map<std::pair<Word, Word>, LaurentPoly> out;
  int hb = beta.ht();
  for (const auto& [w, c] : ch.coeffs) {
    if (w.size() != beta.ht() + gamma.ht()) continue;
    Word prefix = w.subword(1, hb);
    if (prefix.weight(q.size()) != beta) continue;
    Word suffix = w.subword(hb + 1, w.size() - hb);
    auto key = std::make_pair(prefix, suffix);
    auto [it, fresh] = out.emplace(key, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) out.erase(it);
    }
  }
  return out;
}

namespace {

// all subweights b1 <= b with b1 + b2 = b
void subweights(const Weight& b, std::vector<Weight>& out) {
  Weight cur = Weight::zero(b.size());
  auto rec = [&](auto&& self, int i) -> void {
    if (i == b.size()) {
      out.push_back(cur);
      return;
    }
    for (int v = 0; v <= b.c[i]; ++v) {
      cur.c[i] = v;
      self(self, i + 1);
    }
    cur.c[i] = 0;
  };
  rec(rec, 0);
}

}  // namespace

bool mackey_character_check(const Quiver& q, const Character& chX,
                            const Character& chY, const Weight& beta,
                            const Weight& gamma) {
  // weights of the two characters
  if (chX.is_zero() || chY.is_zero()) return true;
  Weight wx = chX.coeffs.begin()->first.weight(q.size());
  Weight wy = chY.coeffs.begin()->first.weight(q.size());
  for (const auto& [w, c] : chX.coeffs)
    if (w.weight(q.size()) != wx) throw error("chX is not weight-homogeneous");
  for (const auto& [w, c] : chY.coeffs)
    if (w.weight(q.size()) != wy) throw error("chY is not weight-homogeneous");
  if (wx + wy != beta + gamma) throw error("mackey: weight mismatch");

  auto lhs = restrict_character(q, shuffle(q, chX, chY), beta, gamma);

  std::map<std::pair<Word, Word>, LaurentPoly> rhs;
  std::vector<Weight> b1s;
  subweights(wx, b1s);
  for (const auto& beta1 : b1s) {
    Weight beta2 = wx - beta1;
    Weight gamma1 = beta - beta1;
    if (!gamma1.nonneg()) continue;
    Weight gamma2 = wy - gamma1;
    if (!gamma2.nonneg()) continue;
    if (beta2 + gamma2 != gamma) continue;
    int twist = -form(q, beta2, gamma1);
    auto rx = restrict_character(q, chX, beta1, beta2);
    auto ry = restrict_character(q, chY, gamma1, gamma2);
    for (const auto& [px, cx] : rx)
      for (const auto& [py, cy] : ry) {
        // first factor: a1 o b1, second: a2 o b2, twisted
        Character s1 = shuffle(q, px.first, py.first);
        Character s2 = shuffle(q, px.second, py.second);
        LaurentPoly c = cx * cy * LaurentPoly::q(twist);
        for (const auto& [w1, c1] : s1.coeffs)
          for (const auto& [w2, c2] : s2.coeffs) {
            auto key = std::make_pair(w1, w2);
            auto [it, fresh] = rhs.emplace(key, c * c1 * c2);
            if (!fresh) {
              it->second += c * c1 * c2;
              if (it->second.is_zero()) rhs.erase(it);
            }
          }
      }
  }
  return lhs == rhs;
}

}  // namespace klr
