#include "klr/rootdata.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "json.hpp"

namespace klr {

int Quiver::vertex(const std::string& name) const {
  for (int i = 0; i < size(); ++i)
    if (names[i] == name) return i;
  throw error("unknown vertex name: " + name);
}

void Quiver::validate() const {
  int n = size();
  if (n == 0) throw error("quiver has no vertices");
  if (static_cast<int>(mult.size()) != n)
    throw error("multiplicity matrix size mismatch");
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(mult[i].size()) != n)
      throw error("multiplicity matrix size mismatch");
    if (mult[i][i] != 0) throw error("quiver has a loop at " + names[i]);
    for (int j = 0; j < n; ++j)
      if (mult[i][j] < 0) throw error("negative edge multiplicity");
  }
  std::set<std::string> seen(names.begin(), names.end());
  if (static_cast<int>(seen.size()) != n)
    throw error("duplicate vertex names");
}

Quiver Quiver::from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw error(std::string("malformed quiver JSON: ") + e.what());
  }
  Quiver q;
  if (!j.contains("vertices") || !j["vertices"].is_array())
    throw error("quiver JSON missing \"vertices\" array");
  for (const auto& v : j["vertices"]) {
    if (!v.is_string()) throw error("vertex names must be strings");
    q.names.push_back(v.get<std::string>());
  }
  int n = q.size();
  q.mult.assign(n, std::vector<int>(n, 0));
  if (j.contains("edges")) {
    if (!j["edges"].is_array()) throw error("\"edges\" must be an array");
    for (const auto& e : j["edges"]) {
      if (!e.is_array() || e.size() < 2 || e.size() > 3)
        throw error("edge must be [from, to] or [from, to, multiplicity]");
      int a = q.vertex(e[0].get<std::string>());
      int b = q.vertex(e[1].get<std::string>());
      int m = e.size() == 3 ? e[2].get<int>() : 1;
      q.mult[a][b] += m;
    }
  }
  q.validate();
  return q;
}

Quiver Quiver::single_vertex() {
  Quiver q;
  q.names = {"1"};
  q.mult = {{0}};
  return q;
}

Quiver Quiver::type_a(int n) {
  Quiver q;
  for (int i = 1; i <= n; ++i) q.names.push_back(std::to_string(i));
  q.mult.assign(n, std::vector<int>(n, 0));
  for (int i = 0; i + 1 < n; ++i) q.mult[i][i + 1] = 1;
  return q;
}

Quiver Quiver::type_d(int n) {
  if (n < 4) throw error("type D needs rank >= 4");
  Quiver q;
  for (int i = 1; i <= n; ++i) q.names.push_back(std::to_string(i));
  q.mult.assign(n, std::vector<int>(n, 0));
  // 1 - 2 - ... - (n-2), with n-1 and n both joined to n-2
  for (int i = 0; i + 1 < n - 2; ++i) q.mult[i][i + 1] = 1;
  q.mult[n - 3][n - 2] = 1;
  q.mult[n - 3][n - 1] = 1;
  return q;
}

Quiver Quiver::kronecker() {
  Quiver q;
  q.names = {"0", "1"};
  q.mult = {{0, 2}, {0, 0}};
  return q;
}

CartanForm CartanForm::of(const Quiver& q) {
  int n = q.size();
  CartanForm f;
  f.entries.assign(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) f.entries[i][j] = q.cartan(i, j);
  return f;
}

Weight Weight::simple(int n, int i) {
  Weight w = zero(n);
  w.c[i] = 1;
  return w;
}

int Weight::ht() const { return std::accumulate(c.begin(), c.end(), 0); }

bool Weight::is_zero() const {
  return std::all_of(c.begin(), c.end(), [](int x) { return x == 0; });
}

bool Weight::nonneg() const {
  return std::all_of(c.begin(), c.end(), [](int x) { return x >= 0; });
}

Weight Weight::operator+(const Weight& o) const {
  Weight r = *this;
  for (size_t i = 0; i < c.size(); ++i) r.c[i] += o.c[i];
  return r;
}

Weight Weight::operator-(const Weight& o) const {
  Weight r = *this;
  for (size_t i = 0; i < c.size(); ++i) r.c[i] -= o.c[i];
  return r;
}

std::string Weight::to_string() const {
  std::string s;
  for (size_t i = 0; i < c.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(c[i]);
  }
  return s;
}

int form(const Quiver& q, const Weight& a, const Weight& b) {
  int r = 0;
  for (int i = 0; i < q.size(); ++i)
    for (int j = 0; j < q.size(); ++j)
      if (a.c[i] != 0 && b.c[j] != 0) r += a.c[i] * b.c[j] * q.cartan(i, j);
  return r;
}

Weight Word::weight(int nvertices) const {
  Weight w = Weight::zero(nvertices);
  for (int x : v) w.c[x] += 1;
  return w;
}

Word Word::concat(const Word& o) const {
  Word r = *this;
  r.v.insert(r.v.end(), o.v.begin(), o.v.end());
  return r;
}

Word Word::subword(int from, int len) const {
  Word r;
  r.v.assign(v.begin() + (from - 1), v.begin() + (from - 1) + len);
  return r;
}

std::string Word::to_string(const Quiver& q) const {
  bool single = true;
  for (const auto& n : q.names)
    if (n.size() != 1) single = false;
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (!single && i) s += ",";
    s += q.names[v[i]];
  }
  return s;
}

Word Word::parse(const Quiver& q, const std::string& s) {
  Word w;
  if (s.find(',') != std::string::npos) {
    size_t start = 0;
    while (start <= s.size()) {
      size_t comma = s.find(',', start);
      std::string tok = s.substr(start, comma == std::string::npos
                                            ? std::string::npos
                                            : comma - start);
      if (!tok.empty()) w.v.push_back(q.vertex(tok));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
  } else {
    for (char ch : s) w.v.push_back(q.vertex(std::string(1, ch)));
  }
  return w;
}

std::vector<Word> words_of_weight(const Quiver& q, const Weight& alpha) {
  if (!alpha.nonneg()) throw error("weight outside Q^+");
  std::vector<Word> out;
  std::vector<int> cur;
  std::vector<int> remaining = alpha.c;
  int total = alpha.ht();
  auto rec = [&](auto&& self) -> void {
    if (static_cast<int>(cur.size()) == total) {
      out.push_back(Word(cur));
      return;
    }
    for (int i = 0; i < q.size(); ++i) {
      if (remaining[i] > 0) {
        remaining[i]--;
        cur.push_back(i);
        self(self);
        cur.pop_back();
        remaining[i]++;
      }
    }
  };
  rec(rec);
  return out;
}

Permutation Permutation::identity(int n) {
  std::vector<int> im(n);
  std::iota(im.begin(), im.end(), 0);
  return Permutation(im);
}

Permutation Permutation::transposition(int n, int k) {
  if (k < 1 || k >= n) throw error("transposition index out of range");
  Permutation w = identity(n);
  std::swap(w.im[k - 1], w.im[k]);
  return w;
}

Permutation Permutation::longest(int n) {
  std::vector<int> im(n);
  for (int i = 0; i < n; ++i) im[i] = n - 1 - i;
  return Permutation(im);
}

bool Permutation::is_identity() const {
  for (int i = 0; i < size(); ++i)
    if (im[i] != i) return false;
  return true;
}

int Permutation::length() const {
  int inv = 0;
  for (int i = 0; i < size(); ++i)
    for (int j = i + 1; j < size(); ++j)
      if (im[i] > im[j]) ++inv;
  return inv;
}

Permutation Permutation::compose(const Permutation& o) const {
  std::vector<int> r(size());
  for (int i = 0; i < size(); ++i) r[i] = im[o.im[i]];
  return Permutation(r);
}

Permutation Permutation::inverse() const {
  std::vector<int> r(size());
  for (int i = 0; i < size(); ++i) r[im[i]] = i;
  return Permutation(r);
}

Word Permutation::act(const Word& w) const {
  Permutation inv = inverse();
  std::vector<int> r(w.v.size());
  for (size_t p = 0; p < w.v.size(); ++p) r[p] = w.v[inv.im[p]];
  return Word(r);
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> im(n);
  std::iota(im.begin(), im.end(), 0);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation(im));
  } while (std::next_permutation(im.begin(), im.end()));
  return out;
}

std::vector<int> reduced_word(const Permutation& w) {
  Permutation cur = w;
  std::vector<int> rec;
  int n = w.size();
  for (;;) {
    int k = 0;
    for (int p = 1; p < n; ++p) {
      if (cur.im[p - 1] > cur.im[p]) {
        k = p;
        break;
      }
    }
    if (k == 0) break;
    std::swap(cur.im[k - 1], cur.im[k]);
    rec.push_back(k);
  }
  std::reverse(rec.begin(), rec.end());
  return rec;
}

Permutation perm_of_word(int n, const std::vector<int>& gens) {
  Permutation w = Permutation::identity(n);
  for (auto it = gens.rbegin(); it != gens.rend(); ++it)
    w = Permutation::transposition(n, *it).compose(w);
  return w;
}

int deg_w(const Quiver& q, const Permutation& w, const Word& i) {
  if (w.size() != i.size()) throw error("deg_w: size mismatch");
  int d = 0;
  for (int a = 1; a <= i.size(); ++a)
    for (int b = a + 1; b <= i.size(); ++b)
      if (w(a) > w(b)) d -= q.cartan(i.letter(a), i.letter(b));
  return d;
}

std::optional<FiniteType> classify_finite_type(const Quiver& q) {
  int n = q.size();
  // simply laced simple graph, no multi-edges
  std::vector<std::vector<int>> adj(n);
  int edges = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      int m = q.m(i, j) + q.m(j, i);
      if (m > 1) return std::nullopt;
      if (m == 1) {
        adj[i].push_back(j);
        adj[j].push_back(i);
        ++edges;
      }
    }
  if (edges != n - 1) return std::nullopt;  // tree or bust
  // connectivity
  std::vector<bool> seen(n, false);
  std::vector<int> stack = {0};
  seen[0] = true;
  int count = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int u : adj[v])
      if (!seen[u]) {
        seen[u] = true;
        ++count;
        stack.push_back(u);
      }
  }
  if (count != n) return std::nullopt;
  std::vector<int> tri;
  for (int i = 0; i < n; ++i) {
    if (adj[i].size() > 3) return std::nullopt;
    if (adj[i].size() == 3) tri.push_back(i);
  }
  if (tri.empty()) return FiniteType{'A', n};
  if (tri.size() > 1) return std::nullopt;
  // branch lengths from the trivalent node
  int c = tri[0];
  std::vector<int> arms;
  for (int s : adj[c]) {
    int len = 1, prev = c, cur = s;
    for (;;) {
      int next = -1;
      for (int u : adj[cur])
        if (u != prev) next = u;
      if (next < 0) break;
      prev = cur;
      cur = next;
      ++len;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms[0] == 1 && arms[1] == 1) return FiniteType{'D', n};
  if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4)
    return FiniteType{'E', n};
  return std::nullopt;
}

namespace {

Weight reflect(const Quiver& q, int i, const Weight& lam) {
  Weight r = lam;
  int a = 0;
  for (int j = 0; j < q.size(); ++j) a += q.cartan(i, j) * lam.c[j];
  r.c[i] -= a;
  return r;
}

}  // namespace

std::vector<Root> positive_roots(const Quiver& q) {
  auto t = classify_finite_type(q);
  if (!t)
    throw error(
        "quiver is not of finite ADE type; positive roots are not "
        "enumerable");
  int n = q.size();
  std::set<Weight> roots;
  std::vector<Weight> frontier;
  for (int i = 0; i < n; ++i) {
    Weight a = Weight::simple(n, i);
    roots.insert(a);
    frontier.push_back(a);
  }
  while (!frontier.empty()) {
    std::vector<Weight> next;
    for (const auto& r : frontier)
      for (int i = 0; i < n; ++i) {
        Weight s = reflect(q, i, r);
        if (s.nonneg() && !s.is_zero() && !roots.count(s)) {
          roots.insert(s);
          next.push_back(s);
        }
      }
    frontier = std::move(next);
  }
  std::vector<Root> out(roots.begin(), roots.end());
  std::sort(out.begin(), out.end(), [](const Root& a, const Root& b) {
    if (a.ht() != b.ht()) return a.ht() < b.ht();
    return a < b;
  });
  return out;
}

int ConvexOrder::rank(const Root& r) const {
  auto it = rank_of.find(r);
  if (it == rank_of.end()) throw error("not a positive root: " + r.to_string());
  return it->second;
}

ConvexOrder convex_order(const Quiver& q, const std::vector<int>& w0_word) {
  auto all = positive_roots(q);
  int nroots = static_cast<int>(all.size());
  if (static_cast<int>(w0_word.size()) != nroots)
    throw error("w0 word has length " + std::to_string(w0_word.size()) +
                ", expected " + std::to_string(nroots));
  int n = q.size();
  ConvexOrder ord;
  ord.w0_word = w0_word;
  std::set<Weight> seen;
  // beta_k = s_{i_1} ... s_{i_{k-1}} (alpha_{i_k})
  for (size_t k = 0; k < w0_word.size(); ++k) {
    int ik = w0_word[k];
    if (ik < 1 || ik > n) throw error("w0 word letter out of range");
    Weight beta = Weight::simple(n, ik - 1);
    for (int j = static_cast<int>(k) - 1; j >= 0; --j)
      beta = reflect(q, w0_word[j] - 1, beta);
    if (!beta.nonneg() || beta.is_zero() || seen.count(beta))
      throw error("w0 word is not a reduced expression for the longest element");
    seen.insert(beta);
    ord.rank_of[beta] = static_cast<int>(ord.roots.size());
    ord.roots.push_back(beta);
  }
  return ord;
}

namespace {

std::vector<int> greedy_w0(const Quiver& q, bool smallest) {
  auto all = positive_roots(q);
  int n = q.size();
  int nroots = static_cast<int>(all.size());
  // track w(alpha_i) for the partial product w = s_{i_1} ... s_{i_k}
  std::vector<Weight> img(n);
  for (int i = 0; i < n; ++i) img[i] = Weight::simple(n, i);
  std::vector<int> word;
  for (int step = 0; step < nroots; ++step) {
    int pick = -1;
    for (int off = 0; off < n; ++off) {
      int i = smallest ? off : n - 1 - off;
      if (img[i].nonneg() && !img[i].is_zero()) {
        pick = i;
        break;
      }
    }
    if (pick < 0) throw error("w0 construction stalled");
    word.push_back(pick + 1);
    // w <- w s_pick: images become w(s_pick(alpha_j)) = img_j - c_{pick,j} img_pick
    Weight base = img[pick];
    for (int j = 0; j < n; ++j) {
      if (j == pick) continue;
      int cij = q.cartan(pick, j);
      for (int t = 0; t < n; ++t) img[j].c[t] -= cij * base.c[t];
    }
    for (int t = 0; t < n; ++t) img[pick].c[t] = -base.c[t];
  }
  return word;
}

}  // namespace

std::vector<int> lex_least_w0(const Quiver& q) { return greedy_w0(q, true); }
std::vector<int> lex_greatest_w0(const Quiver& q) { return greedy_w0(q, false); }

Weight KostantPartition::weight(int nvertices) const {
  Weight w = Weight::zero(nvertices);
  for (const auto& p : parts) w = w + p;
  return w;
}

int KostantPartition::multiplicity(const Root& beta) const {
  int m = 0;
  for (const auto& p : parts)
    if (p == beta) ++m;
  return m;
}

std::string KostantPartition::to_string() const {
  std::string s;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) s += "|";
    s += parts[i].to_string();
  }
  return s.empty() ? "()" : s;
}

std::vector<KostantPartition> kostant_partitions(const Weight& alpha,
                                                 const ConvexOrder& order) {
  std::vector<KostantPartition> out;
  std::vector<Root> cur;
  int nroots = order.size();
  auto rec = [&](auto&& self, Weight rest, int maxrank) -> void {
    if (rest.is_zero()) {
      out.push_back(KostantPartition{cur});
      return;
    }
    for (int r = maxrank; r >= 0; --r) {
      const Root& root = order.roots[r];
      Weight next = rest - root;
      if (!next.nonneg()) continue;
      cur.push_back(root);
      self(self, next, r);
      cur.pop_back();
    }
  };
  if (!alpha.nonneg()) throw error("weight outside Q^+");
  rec(rec, alpha, nroots - 1);
  return out;
}

std::vector<std::pair<Root, Root>> minimal_pairs(const Root& alpha,
                                                 const ConvexOrder& order) {
  if (alpha.ht() == 1) throw error("minimal pair of a simple root");
  if (!order.contains(alpha))
    throw error("not a positive root: " + alpha.to_string());
  std::vector<std::pair<Root, Root>> pairs;  // (beta, gamma), beta > gamma
  for (const auto& beta : order.roots) {
    Weight gamma = alpha - beta;
    if (!gamma.nonneg() || gamma.is_zero() || !order.contains(gamma)) continue;
    if (order.less(gamma, beta)) pairs.push_back({beta, gamma});
  }
  std::vector<std::pair<Root, Root>> out;
  for (const auto& p : pairs) {
    bool dominated = false;
    for (const auto& o : pairs) {
      if (o == p) continue;
      if (order.less(o.first, p.first) && order.less(p.second, o.second))
        dominated = true;
    }
    if (!dominated) out.push_back(p);
  }
  std::sort(out.begin(), out.end(),
            [&](const auto& a, const auto& b) {
              return order.less(a.first, b.first);
            });
  return out;
}

namespace {

// First clause of the bilex order on part sequences under cmp.
bool lex_clause(const ConvexOrder& order, const std::vector<Root>& a,
                const std::vector<Root>& b, bool want_less) {
  size_t m = std::min(a.size(), b.size());
  for (size_t k = 0; k < m; ++k) {
    if (a[k] == b[k]) continue;
    return want_less ? order.less(a[k], b[k]) : order.less(b[k], a[k]);
  }
  return false;
}

}  // namespace

bool bilex_less(const ConvexOrder& order, const KostantPartition& lam,
                const KostantPartition& mu) {
  int n = 0;
  if (!lam.parts.empty()) n = lam.parts[0].size();
  else if (!mu.parts.empty()) n = mu.parts[0].size();
  else return false;
  if (lam.weight(n) != mu.weight(n))
    throw error("bilex_less: partitions of different weights");
  if (lam == mu) return false;
  std::vector<Root> lrev(lam.parts.rbegin(), lam.parts.rend());
  std::vector<Root> mrev(mu.parts.rbegin(), mu.parts.rend());
  return lex_clause(order, lam.parts, mu.parts, true) &&
         lex_clause(order, lrev, mrev, false);
}

int s_lambda(const KostantPartition& lam) {
  std::map<Root, int> mult;
  for (const auto& p : lam.parts) mult[p] += 1;
  int s = 0;
  for (const auto& [r, m] : mult) s += m * (m - 1) / 2;
  return s;
}

}  // namespace klr
