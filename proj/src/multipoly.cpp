#include "klr/multipoly.hpp"

#include <algorithm>
#include <numeric>

namespace klr {

MultiPoly MultiPoly::constant(int n, Int c) {
  MultiPoly p(n);
  if (c != 0) p.terms_[std::vector<int>(n, 0)] = std::move(c);
  return p;
}

MultiPoly MultiPoly::monomial(int n, std::vector<int> exps, Int c) {
  MultiPoly p(n);
  if (c != 0) p.terms_[std::move(exps)] = std::move(c);
  return p;
}

MultiPoly MultiPoly::variable(int n, int i) {
  std::vector<int> e(n, 0);
  e[i - 1] = 1;
  return monomial(n, e);
}

MultiPoly MultiPoly::staircase(int n) {
  std::vector<int> e(n);
  std::iota(e.begin(), e.end(), 0);
  return monomial(n, e);
}

void MultiPoly::add_term(std::vector<int> exps, Int c) {
  auto it = terms_.find(exps);
  if (it == terms_.end()) {
    if (c != 0) terms_.emplace(std::move(exps), std::move(c));
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  MultiPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
  MultiPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
  return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  MultiPoly r(n_);
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_) {
      std::vector<int> e = ea;
      for (size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
      r.add_term(std::move(e), ca * cb);
    }
  return r;
}

MultiPoly MultiPoly::swapped(int i) const {
  MultiPoly r(n_);
  for (const auto& [e, c] : terms_) {
    std::vector<int> f = e;
    std::swap(f[i - 1], f[i]);
    r.add_term(std::move(f), c);
  }
  return r;
}

MultiPoly MultiPoly::permuted(const Permutation& w) const {
  MultiPoly r(n_);
  for (const auto& [e, c] : terms_) {
    std::vector<int> f(n_, 0);
    for (int p = 1; p <= n_; ++p) f[w(p) - 1] = e[p - 1];
    r.add_term(std::move(f), c);
  }
  return r;
}

int MultiPoly::degree2() const {
  int d = -1;
  for (const auto& [e, c] : terms_) {
    int s = 2 * std::accumulate(e.begin(), e.end(), 0);
    if (d == -1)
      d = s;
    else if (d != s)
      throw error("inhomogeneous polynomial");
  }
  return d;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += c.get_str();
    for (size_t i = 0; i < e.size(); ++i)
      if (e[i] > 0) {
        out += "*x" + std::to_string(i + 1);
        if (e[i] > 1) out += "^" + std::to_string(e[i]);
      }
  }
  return out;
}

std::vector<std::pair<std::vector<int>, int>> demazure_exps(
    const std::vector<int>& exps, int i) {
  // On x_i^p x_{i+1}^r (rest fixed):
  //   p == r : 0
  //   p >  r : -sum_{a+b = p-r-1} x_i^{r+a} x_{i+1}^{r+b}
  //   p <  r : +sum_{a+b = r-p-1} x_i^{p+a} x_{i+1}^{p+b}
  std::vector<std::pair<std::vector<int>, int>> out;
  int p = exps[i - 1], r = exps[i];
  if (p == r) return out;
  int lo = std::min(p, r), hi = std::max(p, r);
  int sign = p > r ? -1 : 1;
  for (int a = 0; a <= hi - lo - 1; ++a) {
    std::vector<int> e = exps;
    e[i - 1] = lo + a;
    e[i] = lo + (hi - lo - 1 - a);
    out.push_back({std::move(e), sign});
  }
  return out;
}

MultiPoly demazure(int i, const MultiPoly& f) {
  if (i < 1 || i >= f.nvars()) throw error("demazure index out of range");
  MultiPoly r(f.nvars());
  for (const auto& [e, c] : f.terms())
    for (auto& [e2, s] : demazure_exps(e, i)) r.add_term(std::move(e2), s * c);
  return r;
}

MultiPoly demazure_w(const Permutation& w, const MultiPoly& f) {
  MultiPoly r = f;
  auto word = reduced_word(w);
  for (auto it = word.rbegin(); it != word.rend(); ++it) r = demazure(*it, r);
  return r;
}

std::map<Permutation, MultiPoly> basis_b(int n) {
  std::map<Permutation, MultiPoly> out;
  MultiPoly top = MultiPoly::staircase(n);
  for (const auto& w : all_permutations(n)) out[w] = demazure_w(w, top);
  return out;
}

}  // namespace klr
