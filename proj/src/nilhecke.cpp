#include "klr/nilhecke.hpp"

namespace klr {

QhAlgebra nil_algebra(int n) {
  Quiver q = Quiver::single_vertex();
  return QhAlgebra(q, Weight({n}));
}

QHElement nil_en(int n) {
  if (n < 1) throw error("nil_en needs n >= 1");
  std::vector<int> exps(n);
  for (int p = 0; p < n; ++p) exps[p] = p;
  Word w(std::vector<int>(n, 0));
  QHElement e;
  e.add(QhKey{w, Permutation::longest(n), exps}, LaurentPoly(1));
  return e;
}

MultiPoly nil_act(const QHElement& e, const MultiPoly& f) {
  MultiPoly out(f.nvars());
  for (const auto& [k, c] : e.terms) {
    if (!c.is_constant())
      throw error("nil_act needs integer scalar coefficients");
    MultiPoly g = demazure_w(k.perm, f);
    g = g * MultiPoly::monomial(f.nvars(), k.exps, c.is_zero() ? Int(0)
                                                               : c.coeff(0));
    out += g;
  }
  return out;
}

}  // namespace klr
