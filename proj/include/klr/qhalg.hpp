#ifndef KLR_QHALG_HPP
#define KLR_QHALG_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "klr/multipoly.hpp"
#include "klr/qring.hpp"
#include "klr/rootdata.hpp"

namespace klr {

// Local polynomial q_{i,j}(u,v): 0 when i = j, else
// (v-u)^{m_{i,j}} (u-v)^{m_{j,i}}. Kept as a sparse bivariate polynomial.
struct QPoly {
  std::map<std::pair<int, int>, Int> coeffs;  // (deg_u, deg_v) -> coeff
  bool is_zero() const { return coeffs.empty(); }
  Int constant_term() const;
  static QPoly of(const Quiver& q, int i, int j);
};

// Normal-form basis monomial x_1^{e_1}...x_n^{e_n} tau_w 1_i, with tau_w
// built from the canonical reduced word of w.
struct QhKey {
  Word word;               // right idempotent
  Permutation perm;        // w
  std::vector<int> exps;   // dot exponents, slot p-1 for x_p

  bool operator<(const QhKey& o) const;
  bool operator==(const QhKey& o) const {
    return word == o.word && perm == o.perm && exps == o.exps;
  }
  Word left_word() const { return perm.act(word); }
};

// Element of H_alpha: finitely supported map from normal-form monomials to
// Laurent-polynomial coefficients.
struct QHElement {
  std::map<QhKey, LaurentPoly> terms;

  bool is_zero() const { return terms.empty(); }
  void add(const QhKey& k, const LaurentPoly& c);
  QHElement operator+(const QHElement& o) const;
  QHElement operator-(const QHElement& o) const;
  QHElement operator-() const;
  QHElement scaled(const LaurentPoly& c) const;
  bool operator==(const QHElement& o) const { return terms == o.terms; }
  bool operator!=(const QHElement& o) const { return !(*this == o); }
};

// Truncated power series in q: coefficients up to degree <= cutoff.
struct TruncSeries {
  LaurentPoly poly;
  int cutoff = 0;
  bool operator==(const TruncSeries& o) const {
    return poly == o.poly && cutoff == o.cutoff;
  }
  std::string to_string() const;
};

// The quiver Hecke algebra H_alpha with its straightening engine. Holds the
// per-block caches (reduced-word trees, crossing compositions).
class QhAlgebra {
 public:
  QhAlgebra(const Quiver& q, const Weight& alpha);

  const Quiver& quiver() const { return quiver_; }
  const Weight& alpha() const { return alpha_; }
  int strands() const { return n_; }
  const std::vector<Word>& words() const { return words_; }

  // Generators as normal-form elements.
  QHElement idem(const Word& i) const;
  QHElement one() const;             // sum of all idempotents
  QHElement x(int k) const;          // sum over all words
  QHElement tau(int k) const;        // sum over all words
  QHElement x_idem(int k, const Word& i) const;
  QHElement tau_idem(int k, const Word& i);

  // Product, fully straightened to normal form.
  QHElement multiply(const QHElement& a, const QHElement& b);

  // Left multiplication by single generators.
  QHElement mul_x(int l, const QHElement& e) const;
  QHElement mul_tau(int k, const QHElement& e);
  // Left multiplication by a polynomial in the dots.
  QHElement mul_poly(const MultiPoly& f, const QHElement& e) const;

  // Common degree of all terms, nullopt when inhomogeneous; zero element
  // reports degree 0.
  std::optional<int> degree(const QHElement& a) const;
  int monomial_degree(const QhKey& k) const;

  // The antiautomorphism fixing all generators and reversing products.
  QHElement psi(const QHElement& a);

  // Eq-(iden)-style graded dimension of 1_j H_alpha 1_i as a truncated
  // series, and the brute-force monomial count oracle for it.
  TruncSeries graded_dim_formula(const Word& i, const Word& j, int cutoff) const;
  TruncSeries enumerate_basis(const Word& i, const Word& j, int cutoff) const;

  // z_1..z_n for the sorted word of alpha (equal letters consecutive).
  std::vector<QHElement> central_elements() const;
  Word sorted_word() const;

  std::string to_string(const QHElement& e) const;

 private:
  Quiver quiver_;
  Weight alpha_;
  int n_;
  std::vector<Word> words_;
  std::map<Word, int> word_index_;

  std::map<std::tuple<int, Permutation, Word>, QHElement> tau_cache_;

  void check_word(const Word& i) const;
  void check_element(const QHElement& e) const;
  // tau_k * (tau_w 1_i), straightened.
  const QHElement& tau_compose(int k, const Permutation& v, const Word& i);
  // tau_{r_1} ... tau_{r_m} 1_i for a reduced generator word, straightened.
  QHElement eval_reduced(const std::vector<int>& word, const Word& i);
  // Correction term emitted by one 3-braid move on a generator word
  // P (a b a) S -> P (b a b) S, already multiplied by the sign; zero when
  // the strand condition fails.
  QHElement braid_correction(const std::vector<int>& gens, size_t pos,
                             const Word& i);
};

// Diagrammatic data for the categorified Serre complex at vertices (i, j):
// block idempotent e_{r,s} and the single-strand crossing tau_{r,s}, both as
// elements of H_{n alpha_i + alpha_j} with n = 1 - alpha_i . alpha_j.
QHElement serre_idempotent(QhAlgebra& alg, int i, int j, int r, int s);
QHElement serre_tau(QhAlgebra& alg, int i, int j, int r, int s);

}  // namespace klr

#endif
