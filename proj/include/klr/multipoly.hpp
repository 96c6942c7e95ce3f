#ifndef KLR_MULTIPOLY_HPP
#define KLR_MULTIPOLY_HPP

#include <map>
#include <string>
#include <vector>

#include "klr/qring.hpp"
#include "klr/rootdata.hpp"

namespace klr {

// Integer polynomial in x_1..x_n, sparse on exponent vectors. Each x_i sits
// in degree 2.
class MultiPoly {
 public:
  MultiPoly() : n_(0) {}
  explicit MultiPoly(int n) : n_(n) {}
  static MultiPoly constant(int n, Int c);
  static MultiPoly monomial(int n, std::vector<int> exps, Int c = 1);
  static MultiPoly variable(int n, int i);  // x_i, 1-based
  // x_2 x_3^2 ... x_n^{n-1}
  static MultiPoly staircase(int n);

  int nvars() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<std::vector<int>, Int>& terms() const { return terms_; }

  MultiPoly operator-() const;
  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly& operator+=(const MultiPoly& o) { return *this = *this + o; }
  MultiPoly& operator-=(const MultiPoly& o) { return *this = *this - o; }
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }
  bool operator==(const MultiPoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const MultiPoly& o) const { return !(*this == o); }

  // swap x_i, x_{i+1} (the transposition action t_i)
  MultiPoly swapped(int i) const;
  MultiPoly permuted(const Permutation& w) const;  // w acting on variables

  // Degree with x_i in degree 2; -1 for the zero polynomial, throws if
  // inhomogeneous.
  int degree2() const;

  std::string to_string() const;

  void add_term(std::vector<int> exps, Int c);

 private:
  int n_;
  std::map<std::vector<int>, Int> terms_;
};

// Demazure operator f |-> (t_i(f) - f)/(x_i - x_{i+1}); the quotient is
// exact by construction, no rational functions appear.
MultiPoly demazure(int i, const MultiPoly& f);

// Composite along the canonical reduced word of w.
MultiPoly demazure_w(const Permutation& w, const MultiPoly& f);

// b_w = demazure_w(x_2 x_3^2 ... x_n^{n-1}) for all w in S_n.
std::map<Permutation, MultiPoly> basis_b(int n);

// Demazure applied to a single monomial exponent vector at slots (i, i+1):
// list of (exponent vector, +-1 coefficient) pairs. Used by the
// straightening engine to push dots through crossings.
std::vector<std::pair<std::vector<int>, int>> demazure_exps(
    const std::vector<int>& exps, int i);

}  // namespace klr

#endif
