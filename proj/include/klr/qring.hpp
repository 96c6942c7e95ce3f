#ifndef KLR_QRING_HPP
#define KLR_QRING_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace klr {

using Int = mpz_class;

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Element of Z[q,q^-1], stored as sorted (exponent, coefficient) pairs with
// no zero coefficients.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long c);  // constant
  LaurentPoly(const Int& c);
  static LaurentPoly term(Int c, int e);
  static LaurentPoly q(int e = 1) { return term(1, e); }

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  bool is_constant() const;
  Int coeff(int e) const;
  int lowest_exp() const;   // requires nonzero
  int highest_exp() const;  // requires nonzero
  Int leading_coeff() const { return coeff(highest_exp()); }
  Int content() const;  // gcd of |coefficients|, 0 for zero poly
  const std::vector<std::pair<int, Int>>& terms() const { return terms_; }

  LaurentPoly operator-() const;
  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
  LaurentPoly& operator-=(const LaurentPoly& o) { return *this = *this - o; }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
  bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const LaurentPoly& o) const { return !(*this == o); }
  bool operator<(const LaurentPoly& o) const { return terms_ < o.terms_; }

  LaurentPoly shifted(int e) const;  // multiply by q^e
  LaurentPoly divided_by_int(const Int& d) const;  // exact, throws otherwise

  // q |-> q^-1
  LaurentPoly barred() const;
  bool bar_symmetric() const { return *this == barred(); }

  // True when all exponents are >= 0 (resp. coefficients >= 0).
  bool is_ordinary() const { return is_zero() || lowest_exp() >= 0; }
  bool nonneg_coeffs() const;
  // True when the poly lies in qZ[q] (positive exponents only).
  bool in_q_zq() const { return is_zero() || lowest_exp() >= 1; }

  Int eval_at_one() const;

  std::string to_string() const;
  static LaurentPoly parse(const std::string& s);

  void add_term(const Int& c, int e);  // accumulate one term

 private:
  std::vector<std::pair<int, Int>> terms_;  // ascending exponents
  void normalize();
};

// Exact quotient a/b in Z[q,q^-1]; throws if not divisible.
LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b);

// Gcd of two Laurent polynomials, computed by shifting to ordinary
// polynomials and running a primitive PRS over Z. Result is an ordinary
// polynomial with nonzero constant term and positive leading coefficient.
LaurentPoly laurent_gcd(const LaurentPoly& a, const LaurentPoly& b);

// Element of Q(q) as a reduced fraction num/den of Laurent polynomials.
// Canonical form: gcd(num, den) is a unit, den has lowest exponent 0 and
// positive leading coefficient, and the common integer content of num and
// den is 1. Equality is field comparison on (num, den).
class RatFn {
 public:
  RatFn() : num_(LaurentPoly()), den_(LaurentPoly(1)) {}
  RatFn(long c) : RatFn(LaurentPoly(c)) {}
  RatFn(const LaurentPoly& p) : num_(p), den_(LaurentPoly(1)) {}
  RatFn(LaurentPoly num, LaurentPoly den);

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }

  // True when the denominator is trivial, i.e. the value lies in Z[q,q^-1].
  bool is_laurent() const { return den_.is_one(); }
  LaurentPoly to_laurent() const;

  RatFn operator-() const;
  RatFn operator+(const RatFn& o) const;
  RatFn operator-(const RatFn& o) const;
  RatFn operator*(const RatFn& o) const;
  RatFn operator/(const RatFn& o) const;
  RatFn& operator+=(const RatFn& o) { return *this = *this + o; }
  RatFn& operator-=(const RatFn& o) { return *this = *this - o; }
  RatFn& operator*=(const RatFn& o) { return *this = *this * o; }
  RatFn& operator/=(const RatFn& o) { return *this = *this / o; }
  bool operator==(const RatFn& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  bool operator!=(const RatFn& o) const { return !(*this == o); }
  bool operator<(const RatFn& o) const {
    return num_ != o.num_ ? num_ < o.num_ : den_ < o.den_;
  }

  RatFn barred() const;

  std::string to_string() const;
  static RatFn parse(const std::string& s);

 private:
  LaurentPoly num_, den_;
  void reduce();
};

// Quantum integer [n] = (q^n - q^-n)/(q - q^-1); [-n] = -[n].
LaurentPoly qint(int n);
// Quantum factorial [n]! = [n][n-1]...[1]; rejects n < 0.
LaurentPoly qfact(int n);
// q |-> q^-1 on Z[q,q^-1].
inline LaurentPoly bar(const LaurentPoly& p) { return p.barred(); }
// Sum over S_n of q^(2 l(w)), computed by enumerating S_n.
LaurentPoly poincare(int n);

}  // namespace klr

#endif
