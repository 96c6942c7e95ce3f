#ifndef KLR_FSHUFFLE_HPP
#define KLR_FSHUFFLE_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "klr/linalg.hpp"
#include "klr/qring.hpp"
#include "klr/rootdata.hpp"

namespace klr {

// Formal Z[q,q^-1]-combination of words of one weight.
struct Character {
  std::map<Word, LaurentPoly> coeffs;

  bool is_zero() const { return coeffs.empty(); }
  void add(const Word& w, const LaurentPoly& c);
  Character operator+(const Character& o) const;
  Character operator-(const Character& o) const;
  Character scaled(const LaurentPoly& c) const;
  bool operator==(const Character& o) const { return coeffs == o.coeffs; }
  bool operator!=(const Character& o) const { return !(*this == o); }

  std::string to_string(const Quiver& q) const;  // "word : poly" lines
};

// Quantum shuffle product of two words: sum over (m,n)-shuffles w of
// q^deg(w; ij) w(ij).
Character shuffle(const Quiver& q, const Word& i, const Word& j);
Character shuffle(const Quiver& q, const Character& a, const Character& b);

// Element of f_alpha in the pairing-vector model: pv_i = (theta_i, x) for
// all words i of the weight; expr optionally carries a free-word expression
// sum expr_i theta_i with Gram-transform pv.
struct FElement {
  Weight wt;
  std::map<Word, RatFn> pv;
  std::optional<std::map<Word, RatFn>> expr;

  bool is_zero() const;
  bool has_expr() const { return expr.has_value(); }
  FElement operator+(const FElement& o) const;
  FElement operator-(const FElement& o) const;
  FElement scaled(const RatFn& c) const;
  // pv comparison: pairing vectors are faithful coordinates on f.
  bool operator==(const FElement& o) const;
  bool operator!=(const FElement& o) const { return !(*this == o); }

  // Extracts the character; throws when some pv entry has a denominator.
  Character character() const;
};

// Shuffle-model context for one quiver: memoizes Gram matrices per weight.
class ShuffleContext {
 public:
  explicit ShuffleContext(const Quiver& q) : quiver_(q) {}

  const Quiver& quiver() const { return quiver_; }

  // (theta_j, theta_i) per the 1/(1-q^2)^n sum over w(i) = j.
  RatFn gram_entry(const Word& i, const Word& j);
  struct GramData {
    std::vector<Word> words;
    RatMatrix matrix;  // matrix[a][b] = (theta_{words[a]}, theta_{words[b]})
  };
  const GramData& gram(const Weight& alpha);

  FElement unit();                       // weight-zero identity
  FElement theta(int vertex);            // generator theta_i
  FElement theta_word(const Word& i);    // theta_{i_1} ... theta_{i_n}
  FElement from_character(const Character& ch, const Weight& alpha);

  FElement fmul(const FElement& x, const FElement& y);
  FElement power(const FElement& x, int n);
  FElement divided_power(int vertex, int n);  // theta_i^n / [n]!

  // (x, y) = sum_i expr(x)_i pv(y)_i; needs expr on x (solves for it when
  // absent).
  RatFn lusztig_form(const FElement& x, const FElement& y);

  // Populates expr by solving the Gram system G c = pv; throws when pv is
  // outside the column space (the vector is not in f_alpha).
  FElement solve_expr(const FElement& x);

  // Alternating sum of theta_i^(r) theta_j theta_i^(s) over r+s = 1 - i.j;
  // zero in f.
  FElement serre_check(int i, int j);

  // Bars the expr coefficients (q -> q^-1) and recomputes pv.
  FElement bar_f(const FElement& x);

 private:
  Quiver quiver_;
  std::map<Weight, GramData> gram_cache_;
};

// Character-level Mackey identity: the (beta,gamma)-restriction of
// chX o chY equals the sum over splittings with the q^(-beta2.gamma1)
// twist. Exact check, returns the comparison result.
bool mackey_character_check(const Quiver& q, const Character& chX,
                            const Character& chY, const Weight& beta,
                            const Weight& gamma);

// Restriction of a character to (beta, gamma): terms whose length-ht(beta)
// prefix has weight beta, split into word pairs.
std::map<std::pair<Word, Word>, LaurentPoly> restrict_character(
    const Quiver& q, const Character& ch, const Weight& beta,
    const Weight& gamma);

}  // namespace klr

#endif
