#ifndef KLR_ROOTDATA_HPP
#define KLR_ROOTDATA_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "klr/qring.hpp"

namespace klr {

// Loop-free quiver with ordered vertex set and edge multiplicities
// m[i][j] = number of directed edges i -> j.
struct Quiver {
  std::vector<std::string> names;
  std::vector<std::vector<int>> mult;

  int size() const { return static_cast<int>(names.size()); }
  int m(int i, int j) const { return mult[i][j]; }
  // Cartan form entries: c_{i,i} = 2, c_{i,j} = -m_{i,j} - m_{j,i}.
  int cartan(int i, int j) const {
    return i == j ? 2 : -mult[i][j] - mult[j][i];
  }
  int vertex(const std::string& name) const;
  void validate() const;

  static Quiver from_json(const std::string& text);
  static Quiver single_vertex();          // the nil Hecke quiver
  static Quiver type_a(int n);            // path 1 - 2 - ... - n
  static Quiver type_d(int n);            // n >= 4
  static Quiver kronecker();              // A_1^(1): 0 => 1, two edges
};

// Symmetric bilinear form matrix attached to a quiver.
struct CartanForm {
  std::vector<std::vector<int>> entries;
  static CartanForm of(const Quiver& q);
  int operator()(int i, int j) const { return entries[i][j]; }
};

// Element of Q^+ = sum of N alpha_i, as a coefficient vector over I.
struct Weight {
  std::vector<int> c;

  Weight() = default;
  explicit Weight(std::vector<int> v) : c(std::move(v)) {}
  static Weight zero(int n) { return Weight(std::vector<int>(n, 0)); }
  static Weight simple(int n, int i);

  int ht() const;
  bool is_zero() const;
  bool nonneg() const;
  int size() const { return static_cast<int>(c.size()); }

  Weight operator+(const Weight& o) const;
  Weight operator-(const Weight& o) const;
  bool operator==(const Weight& o) const { return c == o.c; }
  bool operator!=(const Weight& o) const { return c != o.c; }
  bool operator<(const Weight& o) const { return c < o.c; }

  std::string to_string() const;  // "c1,c2,..."
};

using Root = Weight;

// Bilinear extension of the Cartan form.
int form(const Quiver& q, const Weight& a, const Weight& b);

// Finite word over the vertex set (letters are 0-based vertex indices).
struct Word {
  std::vector<int> v;

  Word() = default;
  explicit Word(std::vector<int> letters) : v(std::move(letters)) {}

  int size() const { return static_cast<int>(v.size()); }
  int letter(int p) const { return v[p - 1]; }  // 1-based
  Weight weight(int nvertices) const;
  Word concat(const Word& o) const;
  Word subword(int from, int len) const;  // 1-based from

  bool operator==(const Word& o) const { return v == o.v; }
  bool operator!=(const Word& o) const { return v != o.v; }
  bool operator<(const Word& o) const { return v < o.v; }

  std::string to_string(const Quiver& q) const;
  static Word parse(const Quiver& q, const std::string& s);
};

// All words of a given weight, in lexicographic order.
std::vector<Word> words_of_weight(const Quiver& q, const Weight& alpha);

// Permutation of {1..n}, stored as 0-based image vector.
struct Permutation {
  std::vector<int> im;

  Permutation() = default;
  explicit Permutation(std::vector<int> images) : im(std::move(images)) {}
  static Permutation identity(int n);
  static Permutation transposition(int n, int k);  // t_k, 1 <= k <= n-1
  static Permutation longest(int n);               // w_[1,n]

  int size() const { return static_cast<int>(im.size()); }
  int operator()(int p) const { return im[p - 1] + 1; }  // 1-based images
  bool is_identity() const;
  int length() const;  // inversion count
  Permutation compose(const Permutation& o) const;  // (this o other)
  Permutation inverse() const;
  Word act(const Word& w) const;  // (w i)_p = i_{w^-1(p)}

  bool operator==(const Permutation& o) const { return im == o.im; }
  bool operator!=(const Permutation& o) const { return im != o.im; }
  bool operator<(const Permutation& o) const { return im < o.im; }
};

std::vector<Permutation> all_permutations(int n);

// Canonical reduced word (left-greedy descent algorithm); 1-based generator
// indices, length equals the inversion count.
std::vector<int> reduced_word(const Permutation& w);

// Product of transpositions t_{k_1} ... t_{k_r} for a generator word.
Permutation perm_of_word(int n, const std::vector<int>& gens);

// deg(w; i) = -sum over inversions of the Cartan form on letters.
int deg_w(const Quiver& q, const Permutation& w, const Word& i);

struct FiniteType {
  char family;  // 'A', 'D', 'E'
  int rank;
  std::string to_string() const { return family + std::to_string(rank); }
};

// Classifies the underlying graph against the ADE list; nullopt otherwise.
std::optional<FiniteType> classify_finite_type(const Quiver& q);

// Full set R^+ by reflection closure of the simple roots; throws a
// type-classification error for non-ADE quivers. Sorted by (height, coeffs).
std::vector<Root> positive_roots(const Quiver& q);

// Total order beta_1 < beta_2 < ... on R^+ induced by a reduced expression
// of w_0 via beta_k = s_{i_1}...s_{i_{k-1}}(alpha_{i_k}).
struct ConvexOrder {
  std::vector<Root> roots;          // in increasing order
  std::vector<int> w0_word;         // the defining reduced word (1-based)
  std::map<Root, int> rank_of;

  int size() const { return static_cast<int>(roots.size()); }
  bool contains(const Root& r) const { return rank_of.count(r) > 0; }
  int rank(const Root& r) const;
  bool less(const Root& a, const Root& b) const { return rank(a) < rank(b); }
  bool leq(const Root& a, const Root& b) const { return rank(a) <= rank(b); }
};

// Validates the input word (length N, produced roots positive and distinct)
// and returns the induced order.
ConvexOrder convex_order(const Quiver& q, const std::vector<int>& w0_word);

// Lexicographically least / greatest reduced words for w_0 (greedy).
std::vector<int> lex_least_w0(const Quiver& q);
std::vector<int> lex_greatest_w0(const Quiver& q);

// Weakly decreasing (in a convex order) sequence of positive roots.
struct KostantPartition {
  std::vector<Root> parts;

  int length() const { return static_cast<int>(parts.size()); }
  Weight weight(int nvertices) const;
  int multiplicity(const Root& beta) const;

  bool operator==(const KostantPartition& o) const { return parts == o.parts; }
  bool operator!=(const KostantPartition& o) const { return parts != o.parts; }
  bool operator<(const KostantPartition& o) const { return parts < o.parts; }

  std::string to_string() const;  // parts joined by '|'
};

// All Kostant partitions of alpha under the given order, in the DFS order
// with larger first parts first.
std::vector<KostantPartition> kostant_partitions(const Weight& alpha,
                                                 const ConvexOrder& order);

// All minimal pairs (beta, gamma), beta > gamma, beta + gamma = alpha, with
// no other pair strictly between; sorted with beta increasing. Rejects
// simple roots.
std::vector<std::pair<Root, Root>> minimal_pairs(const Root& alpha,
                                                 const ConvexOrder& order);

// Strict bilexicographic order on KP(alpha): both the head clause
// (lam_k < mu_k at the first difference) and the tail clause (lam'_k > mu'_k
// on the reversed sequences) must hold.
bool bilex_less(const ConvexOrder& order, const KostantPartition& lam,
                const KostantPartition& mu);

// s_lambda = (1/2) sum_beta m_beta(m_beta - 1).
int s_lambda(const KostantPartition& lam);

}  // namespace klr

#endif
