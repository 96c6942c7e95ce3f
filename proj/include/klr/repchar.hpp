#ifndef KLR_REPCHAR_HPP
#define KLR_REPCHAR_HPP

#include <map>
#include <set>
#include <string>
#include <vector>

#include "klr/fshuffle.hpp"
#include "klr/pbwcanon.hpp"
#include "klr/rootdata.hpp"

namespace klr {

// ~-closure of a word: permuting adjacent letters ij whenever
// alpha_i . alpha_j = 0.
std::set<Word> word_class(const Quiver& q, const Word& i);

// Both homogeneity conditions hold for every word in the class.
bool is_homogeneous(const Quiver& q, const Word& i);

// Irreducible module concentrated in degree zero: basis indexed by the word
// class, x_k = 0, tau_k permutes basis words along orthogonal swaps. All
// defining relations are machine-verified as matrix identities on
// construction.
struct HomogeneousModule {
  Quiver quiver;
  Weight alpha;
  std::vector<Word> basis;  // sorted word class

  int dim() const { return static_cast<int>(basis.size()); }
  Character character() const;

  // tau_k as a 0/1 matrix (rows act on columns); k is 1-based.
  std::vector<std::vector<int>> tau_matrix(int k) const;
  // projection onto the basis vector of word w (diagonal 0/1), zero matrix
  // for words outside the class.
  std::vector<std::vector<int>> idem_matrix(const Word& w) const;

  void verify_relations() const;  // throws on any failed identity
};

HomogeneousModule build_homogeneous(const Quiver& q, const Word& i);

// Character of the cuspidal module L(alpha): the dual PBW vector of the
// one-part partition.
Character cuspidal_character(ShuffleContext& ctx, const Root& alpha,
                             const ConvexOrder& order);

// q^{s_lambda} times the shuffle product of cuspidal characters.
Character proper_standard_character(ShuffleContext& ctx,
                                    const KostantPartition& lam,
                                    const ConvexOrder& order);

// ch = sum c_mu Ch(b*_mu) solved exactly over Z[q,q^-1]; throws when the
// system is inconsistent.
std::map<KostantPartition, LaurentPoly> decompose_with(
    const std::map<KostantPartition, FElement>& duals, const Character& ch);

std::map<KostantPartition, LaurentPoly> decompose(ShuffleContext& ctx,
                                                  const Character& ch,
                                                  const Weight& alpha,
                                                  const ConvexOrder& order);

// Parity constraint on indecomposable characters: all exponents in ch(i)
// agree with p(i) modulo 2 across words, up to one global class.
bool parity_check(const Quiver& q, const Character& ch);

// Type-A pretty printer: positive roots as segments "[i,j]", partitions as
// multisegments "[i1,j1]+[i2,j2]+...". Empty string for non-A quivers.
std::string segment_label(const Quiver& q, const Root& r);
std::string multisegment_label(const Quiver& q, const KostantPartition& lam);

}  // namespace klr

#endif
