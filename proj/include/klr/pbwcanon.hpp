#ifndef KLR_PBWCANON_HPP
#define KLR_PBWCANON_HPP

#include <map>
#include <vector>

#include "klr/fshuffle.hpp"
#include "klr/rootdata.hpp"

namespace klr {

// r_alpha for simple roots is theta_i; otherwise the minimal-pair recursion
// r_alpha = r_gamma r_beta - q r_beta r_gamma with the convex-least beta.
FElement root_vector(ShuffleContext& ctx, const Root& alpha,
                     const ConvexOrder& order);

// r_lambda = r_{lambda_1} ... r_{lambda_l} / [lambda]!, with
// [lambda]! = prod_beta [m_beta(lambda)]! (q-factorials).
FElement pbw_monomial(ShuffleContext& ctx, const KostantPartition& lam,
                      const ConvexOrder& order);

// r*_lambda = q^{s_lambda} r*_{lambda_1} ... r*_{lambda_l} with
// r*_alpha = (1-q^2) r_alpha.
FElement dual_pbw(ShuffleContext& ctx, const KostantPartition& lam,
                  const ConvexOrder& order);

// Transition matrix over Z[q,q^-1] on Kostant-partition pairs.
struct PMatrix {
  std::vector<KostantPartition> kps;  // in the processing order
  std::map<std::pair<KostantPartition, KostantPartition>, LaurentPoly> entries;

  LaurentPoly at(const KostantPartition& lam, const KostantPartition& mu) const;
};

// PBW and dual PBW bases for one weight block; duality
// (r_lambda, r*_mu) = delta is checked on construction.
struct PbwBasis {
  Weight alpha;
  ConvexOrder order;
  std::vector<KostantPartition> kps;          // linear extension, <=-max first
  std::map<KostantPartition, FElement> r;     // PBW vectors (with expr)
  std::map<KostantPartition, FElement> rstar; // dual PBW vectors
};

PbwBasis make_pbw_basis(ShuffleContext& ctx, const Weight& alpha,
                        const ConvexOrder& order);

// Matrix M with bar(r_lambda) = sum_mu M_{lambda,mu} r_mu; unitriangular
// with support on mu >= lambda (asserted).
std::map<std::pair<KostantPartition, KostantPartition>, LaurentPoly>
bar_matrix(ShuffleContext& ctx, const PbwBasis& basis);

struct CanonicalBasis {
  std::map<KostantPartition, FElement> b;
  PMatrix p;  // b_mu = sum_lambda p_{lambda,mu} r_lambda
};

// The unique bar-invariant basis unitriangular over PBW with off-diagonal
// entries in qZ[q]; bar-invariance and triangularity re-verified post-hoc.
CanonicalBasis canonical_basis(ShuffleContext& ctx, const PbwBasis& basis);

// b*_mu from the unitriangular system r*_lambda = sum_mu p_{lambda,mu} b*_mu;
// every b*_mu has a Laurent pairing vector (a character).
std::map<KostantPartition, FElement> dual_canonical_basis(
    const PbwBasis& basis, const PMatrix& p);

// Linear extension of the bilex order with maximal partitions first.
std::vector<KostantPartition> linearize_kps(
    const ConvexOrder& order, std::vector<KostantPartition> kps);

}  // namespace klr

#endif
