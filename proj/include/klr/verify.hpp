#ifndef KLR_VERIFY_HPP
#define KLR_VERIFY_HPP

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "klr/qhalg.hpp"
#include "klr/rootdata.hpp"

namespace klr {

// All seven defining relations of H_alpha, re-verified as identities of
// straightened products.
bool defining_relations_hold(QhAlgebra& alg);

struct VerifyReport {
  std::vector<std::pair<std::string, bool>> checks;
  bool all_passed() const {
    for (const auto& [name, ok] : checks)
      if (!ok) return false;
    return true;
  }
};

// Runs the invariant suite for the given quiver (and weight, when provided),
// printing one PASS/FAIL line per property.
VerifyReport run_verification(const Quiver& q,
                              const std::optional<Weight>& alpha,
                              const std::optional<std::vector<int>>& w0,
                              int cutoff, bool full, std::ostream& out);

}  // namespace klr

#endif
