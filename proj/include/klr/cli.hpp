#ifndef KLR_CLI_HPP
#define KLR_CLI_HPP

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "klr/rootdata.hpp"

namespace klr {

// Exit codes: 0 ok, 2 config error, 3 verification failure.
inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitVerify = 3;

struct JobConfig {
  Quiver quiver;
  std::string command;  // roots|words|shuffle|gram|canonical-basis|p-matrix|characters|verify
  std::optional<Weight> alpha;
  std::optional<std::vector<int>> w0;
  int cutoff = 8;
  std::string format = "text";  // text|json|tsv
  std::vector<std::string> args;
  std::string verify_level = "fast";  // fast|full
};

// Dispatches a parsed job; deterministic output for a fixed config.
int run(const JobConfig& cfg, std::ostream& out, std::ostream& err);

// Parses "c1,c2,..." into a weight over the quiver.
Weight parse_alpha(const Quiver& q, const std::string& s);
// Parses "i1,i2,..." (vertex names) into a Weyl generator word.
std::vector<int> parse_w0(const Quiver& q, const std::string& s);

}  // namespace klr

#endif
