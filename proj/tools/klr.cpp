#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "klr/cli.hpp"

namespace {

klr::Quiver load_quiver(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw klr::error("cannot open quiver file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return klr::Quiver::from_json(ss.str());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quiver Hecke algebra and canonical basis calculator"};
  app.require_subcommand(1);

  std::string quiver_path, alpha_str, w0_str, format = "text",
                           verify_level = "fast";
  int cutoff = 8;
  std::vector<std::string> words;

  auto add_common = [&](CLI::App* sub, bool needs_alpha) {
    sub->add_option("--quiver", quiver_path, "quiver JSON file")->required();
    auto* a = sub->add_option("--alpha", alpha_str,
                              "weight coefficients c1,c2,...");
    if (needs_alpha) a->required();
    sub->add_option("--w0", w0_str, "reduced word for w0 (vertex names)");
    sub->add_option("--cutoff", cutoff, "series cutoff degree");
    sub->add_option("--format", format, "text|json|tsv");
  };

  add_common(app.add_subcommand("roots", "positive roots in convex order"),
             false);
  add_common(app.add_subcommand("words", "words of a weight"), true);
  auto* shuf = app.add_subcommand("shuffle", "quantum shuffle of two words");
  add_common(shuf, false);
  shuf->add_option("word", words, "two words")->expected(2);
  add_common(app.add_subcommand("gram", "Gram matrix of a weight block"), true);
  add_common(app.add_subcommand("canonical-basis",
                                "canonical and dual canonical bases"),
             true);
  add_common(app.add_subcommand("p-matrix", "decomposition matrix as TSV"),
             true);
  add_common(app.add_subcommand("characters",
                                "proper standard characters and "
                                "decompositions"),
             true);
  auto* ver = app.add_subcommand("verify", "run the invariant suite");
  add_common(ver, false);
  ver->add_option("--verify-level", verify_level, "fast|full");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : klr::kExitConfig;
  }

  try {
    klr::JobConfig cfg;
    cfg.quiver = load_quiver(quiver_path);
    cfg.command = app.get_subcommands().front()->get_name();
    if (!alpha_str.empty()) cfg.alpha = klr::parse_alpha(cfg.quiver, alpha_str);
    if (!w0_str.empty()) cfg.w0 = klr::parse_w0(cfg.quiver, w0_str);
    cfg.cutoff = cutoff;
    cfg.format = format;
    cfg.args = words;
    cfg.verify_level = verify_level;
    return klr::run(cfg, std::cout, std::cerr);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return klr::kExitConfig;
  }
}
