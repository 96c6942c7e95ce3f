#include "klr/cli.hpp"

#include <sstream>

#include "json.hpp"
#include "klr/fshuffle.hpp"
#include "klr/pbwcanon.hpp"
#include "klr/repchar.hpp"
#include "klr/verify.hpp"

namespace klr {

Weight parse_alpha(const Quiver& q, const std::string& s) {
  std::vector<int> c;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      c.push_back(std::stoi(tok));
    } catch (const std::exception&) {
      throw error("bad --alpha component: " + tok);
    }
  }
  if (static_cast<int>(c.size()) != q.size())
    throw error("--alpha needs one coefficient per vertex");
  Weight w{c};
  if (!w.nonneg()) throw error("--alpha coefficients must be nonnegative");
  return w;
}

std::vector<int> parse_w0(const Quiver& q, const std::string& s) {
  std::vector<int> word;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) word.push_back(q.vertex(tok) + 1);
  return word;
}

namespace {

using nlohmann::json;

ConvexOrder order_for(const JobConfig& cfg) {
  if (cfg.w0) return convex_order(cfg.quiver, *cfg.w0);
  return convex_order(cfg.quiver, lex_least_w0(cfg.quiver));
}

json character_json(const Quiver& q, const Character& ch) {
  json j = json::object();
  for (const auto& [w, c] : ch.coeffs) j[w.to_string(q)] = c.to_string();
  return j;
}

void emit_character(std::ostream& out, const Quiver& q, const Character& ch,
                    const std::string& indent) {
  for (const auto& [w, c] : ch.coeffs)
    out << indent << w.to_string(q) << " : " << c.to_string() << "\n";
}

int cmd_roots(const JobConfig& cfg, std::ostream& out) {
  ConvexOrder ord = order_for(cfg);
  if (cfg.format == "json") {
    json j;
    j["command"] = "roots";
    j["order"] = json::array();
    for (const auto& r : ord.roots) j["order"].push_back(r.to_string());
    out << j.dump(2) << "\n";
  } else {
    for (size_t k = 0; k < ord.roots.size(); ++k) {
      out << (k + 1) << ": " << ord.roots[k].to_string();
      std::string label = segment_label(cfg.quiver, ord.roots[k]);
      if (!label.empty()) out << "  " << label;
      out << "\n";
    }
  }
  return kExitOk;
}

int cmd_words(const JobConfig& cfg, std::ostream& out) {
  if (!cfg.alpha) throw error("words needs --alpha");
  auto ws = words_of_weight(cfg.quiver, *cfg.alpha);
  if (cfg.format == "json") {
    json j;
    j["command"] = "words";
    j["words"] = json::array();
    for (const auto& w : ws) j["words"].push_back(w.to_string(cfg.quiver));
    out << j.dump(2) << "\n";
  } else {
    for (const auto& w : ws) out << w.to_string(cfg.quiver) << "\n";
  }
  return kExitOk;
}

int cmd_shuffle(const JobConfig& cfg, std::ostream& out) {
  if (cfg.args.size() != 2) throw error("shuffle needs two word arguments");
  Word a = Word::parse(cfg.quiver, cfg.args[0]);
  Word b = Word::parse(cfg.quiver, cfg.args[1]);
  Character ch = shuffle(cfg.quiver, a, b);
  if (cfg.format == "json") {
    json j;
    j["command"] = "shuffle";
    j["result"] = character_json(cfg.quiver, ch);
    out << j.dump(2) << "\n";
  } else {
    emit_character(out, cfg.quiver, ch, "");
  }
  return kExitOk;
}

int cmd_gram(const JobConfig& cfg, std::ostream& out) {
  if (!cfg.alpha) throw error("gram needs --alpha");
  ShuffleContext ctx(cfg.quiver);
  const auto& g = ctx.gram(*cfg.alpha);
  if (cfg.format == "json") {
    json j;
    j["command"] = "gram";
    json m = json::object();
    for (size_t a = 0; a < g.words.size(); ++a) {
      json row = json::object();
      for (size_t b = 0; b < g.words.size(); ++b)
        row[g.words[b].to_string(cfg.quiver)] = g.matrix[a][b].to_string();
      m[g.words[a].to_string(cfg.quiver)] = row;
    }
    j["matrix"] = m;
    out << j.dump(2) << "\n";
  } else if (cfg.format == "tsv") {
    out << "word";
    for (const auto& w : g.words) out << "\t" << w.to_string(cfg.quiver);
    out << "\n";
    for (size_t a = 0; a < g.words.size(); ++a) {
      out << g.words[a].to_string(cfg.quiver);
      for (size_t b = 0; b < g.words.size(); ++b)
        out << "\t" << g.matrix[a][b].to_string();
      out << "\n";
    }
  } else {
    for (size_t a = 0; a < g.words.size(); ++a)
      for (size_t b = 0; b < g.words.size(); ++b)
        out << g.words[a].to_string(cfg.quiver) << " "
            << g.words[b].to_string(cfg.quiver) << " : "
            << g.matrix[a][b].to_string() << "\n";
  }
  return kExitOk;
}

int cmd_canonical_basis(const JobConfig& cfg, std::ostream& out) {
  if (!cfg.alpha) throw error("canonical-basis needs --alpha");
  ConvexOrder ord = order_for(cfg);
  ShuffleContext ctx(cfg.quiver);
  PbwBasis basis = make_pbw_basis(ctx, *cfg.alpha, ord);
  CanonicalBasis cb = canonical_basis(ctx, basis);
  auto duals = dual_canonical_basis(basis, cb.p);
  // minimal partitions first
  std::vector<KostantPartition> kps(basis.kps.rbegin(), basis.kps.rend());
  if (cfg.format == "json") {
    json j;
    j["command"] = "canonical-basis";
    j["alpha"] = cfg.alpha->to_string();
    j["blocks"] = json::array();
    for (const auto& mu : kps) {
      json blk;
      blk["lambda"] = mu.to_string();
      std::string label = multisegment_label(cfg.quiver, mu);
      if (!label.empty()) blk["label"] = label;
      json bexp = json::object();
      for (const auto& lam : basis.kps) {
        LaurentPoly c = cb.p.at(lam, mu);
        if (!c.is_zero()) bexp[lam.to_string()] = c.to_string();
      }
      blk["b"] = bexp;
      blk["dual_character"] = character_json(cfg.quiver, duals.at(mu).character());
      j["blocks"].push_back(blk);
    }
    out << j.dump(2) << "\n";
  } else {
    for (const auto& mu : kps) {
      out << "lambda: " << mu.to_string();
      std::string label = multisegment_label(cfg.quiver, mu);
      if (!label.empty()) out << "  " << label;
      out << "\n";
      out << "  b =";
      bool first = true;
      for (auto it = basis.kps.rbegin(); it != basis.kps.rend(); ++it) {
        LaurentPoly c = cb.p.at(*it, mu);
        if (c.is_zero()) continue;
        if (!first) out << " +";
        first = false;
        if (c.is_one())
          out << " r[" << it->to_string() << "]";
        else
          out << " (" << c.to_string() << ") * r[" << it->to_string() << "]";
      }
      out << "\n";
      out << "  b* character:\n";
      emit_character(out, cfg.quiver, duals.at(mu).character(), "    ");
    }
    for (const auto& [key, c] : cb.p.entries) {
      if (key.first == key.second) continue;
      out << "p[" << key.first.to_string() << " ; " << key.second.to_string()
          << "] = " << c.to_string() << "\n";
    }
  }
  return kExitOk;
}

int cmd_p_matrix(const JobConfig& cfg, std::ostream& out) {
  if (!cfg.alpha) throw error("p-matrix needs --alpha");
  ConvexOrder ord = order_for(cfg);
  ShuffleContext ctx(cfg.quiver);
  PbwBasis basis = make_pbw_basis(ctx, *cfg.alpha, ord);
  CanonicalBasis cb = canonical_basis(ctx, basis);
  if (cfg.format == "json") {
    json j;
    j["command"] = "p-matrix";
    json m = json::object();
    for (const auto& lam : basis.kps) {
      json row = json::object();
      for (const auto& mu : basis.kps) {
        LaurentPoly c = cb.p.at(lam, mu);
        if (!c.is_zero()) row[mu.to_string()] = c.to_string();
      }
      m[lam.to_string()] = row;
    }
    j["matrix"] = m;
    out << j.dump(2) << "\n";
  } else {
    // TSV either way: rows lambda, columns mu
    out << "lambda";
    for (const auto& mu : basis.kps) out << "\t" << mu.to_string();
    out << "\n";
    for (const auto& lam : basis.kps) {
      out << lam.to_string();
      for (const auto& mu : basis.kps) out << "\t" << cb.p.at(lam, mu).to_string();
      out << "\n";
    }
  }
  return kExitOk;
}

int cmd_characters(const JobConfig& cfg, std::ostream& out) {
  if (!cfg.alpha) throw error("characters needs --alpha");
  ConvexOrder ord = order_for(cfg);
  ShuffleContext ctx(cfg.quiver);
  PbwBasis basis = make_pbw_basis(ctx, *cfg.alpha, ord);
  CanonicalBasis cb = canonical_basis(ctx, basis);
  auto duals = dual_canonical_basis(basis, cb.p);
  std::vector<KostantPartition> kps(basis.kps.rbegin(), basis.kps.rend());
  json jout;
  if (cfg.format == "json") {
    jout["command"] = "characters";
    jout["blocks"] = json::array();
  }
  for (const auto& lam : kps) {
    Character ch = proper_standard_character(ctx, lam, ord);
    auto row = decompose_with(duals, ch);
    if (cfg.format == "json") {
      json blk;
      blk["lambda"] = lam.to_string();
      std::string label = multisegment_label(cfg.quiver, lam);
      if (!label.empty()) blk["label"] = label;
      blk["character"] = character_json(cfg.quiver, ch);
      json dec = json::object();
      for (const auto& [mu, c] : row) dec[mu.to_string()] = c.to_string();
      blk["decomposition"] = dec;
      jout["blocks"].push_back(blk);
    } else {
      out << "lambda: " << lam.to_string();
      std::string label = multisegment_label(cfg.quiver, lam);
      if (!label.empty()) out << "  " << label;
      out << "\n";
      out << "  character:\n";
      emit_character(out, cfg.quiver, ch, "    ");
      out << "  decomposition:\n";
      for (const auto& [mu, c] : row)
        out << "    " << mu.to_string() << " : " << c.to_string() << "\n";
    }
  }
  if (cfg.format == "json") out << jout.dump(2) << "\n";
  return kExitOk;
}

int cmd_verify(const JobConfig& cfg, std::ostream& out) {
  bool full = cfg.verify_level == "full";
  VerifyReport report =
      run_verification(cfg.quiver, cfg.alpha, cfg.w0, cfg.cutoff, full, out);
  return report.all_passed() ? kExitOk : kExitVerify;
}

}  // namespace

int run(const JobConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    cfg.quiver.validate();
    if (cfg.format != "text" && cfg.format != "json" && cfg.format != "tsv")
      throw error("unknown format: " + cfg.format);
    if (cfg.command == "roots") return cmd_roots(cfg, out);
    if (cfg.command == "words") return cmd_words(cfg, out);
    if (cfg.command == "shuffle") return cmd_shuffle(cfg, out);
    if (cfg.command == "gram") return cmd_gram(cfg, out);
    if (cfg.command == "canonical-basis") return cmd_canonical_basis(cfg, out);
    if (cfg.command == "p-matrix") return cmd_p_matrix(cfg, out);
    if (cfg.command == "characters") return cmd_characters(cfg, out);
    if (cfg.command == "verify") return cmd_verify(cfg, out);
    throw error("unknown command: " + cfg.command);
  } catch (const error& e) {
    err << "error: " << e.what() << "\n";
    return kExitConfig;
  }
}

}  // namespace klr
