// antipower: command-line front end for the anti-power library.
//
//   antipower prefix   --morphism 0:01,1:10 --length 16
//   antipower classify --morphism 0:01,1:10
//   antipower gamma    --morphism 0:01,1:10 --start 1 --k-max 100
//   antipower ap5      --morphism 0:01,1:00
//   antipower apk      --morphism 0:010,1:011 --start 7 --k 5
//   antipower c1       --morphism 0:01,1:10
//   antipower verify lemma5 --morphism 0:01,1:10 --prefix-len 1000000
//
// Exit codes: 0 ok, 1 usage, 2 horizon, 3 cap exceeded, 4 unsupported class,
// 5 theorem violation (including nonempty scan reports).

#include <cstdio>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "antipower/antipower.hpp"
#include "antipower/construct.hpp"
#include "antipower/json.hpp"
#include "antipower/morphism.hpp"
#include "antipower/verify.hpp"

namespace {

using namespace antipower;

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kHorizon = 2,
  kCapExceeded = 3,
  kUnsupportedClass = 4,
  kTheoremViolation = 5,
};

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::horizon_exceeded: return kHorizon;
    case ErrorKind::cap_exceeded: return kCapExceeded;
    case ErrorKind::unsupported_class:
    case ErrorKind::classification_inconsistency: return kUnsupportedClass;
    case ErrorKind::theorem_violation:
    case ErrorKind::unconfirmed_factor: return kTheoremViolation;
    default: return kUsage;
  }
}

struct RunConfig {
  std::string morphism_text;
  Index horizon_cap = WordStream::kDefaultHorizon;
  std::string format;
  Index length = 0;
  Index start = 1;
  Index k = 1;
  Index k_max = 1;
  Index prefix_len = 0;
  int alpha = 1;
  Index r = 2;
  std::optional<Index> m_cap;
  std::string property;
};

UniformMorphism load_morphism(const RunConfig& cfg) {
  UniformMorphism mu = parse_morphism(cfg.morphism_text);
  if (!mu.prolongable()) {
    const UniformMorphism swapped = normalized(mu);
    if (!swapped.prolongable()) require_prolongable(mu);
    std::cerr << "note: " << mu.to_string() << " generates a word starting with 1; using " << swapped.to_string()
              << " with letters exchanged\n";
    return swapped;
  }
  return mu;
}

void print_json(const Json& j) { std::cout << j.dump(2) << "\n"; }

int finish_report(const ScanReport& report) {
  print_json(to_json(report));
  return report.clean() ? kOk : kTheoremViolation;
}

int run_prefix(const RunConfig& cfg) {
  const UniformMorphism mu = load_morphism(cfg);
  WordStream stream = fixed_point(mu, cfg.horizon_cap);
  const FiniteWord prefix = stream.prefix(cfg.length);
  if (cfg.format == "json") {
    Json out;
    out["morphism"] = mu.to_string();
    out["length"] = cfg.length;
    out["prefix"] = std::string(prefix.str());
    print_json(out);
  } else {
    std::cout << prefix.str() << "\n";
  }
  return kOk;
}

int run_classify(const RunConfig& cfg) {
  const UniformMorphism mu = load_morphism(cfg);
  const Classification cls = classify(mu);
  if (cfg.format == "plain") {
    std::cout << "morphism: " << mu.to_string() << "\n"
              << "aperiodic: " << (cls.aperiodic ? "true" : "false") << "\n"
              << "uniformly_recurrent: " << (cls.uniformly_recurrent ? "true" : "false") << "\n"
              << "reason: " << to_string(cls.reason) << "\n";
  } else {
    print_json(to_json(cls));
  }
  return kOk;
}

int run_gamma(const RunConfig& cfg) {
  const UniformMorphism mu = load_morphism(cfg);
  if (cfg.k_max < 1 || cfg.start < 1) throw Error(ErrorKind::undefined_input, "--start and --k-max must be >= 1");
  std::vector<GammaRow> rows;
  std::optional<RecurrenceConstant> rc;
  if (!cfg.m_cap) rc = recurrence_constant(mu);  // unsupported-class without an explicit cap
  WordStream stream = fixed_point(mu, cfg.horizon_cap);
  for (Index k = 1; k <= cfg.k_max; ++k) {
    const Index cap = cfg.m_cap ? *cfg.m_cap : linear_block_bound(*rc, k);
    const GammaResult g = gamma(stream, cfg.start, k, cap);
    if (!verify_witness(stream, g.witness)) throw Error(ErrorKind::theorem_violation, "gamma witness failed replay");
    rows.push_back({k, g.m});
  }
  GammaTable table{ScanReport{ScanProperty::gamma_ratios, cfg.k_max, {}, {}, {}}, rows};
  if (cfg.format == "json") {
    Json out = Json::array();
    for (const auto& row : rows) {
      Json item;
      item["k"] = row.k;
      item["gamma"] = row.gamma;
      out.push_back(item);
    }
    print_json(out);
  } else {
    std::cout << table.csv();
  }
  return kOk;
}

int run_ap5(const RunConfig& cfg) {
  const UniformMorphism mu = load_morphism(cfg);
  const Classification cls = classify(mu);
  if (!cls.aperiodic) {
    throw Error(ErrorKind::unsupported_class, mu.to_string() + " generates an eventually periodic word (" + to_string(cls.reason) + ")");
  }
  WordStream stream = fixed_point(mu, cfg.horizon_cap);
  const FiveAntiPower ap = build_five_anti_power(stream);
  if (!verify_witness(stream, ap.witness)) throw Error(ErrorKind::theorem_violation, "five-block witness failed replay");
  if (cfg.format == "plain") {
    std::cout << "5-anti-power at " << ap.witness.start << " with block length " << ap.witness.block_length
              << " (candidate c=" << *ap.witness.candidate_c << ", anchor length " << ap.anchor.ell << ")\n";
  } else {
    print_json(to_json(ap));
  }
  return kOk;
}

int run_apk(const RunConfig& cfg) {
  const UniformMorphism mu = load_morphism(cfg);
  const RecurrenceConstant rc = recurrence_constant(mu);
  WordStream stream = fixed_point(mu, cfg.horizon_cap);
  const MorphicAntiPower ap = build_morphic_anti_power(mu, stream, rc, cfg.start, cfg.k);
  if (!verify_witness(stream, ap.witness)) throw Error(ErrorKind::theorem_violation, "witness failed replay");
  if (cfg.format == "plain") {
    std::cout << cfg.k << "-anti-power at " << ap.witness.start << " with block length " << ap.witness.block_length << "\n";
  } else {
    print_json(to_json(ap.witness));
  }
  return kOk;
}

int run_c1(const RunConfig& cfg) {
  const UniformMorphism mu = load_morphism(cfg);
  const RecurrenceConstant rc = recurrence_constant(mu);
  if (cfg.format == "plain") {
    std::cout << "c1 = " << rc.c1 << " (marker " << rc.marker.str() << "), C = " << rc.C << "\n";
  } else {
    print_json(to_json(rc));
  }
  return kOk;
}

int run_verify(const RunConfig& cfg) {
  if (cfg.property == "prop3-agreement") return finish_report(check_prop3_battery(cfg.r));
  const UniformMorphism mu = load_morphism(cfg);
  if (cfg.property == "lemma5") return finish_report(check_lemma5(mu, cfg.prefix_len, cfg.horizon_cap));
  if (cfg.property == "corollary7") return finish_report(check_corollary7(mu, cfg.alpha, cfg.prefix_len, cfg.horizon_cap));
  if (cfg.property == "gamma-ratios") {
    const GammaTable table = gamma_ratio_table(mu, cfg.start, cfg.k_max, cfg.horizon_cap);
    if (cfg.format == "csv") {
      std::cout << table.csv();
      return table.report.clean() ? kOk : kTheoremViolation;
    }
    return finish_report(table.report);
  }
  throw Error(ErrorKind::undefined_input, "unknown property " + cfg.property);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Anti-powers in binary uniform-morphic words"};
  app.require_subcommand(1);
  RunConfig cfg;

  std::map<CLI::App*, std::string> default_format;
  const auto common = [&cfg, &default_format](CLI::App* sub, bool needs_morphism, const std::string& format) {
    default_format[sub] = format;
    auto* opt = sub->add_option("--morphism", cfg.morphism_text, "Morphism as 0:A,1:B, e.g. 0:01,1:10");
    if (needs_morphism) opt->required();
    sub->add_option("--horizon", cfg.horizon_cap, "Maximum prefix length any search may generate")
        ->check(CLI::PositiveNumber);
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "csv", "plain"}));
  };

  auto* prefix = app.add_subcommand("prefix", "Print a prefix of the fixed point");
  common(prefix, true, "plain");
  prefix->add_option("--length", cfg.length, "Prefix length")->required()->check(CLI::NonNegativeNumber);

  auto* classify_cmd = app.add_subcommand("classify", "Aperiodicity and uniform recurrence of the fixed point");
  common(classify_cmd, true, "json");

  auto* gamma_cmd = app.add_subcommand("gamma", "Table of smallest k-anti-power block lengths");
  common(gamma_cmd, true, "csv");
  gamma_cmd->add_option("--start", cfg.start, "1-based start position");
  gamma_cmd->add_option("--k-max", cfg.k_max, "Largest k")->required();
  gamma_cmd->add_option("--m-cap", cfg.m_cap, "Block-length cap (required outside the theorem class)");

  auto* ap5 = app.add_subcommand("ap5", "Build a 5-anti-power");
  common(ap5, true, "json");

  auto* apk = app.add_subcommand("apk", "Build a k-anti-power with linearly bounded block length");
  common(apk, true, "json");
  apk->add_option("--start", cfg.start, "1-based start position");
  apk->add_option("--k", cfg.k, "Number of blocks")->required();

  auto* c1 = app.add_subcommand("c1", "Recurrence constant c1 and C = (c1+2) r");
  common(c1, true, "json");

  auto* verify = app.add_subcommand("verify", "Run a property scan; exit 0 iff no violations");
  common(verify, false, "json");
  verify->add_option("property", cfg.property, "lemma5 | corollary7 | prop3-agreement | gamma-ratios")
      ->required()
      ->check(CLI::IsMember({"lemma5", "corollary7", "prop3-agreement", "gamma-ratios"}));
  verify->add_option("--prefix-len", cfg.prefix_len, "Prefix length to scan");
  verify->add_option("--alpha", cfg.alpha, "Exponent alpha for corollary7");
  verify->add_option("--r", cfg.r, "Uniformity for prop3-agreement");
  verify->add_option("--start", cfg.start, "Start position for gamma-ratios");
  verify->add_option("--k-max", cfg.k_max, "Largest k for gamma-ratios");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  for (const auto& [sub, format] : default_format) {
    if (sub->parsed() && cfg.format.empty()) cfg.format = format;
  }

  try {
    if (verify->parsed() && cfg.property != "prop3-agreement" && cfg.morphism_text.empty()) {
      throw Error(ErrorKind::undefined_input, "--morphism is required for " + cfg.property);
    }
    if (*prefix) return run_prefix(cfg);
    if (*classify_cmd) return run_classify(cfg);
    if (*gamma_cmd) return run_gamma(cfg);
    if (*ap5) return run_ap5(cfg);
    if (*apk) return run_apk(cfg);
    if (*c1) return run_c1(cfg);
    if (*verify) return run_verify(cfg);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.kind());
  }
  return kUsage;
}
