#pragma once

#include <algorithm>
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "antipower/antipower.hpp"
#include "antipower/construct.hpp"
#include "antipower/morphism.hpp"
#include "antipower/word.hpp"

namespace antipower {

enum class ScanProperty { lemma5, corollary7, prop3_agreement, gamma_ratios };

inline const char* to_string(ScanProperty p) {
  switch (p) {
    case ScanProperty::lemma5: return "lemma5";
    case ScanProperty::corollary7: return "corollary7";
    case ScanProperty::prop3_agreement: return "prop3-agreement";
    case ScanProperty::gamma_ratios: return "gamma-ratios";
  }
  return "unknown";
}

/// One counterexample (or informational observation): a short label plus named integers.
struct Finding {
  std::string what;
  std::map<std::string, Index> at;
  friend bool operator==(const Finding&, const Finding&) = default;
};

struct ScanReport {
  ScanProperty property = ScanProperty::lemma5;
  Index instances_checked = 0;
  std::vector<Finding> violations;
  std::vector<Finding> observations;
  std::map<std::string, Index> parameters;

  bool clean() const noexcept { return violations.empty(); }
};

/// Every gamma with [gamma+1, gamma+3r] equal to AAB or BBA must be a multiple of r.
inline ScanReport check_lemma5(const UniformMorphism& mu, Index prefix_len, Index horizon_cap = WordStream::kDefaultHorizon) {
  if (!classify(mu).aperiodic) throw Error(ErrorKind::unsupported_class, mu.to_string() + " is not aperiodic");
  const Index r = mu.r();
  if (prefix_len < 3 * r) throw Error(ErrorKind::undefined_input, "prefix_len must be >= 3r");
  WordStream stream = fixed_point(mu, horizon_cap);
  ScanReport report{ScanProperty::lemma5, prefix_len - 3 * r + 1, {}, {}, {{"r", r}, {"prefix_len", prefix_len}}};
  const FiniteWord& a = mu.image_of_0();
  const FiniteWord& b = mu.image_of_1();
  for (const auto& [label, pattern] : {std::pair{"AAB", a + a + b}, std::pair{"BBA", b + b + a}}) {
    for (const Index start : occurrences(stream, pattern, prefix_len).positions) {
      const Index offset = start - 1;
      if (offset % r != 0) report.violations.push_back({label, {{"gamma", offset}}});
    }
  }
  std::sort(report.violations.begin(), report.violations.end(),
            [](const Finding& x, const Finding& y) { return x.at.at("gamma") < y.at.at("gamma"); });
  return report;
}

/// Sampled starts: 1..200 together with the multiples of r^alpha up to 200 r^alpha.
inline std::vector<Index> corollary7_sample_starts(Index r_alpha) {
  std::vector<Index> starts;
  for (Index s = 1; s <= 200; ++s) starts.push_back(s);
  for (Index j = 1; j <= 200; ++j) starts.push_back(j * r_alpha);
  std::sort(starts.begin(), starts.end());
  starts.erase(std::unique(starts.begin(), starts.end()), starts.end());
  return starts;
}

/// For each sampled start s, the factor of length r^alpha c1 + 2 r^alpha - 2 at s may only
/// recur at positions congruent to s modulo r^alpha.
inline ScanReport check_corollary7(const UniformMorphism& mu, int alpha, Index prefix_len,
                                   Index horizon_cap = WordStream::kDefaultHorizon) {
  if (alpha < 1) throw Error(ErrorKind::undefined_input, "alpha must be >= 1");
  const RecurrenceConstant rc = recurrence_constant(mu);
  const Index r_alpha = power(mu, alpha).r();
  const Index length = r_alpha * rc.c1 + 2 * r_alpha - 2;
  WordStream stream = fixed_point(mu, horizon_cap);
  stream.ensure(prefix_len);
  ScanReport report{ScanProperty::corollary7, 0, {}, {},
                    {{"alpha", alpha}, {"r_alpha", r_alpha}, {"c1", rc.c1}, {"length", length}, {"prefix_len", prefix_len}}};
  for (const Index s : corollary7_sample_starts(r_alpha)) {
    if (s + length - 1 > prefix_len) continue;
    const auto found = occurrences(stream, stream.factor(s, s + length - 1), prefix_len);
    ++report.instances_checked;
    for (const Index o : found.positions) {
      if ((o - s) % r_alpha != 0) report.violations.push_back({"incongruent", {{"start", s}, {"occurrence", o}}});
    }
  }
  return report;
}

/// All binary r-uniform morphisms prolongable at 0, in lexicographic order of (A, B).
inline std::vector<UniformMorphism> prolongable_morphisms(Index r) {
  std::vector<UniformMorphism> out;
  const auto word_of = [r](Index bits) {
    std::string s(static_cast<std::size_t>(r), '0');
    for (Index p = 0; p < r; ++p) s[static_cast<std::size_t>(p)] = ((bits >> (r - 1 - p)) & 1) ? '1' : '0';
    return FiniteWord::unchecked(s);
  };
  for (Index a = 0; a < (Index{1} << (r - 1)); ++a) {
    for (Index b = 0; b < (Index{1} << r); ++b) out.emplace_back(word_of(a), word_of(b));
  }
  return out;
}

inline constexpr Index kProbePrefix = Index{1} << 16;
inline constexpr Index kProbeMinTail = Index{1} << 15;
inline constexpr Index kProbeAperiodicMaxPeriod = 64;

/// Classifier versus periodicity probe: a non-aperiodic verdict needs a period <= 2r on a
/// 2^16 prefix, an aperiodic verdict needs no period <= 64 there.
inline bool classify_agrees_with_probe(const UniformMorphism& mu) {
  const Classification cls = classify(mu);
  WordStream stream = fixed_point(mu, kProbePrefix);
  const FiniteWord prefix = stream.prefix(kProbePrefix);
  if (cls.aperiodic) return !eventually_periodic_probe(prefix, kProbeAperiodicMaxPeriod, kProbeMinTail).has_value();
  return eventually_periodic_probe(prefix, 2 * mu.r(), kProbeMinTail).has_value();
}

inline ScanReport check_prop3_battery(Index r) {
  if (r != 2 && r != 3) throw Error(ErrorKind::undefined_input, "battery defined for r = 2 or 3");
  ScanReport report{ScanProperty::prop3_agreement, 0, {}, {}, {{"r", r}}};
  Index index = 0;
  Index aperiodic = 0;
  for (const auto& mu : prolongable_morphisms(r)) {
    ++report.instances_checked;
    const Classification cls = classify(mu);
    aperiodic += cls.aperiodic;
    if (!classify_agrees_with_probe(mu)) {
      report.violations.push_back({mu.to_string(), {{"index", index}, {"aperiodic", cls.aperiodic}}});
    }
    ++index;
  }
  report.parameters["aperiodic"] = aperiodic;
  return report;
}

struct GammaRow {
  Index k = 0;
  Index gamma = 0;
};

struct GammaTable {
  ScanReport report;
  std::vector<GammaRow> rows;

  /// "k,gamma,ratio" with the ratio to 6 decimals.
  std::string csv() const {
    std::string out = "k,gamma,ratio\n";
    char buf[96];
    for (const auto& row : rows) {
      std::snprintf(buf, sizeof buf, "%lld,%lld,%.6f\n", static_cast<long long>(row.k), static_cast<long long>(row.gamma),
                    static_cast<double>(row.gamma) / static_cast<double>(row.k));
      out += buf;
    }
    return out;
  }
};

/// gamma at position i for k = 1..k_max, capped by the linear bound C k. A k >= 10 whose ratio
/// leaves [1/10, 3/2] is recorded as an observation for the Thue-Morse morphism only.
inline GammaTable gamma_ratio_table(const UniformMorphism& mu, Index i, Index k_max,
                                    Index horizon_cap = WordStream::kDefaultHorizon) {
  const RecurrenceConstant rc = recurrence_constant(mu);
  const bool thue_morse = mu == UniformMorphism(FiniteWord("01"), FiniteWord("10"));
  WordStream stream = fixed_point(mu, horizon_cap);
  GammaTable table;
  table.report = ScanReport{ScanProperty::gamma_ratios, 0, {}, {}, {{"start", i}, {"k_max", k_max}, {"c1", rc.c1}, {"C", rc.C}}};
  for (Index k = 1; k <= k_max; ++k) {
    const Index bound = linear_block_bound(rc, k);
    const GammaResult g = gamma(stream, i, k, bound);
    table.rows.push_back({k, g.m});
    ++table.report.instances_checked;
    if (g.m > bound) table.report.violations.push_back({"above-linear-bound", {{"k", k}, {"gamma", g.m}}});
    // 10 * gamma < k  <=>  ratio < 1/10;  2 * gamma > 3k  <=>  ratio > 3/2
    if (thue_morse && k >= 10 && (10 * g.m < k || 2 * g.m > 3 * k)) {
      table.report.observations.push_back({"outside-band", {{"k", k}, {"gamma", g.m}}});
    }
  }
  return table;
}

}  // namespace antipower
