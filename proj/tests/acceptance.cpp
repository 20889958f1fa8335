// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <nlohmann/json.hpp>
#include <sstream>
#include <string>

#include "antipower/construct.hpp"
#include "antipower/verify.hpp"
#include "oracles.hpp"

using namespace antipower;

namespace {

// Tolerances.
constexpr double kAp5SecondsPerWord = 60.0;
constexpr double kLinearBoundSeconds = 300.0;
constexpr Index kMaxStart = 50;
constexpr Index kMaxK = 30;
constexpr Index kAlignmentPrefix = 1'000'000;
constexpr Index kCongruencePrefix = 100'000;
constexpr Index kGammaSmallK = 20;
constexpr Index kGammaLargeK = 100;
constexpr Index kMarkerPrefix = Index{1} << 14;
constexpr double kBandLow = 0.1;
constexpr double kBandHigh = 1.5;

const char* const kTheoremWords[] = {"0:01,1:10", "0:01,1:00", "0:010,1:011"};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string prefix_of(const UniformMorphism& mu, Index n) {
  return oracle::prefix(std::string(mu.image_of_0().str()), std::string(mu.image_of_1().str()), n);
}

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  void fail(const std::string& why) {
    if (pass) detail.str("");
    pass = false;
    detail << why << "; ";
  }
};

std::pair<int, std::string> run_cli(const std::string& args) {
  const std::string command = std::string(ANTIPOWER_CLI_PATH) + " " + args + " 2>/dev/null";
  std::string out;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return {-1, out};
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

// ---- criterion bodies ----

void five_block_frames(Outcome& o) {
  for (const char* text : kTheoremWords) {
    const auto mu = parse_morphism(text);
    const auto t0 = Clock::now();
    const auto [rc, out] = run_cli(std::string("ap5 --morphism ") + text);
    const double elapsed = seconds_since(t0);
    if (rc != 0) {
      o.fail(std::string(text) + " exit " + std::to_string(rc));
      continue;
    }
    if (elapsed > kAp5SecondsPerWord) o.fail(std::string(text) + " took " + std::to_string(elapsed) + "s");
    const auto j = nlohmann::json::parse(out);
    const auto& f = j.at("frame");
    const Index i1 = f.at("i1"), i2 = f.at("i2"), i3 = f.at("i3"), i4 = f.at("i4");
    const Index d1 = f.at("d1"), d2 = f.at("d2"), j0 = f.at("j0"), j1 = f.at("j1"), j2 = f.at("j2");
    const Index D = f.at("D"), ell = f.at("ell");
    const Index start = j.at("start"), m = j.at("block_length");
    const int c = j.at("c");

    const std::string word = prefix_of(mu, start + 5 * m + 1);
    const auto at = [&](Index i, Index len) { return word.substr(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(len)); };
    const std::string anchor = at(i1, ell);
    std::vector<std::string> blocks;
    for (int a = 0; a < 5; ++a) blocks.push_back(at(start + a * m, m));

    const bool ok = ell > 100 && oracle::unbordered(anchor) && at(i2, ell) == anchor && at(i3, ell) == anchor &&
                    at(i4, ell) == anchor && i2 - i1 == d1 && i4 - i3 == d1 && i3 - i2 == d2 && d1 >= ell + 1000 &&
                    d2 >= 10 * d1 && i1 >= d2 && j1 == i1 + ell + 500 && (j2 == i3 + ell + 500 || j2 == i3 + ell + 501) &&
                    (j2 - j1) % 2 == 0 && D == (j2 - j1) / 2 && j0 == j1 - D && j0 >= 1 && start == j0 && m == D + c &&
                    c >= 0 && c <= 10 && oracle::pairwise_distinct(blocks) &&
                    j.at("blocks").get<std::vector<std::string>>() == blocks;
    if (!ok) o.fail(std::string(text) + " frame or blocks inconsistent");
    o.detail << text << " start=" << start << " m=" << m << " c=" << c << " (" << elapsed << "s); ";
  }
}

void candidate_counting(Outcome& o) {
  for (const char* text : kTheoremWords) {
    const auto mu = parse_morphism(text);
    auto stream = fixed_point(mu);
    const auto ap = build_five_anti_power(stream);
    const auto& f = ap.frame;
    const std::string word = prefix_of(mu, candidate_block_start(f, 10, 6));
    const auto at = [&](Index i, Index len) { return word.substr(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(len)); };
    int good = 0;
    for (int a = 1; a <= 5; ++a) {
      for (int b = a + 1; b <= 5; ++b) {
        int hits = 0;
        for (int c = 0; c <= 10; ++c) {
          hits += at(f.j0 + (a - 1) * (f.D + c), f.D + c) == at(f.j0 + (b - 1) * (f.D + c), f.D + c);
        }
        if (hits > 1) o.fail(std::string(text) + " pair (" + std::to_string(a) + "," + std::to_string(b) + ") hits " + std::to_string(hits));
      }
    }
    for (int c = 0; c <= 10; ++c) good += ap.equal_pairs[static_cast<std::size_t>(c)].empty();
    if (good == 0) o.fail(std::string(text) + " no good candidate");
    o.detail << text << " good candidates " << good << "/11; ";
  }
}

void linear_bound(Outcome& o) {
  const auto t0 = Clock::now();
  Index witnesses = 0;
  for (const char* text : {"0:01,1:10", "0:010,1:011"}) {
    const auto mu = parse_morphism(text);
    const auto rc = recurrence_constant(mu);
    auto stream = fixed_point(mu);
    const std::string word = prefix_of(mu, kMaxStart + kMaxK * kMaxK * rc.C);
    for (Index i = 1; i <= kMaxStart; ++i) {
      for (Index k = 1; k <= kMaxK; ++k) {
        const auto ap = build_morphic_anti_power(mu, stream, rc, i, k);
        const Index m = ap.witness.block_length;
        std::vector<std::string> blocks;
        for (Index a = 0; a < k; ++a) blocks.push_back(word.substr(static_cast<std::size_t>(i - 1 + a * m), static_cast<std::size_t>(m)));
        if (m >= rc.C * k && k > 1) o.fail(std::string(text) + " m >= Ck at i=" + std::to_string(i) + " k=" + std::to_string(k));
        if (!oracle::pairwise_distinct(blocks)) o.fail(std::string(text) + " repeated block at i=" + std::to_string(i) + " k=" + std::to_string(k));
        ++witnesses;
      }
    }
  }
  const double elapsed = seconds_since(t0);
  if (elapsed > kLinearBoundSeconds) o.fail("took " + std::to_string(elapsed) + "s");
  o.detail << witnesses << " witnesses in " << elapsed << "s";
}

void alignment_rule(Outcome& o) {
  int morphisms = 0;
  for (const Index r : {2, 3}) {
    for (const auto& mu : prolongable_morphisms(r)) {
      if (!classify(mu).aperiodic) continue;
      const auto report = check_lemma5(mu, kAlignmentPrefix);
      if (!report.clean()) o.fail(mu.to_string() + " has " + std::to_string(report.violations.size()) + " violations");
      ++morphisms;
    }
  }
  o.detail << morphisms << " aperiodic morphisms over " << kAlignmentPrefix << " letters";
}

void congruence_rule(Outcome& o) {
  int runs = 0;
  for (const Index r : {2, 3}) {
    for (const auto& mu : prolongable_morphisms(r)) {
      const auto cls = classify(mu);
      if (!cls.aperiodic || !cls.uniformly_recurrent) continue;
      for (const int alpha : {1, 2}) {
        const auto report = check_corollary7(mu, alpha, kCongruencePrefix);
        if (!report.clean()) o.fail(mu.to_string() + " alpha=" + std::to_string(alpha) + " violated");
        ++runs;
      }
    }
  }
  o.detail << runs << " (morphism, alpha) scans";
}

void classification_battery(Outcome& o) {
  Index total = 0;
  for (const Index r : {2, 3}) {
    const auto report = check_prop3_battery(r);
    total += report.instances_checked;
    if (!report.clean()) o.fail("r=" + std::to_string(r) + " disagreements " + std::to_string(report.violations.size()));
  }
  if (total != 8 + 32) o.fail("checked " + std::to_string(total) + " morphisms");
  o.detail << total << " morphisms";
}

void small_gamma(Outcome& o) {
  const auto mu = parse_morphism("0:01,1:10");
  auto stream = fixed_point(mu);
  const std::string word = prefix_of(mu, 20000);
  for (Index k = 1; k <= kGammaSmallK; ++k) {
    const Index g = gamma(stream, 1, k, 1000).m;
    const Index expected = oracle::gamma(word, 1, k, 1000);
    if (g != expected) o.fail("k=" + std::to_string(k) + " got " + std::to_string(g) + " brute force " + std::to_string(expected));
  }
  if (gamma(stream, 1, 2, 10).m != 1) o.fail("gamma(2) != 1");
  if (gamma(stream, 1, 3, 10).m != 5) o.fail("gamma(3) != 5");
  o.detail << "k<=" << kGammaSmallK << " against exhaustive search";
}

void large_gamma(Outcome& o) {
  const auto mu = parse_morphism("0:01,1:10");
  const auto table = gamma_ratio_table(mu, 1, kGammaLargeK);
  if (!table.report.clean()) o.fail("linear bound exceeded");
  int outside = 0;
  for (const auto& row : table.rows) {
    const double ratio = static_cast<double>(row.gamma) / static_cast<double>(row.k);
    if (row.k >= 10 && (ratio < kBandLow || ratio > kBandHigh)) ++outside;
    if (row.gamma > 24 * row.k) o.fail("k=" + std::to_string(row.k) + " gamma " + std::to_string(row.gamma));
  }
  o.detail << "k<=" << kGammaLargeK << ", gamma(100)=" << table.rows.back().gamma << ", " << outside
           << " ratios outside [0.1, 1.5] (informational)";
}

void recurrence_dual(Outcome& o) {
  for (const char* text : {"0:01,1:10", "0:010,1:011"}) {
    const auto mu = parse_morphism(text);
    const auto rc = recurrence_constant(mu);
    const Index scanned = oracle::marker_avoidance_bound(prefix_of(mu, kMarkerPrefix), std::string(rc.marker.str()));
    if (rc.c1 != scanned) o.fail(std::string(text) + " closure " + std::to_string(rc.c1) + " scan " + std::to_string(scanned));
    if (rc.C != (rc.c1 + 2) * mu.r()) o.fail(std::string(text) + " C mismatch");
    o.detail << text << " c1=" << rc.c1 << " marker " << rc.marker.str() << "; ";
  }
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<void(Outcome&)>> criteria[] = {
      {"five-block construction", five_block_frames},
      {"candidate counting", candidate_counting},
      {"linear block length", linear_bound},
      {"alignment of AAB/BBA", alignment_rule},
      {"occurrence congruence", congruence_rule},
      {"classification battery", classification_battery},
      {"gamma small k", small_gamma},
      {"gamma up to k=100", large_gamma},
      {"recurrence constant", recurrence_dual},
  };
  int failures = 0;
  int n = 0;
  for (const auto& [name, body] : criteria) {
    ++n;
    Outcome o;
    try {
      body(o);
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    failures += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " " << n << " " << name << ": " << o.detail.str() << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
