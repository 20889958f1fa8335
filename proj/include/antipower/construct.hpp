#pragma once

#include <array>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "antipower/antipower.hpp"
#include "antipower/error.hpp"
#include "antipower/morphism.hpp"
#include "antipower/word.hpp"

namespace antipower {

// Constants of the five-block construction. They are tuned together; t = 100 is what keeps
// the 11 candidates from colliding, so none of them is configurable.
inline constexpr Index kAnchorSeparation = 100;
inline constexpr Index kPairGapSlack = 1000;
inline constexpr Index kPairCopyFactor = 10;
inline constexpr Index kFrameOffset = 500;
inline constexpr int kCandidateCount = 11;
inline constexpr int kFiveBlocks = 5;

/// An unbordered factor longer than t; two of its occurrences are never within distance t.
struct SpacedFactor {
  FiniteWord w;
  Index ell = 0;
  Index t = 0;
  Index first_occurrence = 0;
};

/// Four occurrences of the anchor: i2-i1 = i4-i3 = d1, i3-i2 = d2.
struct OccurrencePattern {
  Index i1 = 0, i2 = 0, i3 = 0, i4 = 0;
  Index d1 = 0, d2 = 0;
};

struct FrameParameters {
  Index j0 = 0, j1 = 0, j2 = 0;
  Index D = 0;
};

struct RecurrenceConstant {
  Index c1 = 0;
  FiniteWord marker;
  Index r = 0;
  Index C = 0;  // (c1 + 2) * r
};

/// Scans start positions p = 1, 2, ... and returns the first p whose suffix has an unbordered
/// prefix longer than t, taking the shortest such prefix. The scan window doubles until the
/// horizon is reached.
inline SpacedFactor find_spaced_factor(WordStream& stream, Index t) {
  if (t < 0) throw Error(ErrorKind::undefined_input, "t must be >= 0");
  Index largest_seen = 0;
  for (Index window = 4 * (t + 1);; window *= 2) {
    const Index horizon = stream.horizon();
    const Index span = std::min(window, horizon);
    for (Index p = 1; p <= span && p + t <= horizon; ++p) {
      const Index last = std::min(p + span - 1, horizon);
      const std::string_view text = stream.view(p, last);
      const auto border = border_array(text);
      for (Index len = 1; len < static_cast<Index>(border.size()); ++len) {
        if (border[static_cast<std::size_t>(len)] != 0) continue;
        largest_seen = std::max(largest_seen, len);
        if (len > t) return {FiniteWord::unchecked(text.substr(0, static_cast<std::size_t>(len))), len, t, p};
      }
    }
    if (window >= horizon) {
      throw Error(ErrorKind::horizon_exceeded, "no unbordered factor longer than " + std::to_string(t) +
                                                   " within horizon cap " + std::to_string(horizon) +
                                                   "; largest unbordered length seen " + std::to_string(largest_seen));
    }
  }
}

namespace detail {
inline std::string describe(const OccurrencePattern& p) {
  std::ostringstream os;
  os << "i1=" << p.i1 << " i2=" << p.i2 << " i3=" << p.i3 << " i4=" << p.i4 << " d1=" << p.d1 << " d2=" << p.d2;
  return os.str();
}
inline std::string describe(const FrameParameters& f) {
  std::ostringstream os;
  os << "j0=" << f.j0 << " j1=" << f.j1 << " j2=" << f.j2 << " D=" << f.D;
  return os.str();
}
}  // namespace detail

/// Checks every OccurrencePattern invariant against the stream.
inline bool pattern_is_valid(WordStream& stream, const SpacedFactor& sf, const OccurrencePattern& p) {
  if (p.i2 - p.i1 != p.d1 || p.i4 - p.i3 != p.d1 || p.i3 - p.i2 != p.d2) return false;
  if (p.d1 < sf.ell + kPairGapSlack || p.d2 < kPairCopyFactor * p.d1 || p.i1 < p.d2) return false;
  for (const Index at : {p.i1, p.i2, p.i3, p.i4}) {
    if (stream.view(at, at + sf.ell - 1) != sf.w.str()) return false;
  }
  return true;
}

/// Locates i1 < i2 < i3 < i4 by three earliest-occurrence searches: a partner occurrence at
/// distance >= ell + 1000, a copy of that pair starting >= 10 d1 after the partner, and a copy
/// of all four starting past d2.
inline OccurrencePattern find_occurrence_pattern(WordStream& stream, const SpacedFactor& sf) {
  if (sf.ell <= kAnchorSeparation || sf.w.length() != sf.ell || !is_unbordered(sf.w)) {
    throw Error(ErrorKind::undefined_input, "anchor must be unbordered with length > " + std::to_string(kAnchorSeparation));
  }
  const Index p = sf.first_occurrence;
  if (stream.view(p, p + sf.ell - 1) != sf.w.str()) {
    throw Error(ErrorKind::undefined_input, "anchor does not occur at its recorded first occurrence");
  }
  const Index q = find_first(stream, sf.w.str(), p + sf.ell + kPairGapSlack, "pair partner (d1)");
  const Index d1 = q - p;
  const FiniteWord pair = stream.factor(p, p + d1 + sf.ell - 1);
  // d2 is measured from the second anchor of the first pair (q) to the first anchor of the copy.
  const Index p_copy = find_first(stream, pair.str(), q + kPairCopyFactor * d1, "pair copy (d2)");
  const Index d2 = p_copy - q;
  const FiniteWord quad = stream.factor(p, p_copy + d1 + sf.ell - 1);
  const Index i1 = find_first(stream, quad.str(), d2 + 1, "quadruple copy (i1)");
  OccurrencePattern pattern{i1, i1 + d1, i1 + d1 + d2, i1 + 2 * d1 + d2, d1, d2};
  if (!pattern_is_valid(stream, sf, pattern)) {
    throw Error(ErrorKind::theorem_violation, "occurrence pattern fails its invariants: " + detail::describe(pattern));
  }
  return pattern;
}

/// j1 = i1 + ell + 500; j2 is i3 + ell + 500 or + 501, whichever makes j2 - j1 even.
inline FrameParameters frame_for(const OccurrencePattern& p, Index ell) {
  FrameParameters f;
  f.j1 = p.i1 + ell + kFrameOffset;
  f.j2 = p.i3 + ell + kFrameOffset;
  if ((f.j2 - f.j1) % 2 != 0) ++f.j2;
  f.D = (f.j2 - f.j1) / 2;
  f.j0 = f.j1 - f.D;
  return f;
}

/// First position of block a (1-based) in candidate c.
inline Index candidate_block_start(const FrameParameters& f, int c, int a) { return f.j0 + (a - 1) * (f.D + c); }

struct FiveAntiPower {
  SpacedFactor anchor;
  OccurrencePattern pattern;
  FrameParameters frame;
  AntiPowerWitness witness;
  /// equal_pairs[c] lists the pairs (a, b), a < b, with equal blocks in candidate c.
  std::array<std::vector<std::pair<int, int>>, kCandidateCount> equal_pairs;
};

namespace detail {

inline std::string dump_candidates(const SpacedFactor& sf, const OccurrencePattern& p, const FrameParameters& f,
                                   const std::array<std::vector<std::pair<int, int>>, kCandidateCount>& equal) {
  std::ostringstream os;
  os << "anchor ell=" << sf.ell << " at " << sf.first_occurrence << "; pattern " << describe(p) << "; frame " << describe(f);
  for (int c = 0; c < kCandidateCount; ++c) {
    os << "\n  c=" << c << " blocks";
    for (int a = 1; a <= kFiveBlocks; ++a) {
      const Index s = candidate_block_start(f, c, a);
      os << " [" << s << "," << s + f.D + c - 1 << "]";
    }
    os << " equal pairs:";
    for (const auto& [a, b] : equal[static_cast<std::size_t>(c)]) os << " (" << a << "," << b << ")";
  }
  return os.str();
}

// Anchor copy inside block a (a <= 4) of candidate c must keep `margin` letters clear of both ends.
inline bool anchor_clear_of_ends(const FrameParameters& f, const OccurrencePattern& p, Index ell, int c, int a,
                                 Index margin) {
  const Index anchors[4] = {p.i1, p.i2, p.i3, p.i4};
  const Index start = candidate_block_start(f, c, a);
  const Index end = start + f.D + c - 1;
  const Index at = anchors[a - 1];
  return at - start > margin && end - (at + ell - 1) > margin;
}

}  // namespace detail

/// Five-block anti-power inside an aperiodic recurrent word: anchor, occurrence pattern, frame,
/// then the first of the 11 candidate families whose blocks are pairwise distinct.
inline FiveAntiPower build_five_anti_power(WordStream& stream) {
  FiveAntiPower out;
  out.anchor = find_spaced_factor(stream, kAnchorSeparation);
  out.pattern = find_occurrence_pattern(stream, out.anchor);
  out.frame = frame_for(out.pattern, out.anchor.ell);
  const auto& f = out.frame;
  const Index ell = out.anchor.ell;

  const auto fail = [&](const std::string& why) {
    return Error(ErrorKind::theorem_violation, why + "\n" + detail::dump_candidates(out.anchor, out.pattern, f, out.equal_pairs));
  };

  if ((f.j2 - f.j1) % 2 != 0 || f.j0 < 1) throw fail("frame invariants broken");
  for (int a = 1; a <= 4; ++a) {
    if (!detail::anchor_clear_of_ends(f, out.pattern, ell, 0, a, kAnchorSeparation)) {
      throw fail("anchor copy in block " + std::to_string(a) + " of candidate 0 is within 100 of an endpoint");
    }
    for (int c = 1; c < kCandidateCount; ++c) {
      if (!detail::anchor_clear_of_ends(f, out.pattern, ell, c, a, kAnchorSeparation / 2 - 1)) {
        throw fail("anchor copy in block " + std::to_string(a) + " of candidate " + std::to_string(c) +
                   " is within 50 of an endpoint");
      }
    }
  }

  stream.ensure(candidate_block_start(f, kCandidateCount - 1, kFiveBlocks + 1) - 1);
  std::optional<int> chosen;
  for (int c = 0; c < kCandidateCount; ++c) {
    const Index m = f.D + c;
    std::array<std::string_view, kFiveBlocks> blocks;
    for (int a = 1; a <= kFiveBlocks; ++a) blocks[static_cast<std::size_t>(a - 1)] = stream.view(candidate_block_start(f, c, a), candidate_block_start(f, c, a) + m - 1);
    for (int a = 0; a < kFiveBlocks; ++a) {
      for (int b = a + 1; b < kFiveBlocks; ++b) {
        if (blocks[static_cast<std::size_t>(a)] == blocks[static_cast<std::size_t>(b)]) {
          out.equal_pairs[static_cast<std::size_t>(c)].emplace_back(a + 1, b + 1);
        }
      }
    }
    if (!chosen && out.equal_pairs[static_cast<std::size_t>(c)].empty()) chosen = c;
  }

  // A pair (a, b) may coincide for at most one candidate.
  for (int a = 1; a <= kFiveBlocks; ++a) {
    for (int b = a + 1; b <= kFiveBlocks; ++b) {
      int hits = 0;
      for (const auto& pairs : out.equal_pairs) {
        for (const auto& pr : pairs) hits += pr == std::pair{a, b};
      }
      if (hits > 1) throw fail("blocks " + std::to_string(a) + " and " + std::to_string(b) + " coincide for " + std::to_string(hits) + " candidates");
    }
  }
  if (!chosen) throw fail("all 11 candidates have a repeated block");

  out.witness = make_witness(stream, f.j0, kFiveBlocks, f.D + *chosen, ConstructionTag::theorem2, *chosen);
  if (!verify_witness(stream, out.witness)) throw fail("chosen candidate fails witness replay");
  return out;
}

/// Least L such that every length-L factor of the fixed point contains `marker`, or nullopt if
/// the marker does not occur. Stops with an error past max_length.
inline std::optional<Index> marker_recurrence_length(const UniformMorphism& mu, const FiniteWord& marker,
                                                     Index max_length = 4096) {
  const FactorSet base = factor_set(mu, marker.length());
  if (!base.members.count(marker)) return std::nullopt;
  for (Index len = marker.length(); len <= max_length; ++len) {
    const FactorSet fs = factor_set(mu, len);
    bool all = true;
    for (const auto& f : fs.members) {
      if (f.str().find(marker.str()) == std::string_view::npos) {
        all = false;
        break;
      }
    }
    if (all) return len;
  }
  throw Error(ErrorKind::cap_exceeded, "marker " + std::string(marker.str()) + " recurrence length exceeds " + std::to_string(max_length));
}

inline void require_theorem_class(const UniformMorphism& mu) {
  const Classification cls = classify(mu);
  if (!cls.aperiodic || !cls.uniformly_recurrent) {
    throw Error(ErrorKind::unsupported_class, mu.to_string() + " is not aperiodic and uniformly recurrent (" +
                                                  to_string(cls.reason) + ")");
  }
}

/// c1 for the marker (001 or 110) that gives the smaller value, with C = (c1 + 2) r.
inline RecurrenceConstant recurrence_constant(const UniformMorphism& mu) {
  require_theorem_class(mu);
  std::optional<RecurrenceConstant> best;
  for (const char* text : {"001", "110"}) {
    const FiniteWord marker(text);
    if (const auto len = marker_recurrence_length(mu, marker)) {
      if (!best || *len < best->c1) best = RecurrenceConstant{*len, marker, mu.r(), (*len + 2) * mu.r()};
    }
  }
  if (!best) throw Error(ErrorKind::classification_inconsistency, mu.to_string() + " contains neither 001 nor 110");
  return *best;
}

/// The exponent alpha >= 1 with r^(alpha-1) < k <= r^alpha, and r^alpha.
inline std::pair<int, Index> block_exponent(Index r, Index k) {
  int alpha = 1;
  Index r_alpha = r;
  while (r_alpha < k) {
    r_alpha *= r;
    ++alpha;
  }
  return {alpha, r_alpha};
}

struct MorphicAntiPower {
  AntiPowerWitness witness;
  int alpha = 0;
  Index r_alpha = 0;
};

/// k blocks of length (c1 + 2) r^alpha - 1 starting at i; `stream` must be the fixed point of mu.
inline MorphicAntiPower build_morphic_anti_power(const UniformMorphism& mu, WordStream& stream,
                                                 const RecurrenceConstant& rc, Index i, Index k) {
  if (i < 1 || k < 1) throw Error(ErrorKind::undefined_input, "i and k must be >= 1");
  if (k == 1) return {make_witness(stream, i, 1, 1, ConstructionTag::theorem4), 0, 1};
  const auto [alpha, r_alpha] = block_exponent(mu.r(), k);
  const Index m = (rc.c1 + 2) * r_alpha - 1;
  if (std::gcd(m, r_alpha) != 1) throw Error(ErrorKind::theorem_violation, "block length not coprime to r^alpha");
  if (m >= rc.C * k) {
    throw Error(ErrorKind::theorem_violation, "block length " + std::to_string(m) + " not below C*k = " + std::to_string(rc.C * k));
  }
  MorphicAntiPower out{make_witness(stream, i, k, m, ConstructionTag::theorem4), alpha, r_alpha};
  if (!verify_witness(stream, out.witness)) {
    throw Error(ErrorKind::theorem_violation, "blocks of length " + std::to_string(m) + " at i=" + std::to_string(i) +
                                                  ", k=" + std::to_string(k) + " for " + mu.to_string() + " repeat");
  }
  return out;
}

/// Block-length cap under which a k-anti-power is guaranteed at every position.
inline Index linear_block_bound(const RecurrenceConstant& rc, Index k) { return rc.C * k; }

}  // namespace antipower
