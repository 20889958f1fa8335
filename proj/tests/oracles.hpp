#pragma once

// Slow, obviously-correct reference computations. Nothing here calls into the library's
// algorithms; they work on plain std::string of '0'/'1'.

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

using Index = std::int64_t;

/// n-fold substitution starting from "0".
inline std::string expand(const std::string& a, const std::string& b, int n) {
  std::string w = "0";
  for (int step = 0; step < n; ++step) {
    std::string next;
    for (const char ch : w) next += ch == '0' ? a : b;
    w = std::move(next);
  }
  return w;
}

/// A prefix of at least `length` letters of the fixed point, truncated to `length`.
inline std::string prefix(const std::string& a, const std::string& b, Index length) {
  std::string w = "0";
  while (static_cast<Index>(w.size()) < length) {
    std::string next;
    for (const char ch : w) next += ch == '0' ? a : b;
    if (next.size() == w.size()) break;
    w = std::move(next);
  }
  return w.substr(0, static_cast<std::size_t>(length));
}

inline bool unbordered(const std::string& w) {
  for (std::size_t len = 1; len < w.size(); ++len) {
    if (w.compare(0, len, w, w.size() - len, len) == 0) return false;
  }
  return true;
}

/// 1-based starts of w in text, by letter-by-letter comparison.
inline std::vector<Index> occurrences(const std::string& text, const std::string& w) {
  std::vector<Index> out;
  for (std::size_t s = 0; s + w.size() <= text.size(); ++s) {
    bool match = true;
    for (std::size_t q = 0; q < w.size() && match; ++q) match = text[s + q] == w[q];
    if (match) out.push_back(static_cast<Index>(s + 1));
  }
  return out;
}

inline std::set<std::string> windows(const std::string& text, Index length) {
  std::set<std::string> out;
  for (std::size_t s = 0; s + static_cast<std::size_t>(length) <= text.size(); ++s) {
    out.insert(text.substr(s, static_cast<std::size_t>(length)));
  }
  return out;
}

inline bool pairwise_distinct(const std::vector<std::string>& blocks) {
  for (std::size_t x = 0; x < blocks.size(); ++x) {
    for (std::size_t y = x + 1; y < blocks.size(); ++y) {
      if (blocks[x] == blocks[y]) return false;
    }
  }
  return true;
}

/// Exhaustive gamma: smallest m with k distinct length-m blocks at 1-based start i, or 0.
inline Index gamma(const std::string& text, Index i, Index k, Index m_cap) {
  for (Index m = 1; m <= m_cap; ++m) {
    if (i - 1 + k * m > static_cast<Index>(text.size())) return 0;
    std::vector<std::string> blocks;
    for (Index j = 0; j < k; ++j) blocks.push_back(text.substr(static_cast<std::size_t>(i - 1 + j * m), static_cast<std::size_t>(m)));
    if (pairwise_distinct(blocks)) return m;
  }
  return 0;
}

/// Longest factor of text that avoids marker, plus one.
inline Index marker_avoidance_bound(const std::string& text, const std::string& marker) {
  Index longest = 0;
  for (std::size_t s = 0; s < text.size(); ++s) {
    std::size_t e = s;
    // grow [s, e) while it does not contain the marker
    while (e < text.size()) {
      const std::size_t len = e + 1 - s;
      if (len >= marker.size() && text.compare(e + 1 - marker.size(), marker.size(), marker) == 0) break;
      ++e;
    }
    if (e == text.size()) break;  // reached the end of the prefix; window is truncated
    longest = std::max<Index>(longest, static_cast<Index>(e - s));
  }
  return longest + 1;
}

/// gamma values (0-based offsets) in the first `length` letters that violate the AAB/BBA rule.
inline std::vector<Index> lemma5_violations(const std::string& text, const std::string& a, const std::string& b) {
  const auto r = a.size();
  const std::string aab = a + a + b;
  const std::string bba = b + b + a;
  std::vector<Index> out;
  for (std::size_t g = 0; g + 3 * r <= text.size(); ++g) {
    const std::string window = text.substr(g, 3 * r);
    if ((window == aab || window == bba) && g % r != 0) out.push_back(static_cast<Index>(g));
  }
  return out;
}

/// (start, occurrence) pairs for sampled starts whose factor of the given length recurs at a
/// position not congruent modulo r_alpha.
inline std::vector<std::pair<Index, Index>> corollary7_violations(const std::string& text, Index length, Index r_alpha,
                                                                  const std::vector<Index>& starts) {
  std::vector<std::pair<Index, Index>> out;
  for (const Index s : starts) {
    if (s - 1 + length > static_cast<Index>(text.size())) continue;
    const std::string x = text.substr(static_cast<std::size_t>(s - 1), static_cast<std::size_t>(length));
    for (const Index o : occurrences(text, x)) {
      if (((o - s) % r_alpha + r_alpha) % r_alpha != 0) out.emplace_back(s, o);
    }
  }
  return out;
}

}  // namespace oracle
