#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "antipower/error.hpp"

namespace antipower {

/// Positions and lengths. Public positions are 1-based, matching [i,j] factor notation.
using Index = std::int64_t;

/// A finite binary word. Letters are stored as the ASCII characters '0' and '1', which is
/// also the serialized form.
class FiniteWord {
 public:
  FiniteWord() = default;

  explicit FiniteWord(std::string_view letters) : letters_(letters) {
    for (std::size_t p = 0; p < letters_.size(); ++p) {
      if (letters_[p] != '0' && letters_[p] != '1') {
        throw Error(ErrorKind::parse, "invalid letter '" + std::string(1, letters_[p]) +
                                          "' at position " + std::to_string(p + 1) +
                                          " (expected 0 or 1)");
      }
    }
  }

  Index length() const noexcept { return static_cast<Index>(letters_.size()); }
  bool empty() const noexcept { return letters_.empty(); }

  /// Letter at 1-based position i, as 0 or 1.
  int letter(Index i) const { return letters_.at(static_cast<std::size_t>(i - 1)) - '0'; }

  std::string_view str() const noexcept { return letters_; }

  /// Factor [i,j], 1-based inclusive.
  FiniteWord factor(Index i, Index j) const {
    if (i > j) throw Error(ErrorKind::empty_range, "factor [" + std::to_string(i) + "," + std::to_string(j) + "]");
    if (i < 1 || j > length()) {
      throw Error(ErrorKind::horizon_exceeded, "factor [" + std::to_string(i) + "," + std::to_string(j) +
                                                   "] outside word of length " + std::to_string(length()));
    }
    return unchecked(letters_.substr(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - i + 1)));
  }

  void push_back(int letter) { letters_.push_back(letter ? '1' : '0'); }

  FiniteWord& operator+=(const FiniteWord& other) {
    letters_ += other.letters_;
    return *this;
  }
  friend FiniteWord operator+(FiniteWord lhs, const FiniteWord& rhs) { return lhs += rhs; }

  friend auto operator<=>(const FiniteWord&, const FiniteWord&) = default;

  /// Wraps text already known to consist of '0'/'1' characters.
  static FiniteWord unchecked(std::string_view letters) {
    FiniteWord w;
    w.letters_ = std::string(letters);
    return w;
  }

 private:
  std::string letters_;
};

/// Exchanges 0 and 1 letterwise.
inline FiniteWord swap_letters(const FiniteWord& w) {
  std::string out(w.str());
  for (char& ch : out) ch = ch == '0' ? '1' : '0';
  return FiniteWord::unchecked(out);
}

/// KMP failure function: result[q] is the length of the longest proper border of the
/// length-q prefix of text (result[0] = 0, size = |text| + 1).
inline std::vector<Index> border_array(std::string_view text) {
  std::vector<Index> border(text.size() + 1, 0);
  Index b = 0;
  for (std::size_t q = 1; q < text.size(); ++q) {
    while (b > 0 && text[q] != text[static_cast<std::size_t>(b)]) b = border[static_cast<std::size_t>(b)];
    if (text[q] == text[static_cast<std::size_t>(b)]) ++b;
    border[q + 1] = b;
  }
  return border;
}

/// True iff no proper nonempty prefix of w is also a suffix of w.
inline bool is_unbordered(const FiniteWord& w) {
  if (w.empty()) throw Error(ErrorKind::undefined_input, "is_unbordered of the empty word");
  return border_array(w.str()).back() == 0;
}

/// A lazily extended prefix of an infinite binary word. The generator is called once per
/// position, in increasing order, and may read all previously generated letters.
///
/// Extension (ensure, letter, factor) is exclusive; the const accessors may be used by
/// concurrent readers for positions below cached_length().
class WordStream {
 public:
  /// letter at 1-based `position`, given letters 1..position-1 in `prefix`.
  using Generator = std::function<int(Index position, std::string_view prefix)>;

  static constexpr Index kDefaultHorizon = Index{1} << 24;

  explicit WordStream(Generator generator, Index horizon_cap = kDefaultHorizon)
      : generator_(std::move(generator)), horizon_cap_(horizon_cap) {
    if (horizon_cap_ < 1) throw Error(ErrorKind::undefined_input, "horizon cap must be positive");
  }

  Index horizon() const noexcept { return horizon_cap_; }
  Index cached_length() const noexcept { return static_cast<Index>(prefix_.size()); }

  /// Extends the cached prefix to at least `length` letters.
  void ensure(Index length) {
    if (length > horizon_cap_) {
      throw Error(ErrorKind::horizon_exceeded, "need " + std::to_string(length) +
                                                   " letters, horizon cap is " + std::to_string(horizon_cap_));
    }
    if (length <= cached_length()) return;
    prefix_.reserve(static_cast<std::size_t>(length));
    for (Index p = cached_length() + 1; p <= length; ++p) {
      prefix_.push_back(generator_(p, prefix_) ? '1' : '0');
    }
  }

  int letter(Index i) {
    check_position(i);
    ensure(i);
    return prefix_[static_cast<std::size_t>(i - 1)] - '0';
  }

  FiniteWord factor(Index i, Index j) { return FiniteWord::unchecked(view(i, j)); }

  /// View of [i,j]; invalidated by the next extension.
  std::string_view view(Index i, Index j) {
    if (i > j) throw Error(ErrorKind::empty_range, "factor [" + std::to_string(i) + "," + std::to_string(j) + "]");
    check_position(i);
    ensure(j);
    return std::string_view(prefix_).substr(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - i + 1));
  }

  FiniteWord prefix(Index length) {
    if (length == 0) return {};
    return factor(1, length);
  }

  /// The whole cached prefix (no extension).
  std::string_view cached() const noexcept { return prefix_; }

 private:
  static void check_position(Index i) {
    if (i < 1) throw Error(ErrorKind::undefined_input, "positions are 1-based, got " + std::to_string(i));
  }

  Generator generator_;
  Index horizon_cap_;
  std::string prefix_;
};

/// Stream of a fixed finite word repeated forever; handy for periodic test words.
inline WordStream periodic_stream(const FiniteWord& period, Index horizon_cap = WordStream::kDefaultHorizon) {
  if (period.empty()) throw Error(ErrorKind::undefined_input, "empty period");
  return WordStream(
      [period](Index position, std::string_view) { return period.letter((position - 1) % period.length() + 1); },
      horizon_cap);
}

struct OccurrenceList {
  FiniteWord pattern;
  std::vector<Index> positions;  // ascending, 1-based
  Index scanned_up_to = 0;
};

enum class MatchEngine { kmp, fingerprint };

namespace detail {

inline void kmp_scan(std::string_view text, std::string_view pattern, Index offset, std::vector<Index>& out) {
  const auto border = border_array(pattern);
  const auto m = pattern.size();
  std::size_t q = 0;
  for (std::size_t p = 0; p < text.size(); ++p) {
    while (q > 0 && (q == m || text[p] != pattern[q])) q = static_cast<std::size_t>(border[q]);
    if (text[p] == pattern[q]) ++q;
    if (q == m) out.push_back(offset + static_cast<Index>(p + 2 - m));
  }
}

// Rabin-Karp modulo the Mersenne prime 2^61-1; every hash hit is confirmed letter by letter.
inline void fingerprint_scan(std::string_view text, std::string_view pattern, Index offset, std::vector<Index>& out) {
  constexpr std::uint64_t kMod = (std::uint64_t{1} << 61) - 1;
  constexpr std::uint64_t kBase = 1'000'003;
  const auto mulmod = [](std::uint64_t a, std::uint64_t b) {
    const unsigned __int128 prod = static_cast<unsigned __int128>(a) * b;
    std::uint64_t r = static_cast<std::uint64_t>(prod & kMod) + static_cast<std::uint64_t>(prod >> 61);
    if (r >= kMod) r -= kMod;
    return r;
  };
  const auto m = pattern.size();
  if (text.size() < m) return;
  std::uint64_t target = 0, window = 0, top = 1;
  for (std::size_t p = 0; p < m; ++p) {
    target = (mulmod(target, kBase) + static_cast<unsigned char>(pattern[p])) % kMod;
    window = (mulmod(window, kBase) + static_cast<unsigned char>(text[p])) % kMod;
    if (p + 1 < m) top = mulmod(top, kBase);
  }
  for (std::size_t start = 0;; ++start) {
    if (window == target && text.substr(start, m) == pattern) out.push_back(offset + static_cast<Index>(start + 1));
    if (start + m >= text.size()) break;
    const std::uint64_t drop = mulmod(top, static_cast<unsigned char>(text[start]));
    window = (window + kMod - drop) % kMod;
    window = (mulmod(window, kBase) + static_cast<unsigned char>(text[start + m])) % kMod;
  }
}

}  // namespace detail

/// All 1-based starts of `pattern` inside `text`, ascending.
inline std::vector<Index> occurrences_in(std::string_view text, std::string_view pattern,
                                         MatchEngine engine = MatchEngine::kmp) {
  std::vector<Index> out;
  if (pattern.empty() || pattern.size() > text.size()) return out;
  if (engine == MatchEngine::kmp) {
    detail::kmp_scan(text, pattern, 0, out);
  } else {
    detail::fingerprint_scan(text, pattern, 0, out);
  }
  return out;
}

/// Every occurrence of w lying entirely within [1, scan_limit].
inline OccurrenceList occurrences(WordStream& stream, const FiniteWord& w, Index scan_limit,
                                  MatchEngine engine = MatchEngine::kmp) {
  if (w.empty()) throw Error(ErrorKind::undefined_input, "occurrences of the empty word");
  if (scan_limit > stream.horizon()) {
    throw Error(ErrorKind::horizon_exceeded, "scan limit " + std::to_string(scan_limit) + " exceeds horizon cap " +
                                                 std::to_string(stream.horizon()));
  }
  OccurrenceList list{w, {}, scan_limit};
  if (scan_limit < 1) return list;
  list.positions = occurrences_in(stream.view(1, scan_limit), w.str(), engine);
  return list;
}

/// Earliest occurrence of `pattern` starting at a position >= from, extending the stream as
/// needed. `stage` names the search in the horizon error.
inline Index find_first(WordStream& stream, std::string_view pattern, Index from, std::string_view stage = "search") {
  if (pattern.empty()) throw Error(ErrorKind::undefined_input, "search for the empty word");
  from = std::max<Index>(from, 1);
  const auto m = static_cast<Index>(pattern.size());
  const auto border = border_array(pattern);
  Index q = 0;
  Index p = from;  // next text position to consume
  Index chunk = std::max<Index>(4 * m, 4096);
  while (true) {
    const Index want = std::min(stream.horizon(), std::max(stream.cached_length(), p - 1 + chunk));
    if (want < p + (m - q) - 1) {
      throw Error(ErrorKind::horizon_exceeded, std::string(stage) + ": no occurrence of a length-" + std::to_string(m) +
                                                   " factor at or after position " + std::to_string(from) +
                                                   " within horizon cap " + std::to_string(stream.horizon()));
    }
    stream.ensure(want);
    const std::string_view text = stream.cached();
    for (; p <= want; ++p) {
      const char ch = text[static_cast<std::size_t>(p - 1)];
      while (q > 0 && (q == m || ch != pattern[static_cast<std::size_t>(q)])) q = border[static_cast<std::size_t>(q)];
      if (ch == pattern[static_cast<std::size_t>(q)]) ++q;
      if (q == m) return p - m + 1;
    }
    chunk *= 2;
  }
}

struct Periodicity {
  Index preperiod = 0;
  Index period = 0;
  friend bool operator==(const Periodicity&, const Periodicity&) = default;
};

/// Smallest (preperiod, period) with period <= max_period such that the prefix from position
/// preperiod+1 to its end is period-periodic and that tail has at least min_tail letters.
inline std::optional<Periodicity> eventually_periodic_probe(const FiniteWord& prefix, Index max_period, Index min_tail) {
  if (max_period < 1 || min_tail < 0) throw Error(ErrorKind::undefined_input, "max_period >= 1 and min_tail >= 0 required");
  const Index n = prefix.length();
  if (n < min_tail + 2 * max_period) {
    throw Error(ErrorKind::insufficient_data, "prefix of length " + std::to_string(n) + " shorter than min_tail + 2*max_period = " +
                                                  std::to_string(min_tail + 2 * max_period));
  }
  const std::string_view s = prefix.str();
  std::optional<Periodicity> best;
  for (Index period = 1; period <= max_period; ++period) {
    // The shortest preperiod for this period sits just past the last mismatch s[x] != s[x+period].
    Index preperiod = 0;
    for (Index x = n - period - 1; x >= 0; --x) {
      if (s[static_cast<std::size_t>(x)] != s[static_cast<std::size_t>(x + period)]) {
        preperiod = x + 1;
        break;
      }
    }
    if (n - preperiod < min_tail) continue;
    if (!best || preperiod < best->preperiod) best = Periodicity{preperiod, period};
  }
  return best;
}

}  // namespace antipower
