#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>

#include "antipower/error.hpp"
#include "antipower/word.hpp"

namespace antipower {

/// A binary r-uniform morphism, determined by A = image of 0 and B = image of 1.
class UniformMorphism {
 public:
  static constexpr Index kMaxUniformity = Index{1} << 20;

  UniformMorphism(FiniteWord image_of_0, FiniteWord image_of_1)
      : images_{std::move(image_of_0), std::move(image_of_1)} {
    if (images_[0].length() != images_[1].length()) {
      throw Error(ErrorKind::invalid_generator, "images have different lengths " + std::to_string(images_[0].length()) +
                                                    " and " + std::to_string(images_[1].length()));
    }
    if (images_[0].length() < 2) throw Error(ErrorKind::invalid_generator, "uniformity r must be at least 2");
  }

  const FiniteWord& image(int letter) const { return images_[letter ? 1 : 0]; }
  const FiniteWord& image_of_0() const noexcept { return images_[0]; }
  const FiniteWord& image_of_1() const noexcept { return images_[1]; }
  Index r() const noexcept { return images_[0].length(); }

  /// A1 = 0, so the iterates of 0 converge to an infinite fixed point.
  bool prolongable() const { return images_[0].letter(1) == 0; }

  /// "0:A,1:B"
  std::string to_string() const { return "0:" + std::string(images_[0].str()) + ",1:" + std::string(images_[1].str()); }

  friend bool operator==(const UniformMorphism&, const UniformMorphism&) = default;

 private:
  FiniteWord images_[2];
};

namespace detail {
inline Error parse_error(std::string_view text, std::size_t pos, const std::string& reason) {
  return Error(ErrorKind::parse, "morphism \"" + std::string(text) + "\" at position " + std::to_string(pos + 1) + ": " + reason);
}
}  // namespace detail

/// Parses the text form "0:A,1:B" where A and B are 0/1 strings of equal length >= 2.
inline UniformMorphism parse_morphism(std::string_view text) {
  std::size_t pos = 0;
  const auto expect = [&](char ch) {
    if (pos >= text.size()) throw detail::parse_error(text, pos, std::string("expected '") + ch + "', found end of input");
    if (text[pos] != ch) {
      throw detail::parse_error(text, pos, std::string("expected '") + ch + "', found '" + text[pos] + "'");
    }
    ++pos;
  };
  const auto image = [&]() {
    const std::size_t begin = pos;
    while (pos < text.size() && (text[pos] == '0' || text[pos] == '1')) ++pos;
    if (pos == begin) throw detail::parse_error(text, pos, "expected a nonempty 0/1 image");
    return FiniteWord::unchecked(text.substr(begin, pos - begin));
  };
  expect('0');
  expect(':');
  FiniteWord a = image();
  expect(',');
  expect('1');
  expect(':');
  const std::size_t b_begin = pos;
  FiniteWord b = image();
  if (pos != text.size()) throw detail::parse_error(text, pos, "trailing characters");
  if (a.length() != b.length()) {
    throw detail::parse_error(text, b_begin, "images must have equal length (" + std::to_string(a.length()) + " vs " +
                                                 std::to_string(b.length()) + ")");
  }
  if (a.length() < 2) throw detail::parse_error(text, 2, "uniformity r must be at least 2");
  return UniformMorphism(std::move(a), std::move(b));
}

/// A morphism whose fixed point starts with 1 (A1 = B1 = 1) is rewritten with the letters
/// exchanged, so that it becomes prolongable at 0. Other morphisms are returned unchanged.
inline UniformMorphism normalized(const UniformMorphism& mu) {
  if (mu.prolongable() || mu.image_of_1().letter(1) != 1) return mu;
  return UniformMorphism(swap_letters(mu.image_of_1()), swap_letters(mu.image_of_0()));
}

inline FiniteWord apply(const UniformMorphism& mu, const FiniteWord& w) {
  std::string out;
  out.reserve(static_cast<std::size_t>(w.length() * mu.r()));
  for (const char ch : w.str()) out += mu.image(ch - '0').str();
  return FiniteWord::unchecked(out);
}

/// mu composed with itself alpha times; r^alpha-uniform.
inline UniformMorphism power(const UniformMorphism& mu, int alpha) {
  if (alpha < 1) throw Error(ErrorKind::undefined_input, "power exponent must be >= 1");
  Index uniformity = 1;
  for (int e = 0; e < alpha; ++e) {
    uniformity *= mu.r();
    if (uniformity > UniformMorphism::kMaxUniformity) {
      throw Error(ErrorKind::overflow, "r^alpha = " + std::to_string(mu.r()) + "^" + std::to_string(alpha) +
                                           " exceeds 2^20");
    }
  }
  FiniteWord a = mu.image_of_0();
  FiniteWord b = mu.image_of_1();
  for (int e = 1; e < alpha; ++e) {
    a = apply(mu, a);
    b = apply(mu, b);
  }
  return UniformMorphism(std::move(a), std::move(b));
}

inline void require_prolongable(const UniformMorphism& mu) {
  if (!mu.prolongable()) {
    throw Error(ErrorKind::invalid_generator, "morphism " + mu.to_string() + " is not prolongable at 0");
  }
}

/// The fixed point mu^omega(0). Block q (0-based) of length r is the image of letter q+1.
inline WordStream fixed_point(const UniformMorphism& mu, Index horizon_cap = WordStream::kDefaultHorizon) {
  require_prolongable(mu);
  const Index r = mu.r();
  return WordStream(
      [mu, r](Index position, std::string_view prefix) {
        const Index block = (position - 1) / r;
        const int source = block == 0 ? 0 : prefix[static_cast<std::size_t>(block)] - '0';
        return mu.image(source).letter((position - 1) % r + 1);
      },
      horizon_cap);
}

/// Letter i of mu^omega(0) by digit recursion, without materializing a prefix.
inline int fixed_point_letter(const UniformMorphism& mu, Index i) {
  require_prolongable(mu);
  if (i < 1) throw Error(ErrorKind::undefined_input, "positions are 1-based");
  if (i == 1) return 0;
  const Index parent = (i + mu.r() - 1) / mu.r();
  return mu.image(fixed_point_letter(mu, parent)).letter((i - 1) % mu.r() + 1);
}

enum class ClassReason {
  none,
  equal_images,
  exceptional_0000,
  exceptional_0111,
  exceptional_0101,
  all_ones_image,
};

inline const char* to_string(ClassReason reason) {
  switch (reason) {
    case ClassReason::none: return "none";
    case ClassReason::equal_images: return "equal-images";
    case ClassReason::exceptional_0000: return "exceptional-word-0000";
    case ClassReason::exceptional_0111: return "exceptional-word-0111";
    case ClassReason::exceptional_0101: return "exceptional-word-0101";
    case ClassReason::all_ones_image: return "all-ones-image";
  }
  return "unknown";
}

struct Classification {
  bool aperiodic = false;
  bool uniformly_recurrent = false;
  ClassReason reason = ClassReason::none;
  friend bool operator==(const Classification&, const Classification&) = default;
};

namespace detail {
inline bool is_constant(const FiniteWord& w, char ch) {
  return w.str().find_first_not_of(ch) == std::string_view::npos;
}
}  // namespace detail

/// True iff mu^omega(0) = 0000...
inline bool fixes_all_zeros(const UniformMorphism& mu) { return detail::is_constant(mu.image_of_0(), '0'); }

/// True iff mu^omega(0) = 0111...
inline bool fixes_zero_then_ones(const UniformMorphism& mu) {
  const auto a = mu.image_of_0().str();
  return a[0] == '0' && detail::is_constant(FiniteWord::unchecked(a.substr(1)), '1') &&
         detail::is_constant(mu.image_of_1(), '1');
}

/// True iff mu^omega(0) = 0101... . The fixed point is mu(0) mu(1) mu(0) mu(1) ... once it
/// starts with 01, so this holds exactly when A B = (01)^r.
inline bool fixes_alternating(const UniformMorphism& mu) {
  const std::string ab = std::string(mu.image_of_0().str()) + std::string(mu.image_of_1().str());
  for (std::size_t p = 0; p < ab.size(); ++p) {
    if (ab[p] != (p % 2 == 0 ? '0' : '1')) return false;
  }
  return true;
}

/// Aperiodicity and uniform recurrence of mu^omega(0), decided from the letter images.
inline Classification classify(const UniformMorphism& mu) {
  require_prolongable(mu);
  const bool all_ones_b = detail::is_constant(mu.image_of_1(), '1');
  Classification c;
  c.uniformly_recurrent = fixes_all_zeros(mu) || !all_ones_b;
  if (mu.image_of_0() == mu.image_of_1()) {
    c.reason = ClassReason::equal_images;
  } else if (fixes_all_zeros(mu)) {
    c.reason = ClassReason::exceptional_0000;
  } else if (fixes_zero_then_ones(mu)) {
    c.reason = ClassReason::exceptional_0111;
  } else if (fixes_alternating(mu)) {
    c.reason = ClassReason::exceptional_0101;
  } else {
    c.aperiodic = true;
    c.reason = all_ones_b ? ClassReason::all_ones_image : ClassReason::none;
  }
  return c;
}

struct FactorSet {
  Index length = 0;
  std::set<FiniteWord> members;
};

namespace detail {

inline void add_windows(std::string_view text, Index length, std::set<FiniteWord>& out) {
  const auto n = static_cast<Index>(text.size());
  for (Index s = 0; s + length <= n; ++s) {
    out.insert(FiniteWord::unchecked(text.substr(static_cast<std::size_t>(s), static_cast<std::size_t>(length))));
  }
}

inline std::set<FiniteWord> length_two_closure(const UniformMorphism& mu) {
  std::set<FiniteWord> known;
  add_windows(mu.image_of_0().str(), 2, known);
  std::vector<FiniteWord> pending(known.begin(), known.end());
  while (!pending.empty()) {
    const FiniteWord pair = std::move(pending.back());
    pending.pop_back();
    std::set<FiniteWord> found;
    add_windows(apply(mu, pair).str(), 2, found);
    for (const auto& f : found) {
      if (known.insert(f).second) pending.push_back(f);
    }
  }
  return known;
}

// Every length-L window of the fixed point lies in mu(v) for a factor v of length
// ceil((L-1)/r)+1, which is shorter than L once L >= 3.
inline std::set<FiniteWord> closure_factors(const UniformMorphism& mu, Index length) {
  if (length <= 2) {
    auto pairs = length_two_closure(mu);
    if (length == 2) return pairs;
    std::set<FiniteWord> letters;
    for (const auto& p : pairs) add_windows(p.str(), 1, letters);
    return letters;
  }
  const Index source_length = (length - 1 + mu.r() - 1) / mu.r() + 1;
  std::set<FiniteWord> out;
  for (const auto& v : closure_factors(mu, source_length)) add_windows(apply(mu, v).str(), length, out);
  return out;
}

}  // namespace detail

/// All length-L factors of mu^omega(0), for uniformly recurrent fixed points. Every member is
/// confirmed by locating it in a prefix of the fixed point before being reported.
inline FactorSet factor_set(const UniformMorphism& mu, Index length, Index horizon_cap = WordStream::kDefaultHorizon) {
  const Classification cls = classify(mu);
  if (!cls.uniformly_recurrent) {
    throw Error(ErrorKind::unsupported_class, "factor_set requires a uniformly recurrent fixed point; " + mu.to_string() +
                                                  " is not (" + to_string(cls.reason) + ")");
  }
  if (length < 1) throw Error(ErrorKind::undefined_input, "factor length must be >= 1");
  FactorSet result{length, detail::closure_factors(mu, length)};

  WordStream stream = fixed_point(mu, horizon_cap);
  std::unordered_set<std::string_view> seen;
  Index scanned = 0;
  Index target = std::max<Index>(4 * mu.r() * length, 64);
  std::size_t confirmed = 0;
  while (true) {
    target = std::min(target, horizon_cap);
    stream.ensure(target);
    const std::string_view text = stream.cached();
    seen.clear();
    for (Index s = 0; s + length <= target; ++s) seen.insert(text.substr(static_cast<std::size_t>(s), static_cast<std::size_t>(length)));
    confirmed = 0;
    for (const auto& m : result.members) confirmed += seen.count(m.str());
    scanned = target;
    if (confirmed == result.members.size()) break;
    if (target == horizon_cap) {
      for (const auto& m : result.members) {
        if (!seen.count(m.str())) {
          throw Error(ErrorKind::unconfirmed_factor, "closure member " + std::string(m.str()) + " of length " +
                                                         std::to_string(length) + " not found in a prefix of length " +
                                                         std::to_string(scanned));
        }
      }
    }
    target *= 2;
  }
  return result;
}

}  // namespace antipower
