#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "antipower/error.hpp"
#include "antipower/word.hpp"

namespace antipower {

enum class ConstructionTag { definitional, theorem2, theorem4 };

inline const char* to_string(ConstructionTag tag) {
  switch (tag) {
    case ConstructionTag::definitional: return "definitional";
    case ConstructionTag::theorem2: return "theorem2";
    case ConstructionTag::theorem4: return "theorem4";
  }
  return "unknown";
}

/// k consecutive pairwise-distinct blocks of equal length starting at `start` in some word.
/// Construction code never trusts a witness it built; callers replay it with verify_witness.
struct AntiPowerWitness {
  Index start = 1;
  Index k = 0;
  Index block_length = 0;
  std::vector<FiniteWord> blocks;
  ConstructionTag tag = ConstructionTag::definitional;
  std::optional<int> candidate_c;  // five-block construction only
};

/// Hash-set distinctness test; the set compares exactly on hash collisions.
inline bool blocks_pairwise_distinct(std::span<const std::string_view> blocks) {
  std::unordered_set<std::string_view> seen;
  seen.reserve(blocks.size() * 2);
  for (const auto b : blocks) {
    if (!seen.insert(b).second) return false;
  }
  return true;
}

namespace detail {
inline std::vector<std::string_view> split_blocks(std::string_view text, Index k, Index m) {
  std::vector<std::string_view> blocks;
  blocks.reserve(static_cast<std::size_t>(k));
  for (Index j = 0; j < k; ++j) blocks.push_back(text.substr(static_cast<std::size_t>(j * m), static_cast<std::size_t>(m)));
  return blocks;
}
}  // namespace detail

inline bool is_k_anti_power(const FiniteWord& w, Index k) {
  if (k < 1) throw Error(ErrorKind::shape, "k must be >= 1");
  if (w.length() % k != 0) {
    throw Error(ErrorKind::shape, "k = " + std::to_string(k) + " does not divide |w| = " + std::to_string(w.length()));
  }
  const auto blocks = detail::split_blocks(w.str(), k, w.length() / k);
  return blocks_pairwise_distinct(blocks);
}

/// Witness made of the k blocks of length m starting at `start`.
inline AntiPowerWitness make_witness(WordStream& stream, Index start, Index k, Index m, ConstructionTag tag,
                                     std::optional<int> candidate_c = std::nullopt) {
  AntiPowerWitness w{start, k, m, {}, tag, candidate_c};
  stream.ensure(start + k * m - 1);
  w.blocks.reserve(static_cast<std::size_t>(k));
  for (Index j = 0; j < k; ++j) w.blocks.push_back(stream.factor(start + j * m, start + (j + 1) * m - 1));
  return w;
}

struct GammaResult {
  Index m = 0;
  AntiPowerWitness witness;
};

/// Smallest m <= m_cap such that the length-km factor starting at position i is a
/// k-anti-power, searched exhaustively from m = 1.
inline GammaResult gamma(WordStream& stream, Index i, Index k, Index m_cap) {
  if (k < 1 || m_cap < 1 || i < 1) throw Error(ErrorKind::undefined_input, "gamma needs i, k, m_cap >= 1");
  for (Index m = 1; m <= m_cap; ++m) {
    const std::string_view text = stream.view(i, i + k * m - 1);
    if (blocks_pairwise_distinct(detail::split_blocks(text, k, m))) {
      return {m, make_witness(stream, i, k, m, ConstructionTag::definitional)};
    }
  }
  throw Error(ErrorKind::cap_exceeded, "no " + std::to_string(k) + "-anti-power at position " + std::to_string(i) +
                                           " with block length <= " + std::to_string(m_cap) + " (largest m tried " +
                                           std::to_string(m_cap) + ")");
}

/// Replays a witness: shape, equal block lengths, pairwise distinctness, and agreement with
/// the word at the recorded positions.
inline bool verify_witness(WordStream& stream, const AntiPowerWitness& witness) {
  if (witness.k < 1 || witness.block_length < 1 || witness.start < 1) return false;
  if (static_cast<Index>(witness.blocks.size()) != witness.k) return false;
  const Index m = witness.block_length;
  std::vector<std::string_view> views;
  views.reserve(witness.blocks.size());
  for (const auto& b : witness.blocks) {
    if (b.length() != m) return false;
    views.push_back(b.str());
  }
  if (!blocks_pairwise_distinct(views)) return false;
  const std::string_view text = stream.view(witness.start, witness.start + witness.k * m - 1);
  for (Index j = 0; j < witness.k; ++j) {
    if (text.substr(static_cast<std::size_t>(j * m), static_cast<std::size_t>(m)) != views[static_cast<std::size_t>(j)]) {
      return false;
    }
  }
  return true;
}

}  // namespace antipower
