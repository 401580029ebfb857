#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "domineering/bipoly.hpp"

namespace domineering {

// Which player is out of moves: a Left end is a position where Left cannot
// place a vertical domino, a Right end one where Right cannot place a
// horizontal one. A position may be both (then no domino fits at all).
enum class EndKind { LeftEnd, RightEnd };

char end_kind_letter(EndKind kind);  // 'L' or 'R'
EndKind end_kind_from_letter(char letter);
EndKind transpose(EndKind kind);  // board transposition swaps the two kinds

// Alternating play starting from an empty board forces the vertical count a
// and horizontal count b to satisfy a - b in {0, -1} when Left is stuck and
// a - b in {0, 1} when Right is stuck.
const std::set<int>& alternation_diffs(EndKind kind);

// The minimum number of alternating moves after which an m x n game can be
// over, together with which end family attains it and at which (a, b) pairs.
struct AlphaResult {
  unsigned m = 0;
  unsigned n = 0;
  unsigned alpha = 0;
  std::set<EndKind> provenance;  // nonempty; families attaining the minimum
  std::map<EndKind, std::vector<std::pair<unsigned, unsigned>>> witnesses;

  bool operator==(const AlphaResult&) const = default;
};

// Extracts alpha from the two end polynomials by scanning the parity-filtered
// minimum total degree of each family. Absent when neither family has a
// qualifying term, which can only happen under degree truncation.
std::optional<AlphaResult> alpha_from_polys(unsigned m, unsigned n,
                                            const BivariatePoly& left_end,
                                            const BivariatePoly& right_end);

AlphaResult transpose(const AlphaResult& result);

// "L", "R", or "LR" in that order.
std::string provenance_suffix(const std::set<EndKind>& provenance);

std::string to_json_text(const AlphaResult& result);

}  // namespace domineering
