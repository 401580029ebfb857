#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "domineering/alpha_result.hpp"
#include "domineering/bipoly.hpp"

namespace domineering {

enum class Player { Left, Right };
enum class Orientation { Vertical, Horizontal };

constexpr Orientation orientation_of(Player p) {
  return p == Player::Left ? Orientation::Vertical : Orientation::Horizontal;
}

// A single 1x2 tile. The anchor is the top cell of a vertical domino and the
// left cell of a horizontal one; coordinates are 0-based (row, col).
struct Domino {
  Orientation orientation = Orientation::Vertical;
  unsigned row = 0;
  unsigned col = 0;

  auto operator<=>(const Domino&) const = default;

  // The second covered cell.
  unsigned other_row() const {
    return orientation == Orientation::Vertical ? row + 1 : row;
  }
  unsigned other_col() const {
    return orientation == Orientation::Horizontal ? col + 1 : col;
  }
};

inline Domino vertical_at(unsigned row, unsigned col) {
  return Domino{Orientation::Vertical, row, col};
}
inline Domino horizontal_at(unsigned row, unsigned col) {
  return Domino{Orientation::Horizontal, row, col};
}

// A set of pairwise-disjoint dominoes on an m x n board. The vertical count a
// and horizontal count b are derived, never stored.
class Position {
 public:
  Position(unsigned m, unsigned n);  // empty board
  static Position from_dominoes(unsigned m, unsigned n,
                                std::vector<Domino> dominoes);

  unsigned rows() const { return m_; }
  unsigned cols() const { return n_; }
  const std::vector<Domino>& dominoes() const { return dominoes_; }  // sorted
  unsigned vertical_count() const;
  unsigned horizontal_count() const;

  bool in_bounds(const Domino& d) const;
  bool occupied(unsigned row, unsigned col) const;
  bool can_place(const Domino& d) const;  // in bounds and both cells empty
  Position with(const Domino& d) const;   // throws std::invalid_argument if illegal

  Position transposed() const;

  bool operator==(const Position&) const = default;

 private:
  unsigned m_;
  unsigned n_;
  std::vector<Domino> dominoes_;
  std::vector<char> occupied_;  // row-major occupancy, derived from dominoes_
};

std::vector<Domino> legal_moves(const Position& pos, Player player);

bool is_left_end(const Position& pos);   // Left (vertical player) cannot move
bool is_right_end(const Position& pos);  // Right (horizontal player) cannot move
bool is_maximal(const Position& pos);    // both at once
bool has_end_kind(const Position& pos, EndKind kind);

// Brute-force enumeration of every set of pairwise-disjoint dominoes on the
// board, tallying (a, b) of Left ends, Right ends, and maximal positions.
// Maximal positions are counted in all three polynomials.
struct EndPolys {
  BivariatePoly left_end;
  BivariatePoly right_end;
  BivariatePoly maximal;
  mpz_class positions = 0;  // every position, ends or not
};

EndPolys enumerate_end_polys(unsigned m, unsigned n, unsigned cell_limit = 20);

// Runs fn on every position of the board, each exactly once. Intended for
// small boards; throws like enumerate_end_polys beyond the cell limit.
void for_each_position(unsigned m, unsigned n,
                       const std::function<void(const Position&)>& fn,
                       unsigned cell_limit = 20);

// Alpha extracted from the enumeration polynomials; ground truth for the
// transfer-matrix path.
AlphaResult oracle_alpha(unsigned m, unsigned n, unsigned cell_limit = 20);

struct PlayStep {
  Player player = Player::Left;
  Domino domino;

  bool operator==(const PlayStep&) const = default;
};
using PlaySequence = std::vector<PlayStep>;

// Checks strict alternation, per-step legality from the empty board, correct
// player/orientation pairing, and that the replay reaches final_pos.
bool validate_sequence(const PlaySequence& seq, const Position& final_pos);

// Orders the dominoes of an end position into a legal alternating game.
// Placement legality is monotone (removing later moves never invalidates
// earlier ones), so any interleaving with the right starting parity works.
PlaySequence alternating_sequence_for(const Position& pos, EndKind kind);

struct Witness {
  Position position;
  PlaySequence sequence;
  EndKind kind = EndKind::LeftEnd;
};

// Finds a concrete position realizing one of the target's witness pairs with
// the matching end kind, plus a validated alternating sequence reaching it.
// Throws std::logic_error if no position exists (target inconsistent with the
// board — a bug upstream).
Witness find_witness(const AlphaResult& target);

// Grid rendering: '.' for an empty cell, letters for domino cells; the two
// cells of one domino share a letter and adjacent dominoes get distinct
// letters, so parsing is unambiguous.
std::string render_ascii(const Position& pos);
Position parse_ascii(const std::string& text);

// {"m": rows, "n": cols, "dominoes": [["V", row, col], ...]} with 0-based
// coordinates, dominoes in canonical sorted order.
std::string to_json_text(const Position& pos);
Position position_from_json_text(const std::string& text);

}  // namespace domineering
