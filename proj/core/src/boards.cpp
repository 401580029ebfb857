#include "domineering/boards.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdint>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>

#include "domineering/errors.hpp"
#include "json.hpp"

namespace domineering {

// --- Position ----------------------------------------------------------------

Position::Position(unsigned m, unsigned n) : m_(m), n_(n) {
  if (m == 0 || n == 0) {
    throw std::invalid_argument("board dimensions must be positive");
  }
  occupied_.assign(static_cast<std::size_t>(m) * n, 0);
}

Position Position::from_dominoes(unsigned m, unsigned n,
                                 std::vector<Domino> dominoes) {
  Position pos(m, n);
  std::sort(dominoes.begin(), dominoes.end());
  for (const Domino& d : dominoes) {
    if (!pos.can_place(d)) {
      throw std::invalid_argument("domino out of bounds or overlapping");
    }
    pos.occupied_[static_cast<std::size_t>(d.row) * n + d.col] = 1;
    pos.occupied_[static_cast<std::size_t>(d.other_row()) * n + d.other_col()] = 1;
  }
  pos.dominoes_ = std::move(dominoes);
  return pos;
}

unsigned Position::vertical_count() const {
  unsigned a = 0;
  for (const Domino& d : dominoes_) {
    if (d.orientation == Orientation::Vertical) ++a;
  }
  return a;
}

unsigned Position::horizontal_count() const {
  return static_cast<unsigned>(dominoes_.size()) - vertical_count();
}

bool Position::in_bounds(const Domino& d) const {
  return d.other_row() < m_ && d.other_col() < n_;
}

bool Position::occupied(unsigned row, unsigned col) const {
  if (row >= m_ || col >= n_) throw std::out_of_range("cell out of range");
  return occupied_[static_cast<std::size_t>(row) * n_ + col] != 0;
}

bool Position::can_place(const Domino& d) const {
  return in_bounds(d) && !occupied(d.row, d.col) &&
         !occupied(d.other_row(), d.other_col());
}

Position Position::with(const Domino& d) const {
  if (!can_place(d)) {
    throw std::invalid_argument("illegal domino placement");
  }
  Position next = *this;
  auto at = std::lower_bound(next.dominoes_.begin(), next.dominoes_.end(), d);
  next.dominoes_.insert(at, d);
  next.occupied_[static_cast<std::size_t>(d.row) * n_ + d.col] = 1;
  next.occupied_[static_cast<std::size_t>(d.other_row()) * n_ + d.other_col()] = 1;
  return next;
}

Position Position::transposed() const {
  std::vector<Domino> flipped;
  flipped.reserve(dominoes_.size());
  for (const Domino& d : dominoes_) {
    Orientation o = d.orientation == Orientation::Vertical
                        ? Orientation::Horizontal
                        : Orientation::Vertical;
    flipped.push_back(Domino{o, d.col, d.row});
  }
  return from_dominoes(n_, m_, std::move(flipped));
}

std::vector<Domino> legal_moves(const Position& pos, Player player) {
  Orientation o = orientation_of(player);
  std::vector<Domino> moves;
  for (unsigned r = 0; r < pos.rows(); ++r) {
    for (unsigned c = 0; c < pos.cols(); ++c) {
      Domino d{o, r, c};
      if (pos.can_place(d)) moves.push_back(d);
    }
  }
  return moves;
}

bool is_left_end(const Position& pos) {
  for (unsigned r = 0; r + 1 < pos.rows(); ++r) {
    for (unsigned c = 0; c < pos.cols(); ++c) {
      if (!pos.occupied(r, c) && !pos.occupied(r + 1, c)) return false;
    }
  }
  return true;
}

bool is_right_end(const Position& pos) {
  for (unsigned r = 0; r < pos.rows(); ++r) {
    for (unsigned c = 0; c + 1 < pos.cols(); ++c) {
      if (!pos.occupied(r, c) && !pos.occupied(r, c + 1)) return false;
    }
  }
  return true;
}

bool is_maximal(const Position& pos) {
  return is_left_end(pos) && is_right_end(pos);
}

bool has_end_kind(const Position& pos, EndKind kind) {
  return kind == EndKind::LeftEnd ? is_left_end(pos) : is_right_end(pos);
}

// --- exhaustive enumeration --------------------------------------------------

namespace {

// Recursion on the first undecided cell in row-major order: the cell either
// stays empty for good or anchors a domino. Every disjoint domino set is
// reached exactly once.
template <typename Leaf>
void enumerate_rec(unsigned pos, std::uint64_t covered, unsigned a, unsigned b,
                   unsigned cells, unsigned cols, const Leaf& leaf) {
  while (pos < cells && ((covered >> pos) & 1u)) ++pos;
  if (pos == cells) {
    leaf(covered, a, b);
    return;
  }
  enumerate_rec(pos + 1, covered, a, b, cells, cols, leaf);
  if (pos % cols != cols - 1 && !((covered >> (pos + 1)) & 1u)) {
    enumerate_rec(pos + 2, covered | (std::uint64_t{3} << pos), a, b + 1,
                  cells, cols, leaf);
  }
  if (pos + cols < cells) {
    enumerate_rec(pos + 1,
                  covered | (std::uint64_t{1} << pos) |
                      (std::uint64_t{1} << (pos + cols)),
                  a + 1, b, cells, cols, leaf);
  }
}

void check_oracle_limits(unsigned m, unsigned n, unsigned cell_limit) {
  if (m == 0 || n == 0) {
    throw std::invalid_argument("board dimensions must be positive");
  }
  unsigned cells = m * n;
  if (cells > cell_limit) {
    throw ResourceError("board has " + std::to_string(cells) +
                        " cells, above the enumeration limit of " +
                        std::to_string(cell_limit));
  }
  if (cells > 62) {
    throw ResourceError("enumeration supports at most 62 cells");
  }
}

}  // namespace

EndPolys enumerate_end_polys(unsigned m, unsigned n, unsigned cell_limit) {
  check_oracle_limits(m, n, cell_limit);
  unsigned cells = m * n;
  std::uint64_t full = cells == 64 ? ~std::uint64_t{0}
                                   : (std::uint64_t{1} << cells) - 1;
  // Cells that have a right neighbour in the same row.
  std::uint64_t has_right = 0;
  for (unsigned i = 0; i < cells; ++i) {
    if (i % n != n - 1) has_right |= std::uint64_t{1} << i;
  }

  unsigned max_per_kind = cells / 2 + 1;
  std::vector<std::vector<std::array<unsigned long long, 3>>> counts(
      max_per_kind,
      std::vector<std::array<unsigned long long, 3>>(max_per_kind, {0, 0, 0}));
  unsigned long long total = 0;

  enumerate_rec(0, 0, 0, 0, cells, n,
                [&](std::uint64_t covered, unsigned a, unsigned b) {
                  ++total;
                  std::uint64_t empties = ~covered & full;
                  bool left_end = (empties & (empties >> n)) == 0;
                  bool right_end = (empties & (empties >> 1) & has_right) == 0;
                  if (left_end) ++counts[a][b][0];
                  if (right_end) ++counts[a][b][1];
                  if (left_end && right_end) ++counts[a][b][2];
                });

  EndPolys out;
  // Route through decimal strings: mpz_class has no unsigned long long ctor.
  out.positions = mpz_class(std::to_string(total));
  for (unsigned a = 0; a < max_per_kind; ++a) {
    for (unsigned b = 0; b < max_per_kind; ++b) {
      const auto& cell = counts[a][b];
      if (cell[0]) out.left_end.add_term(a, b, mpz_class(std::to_string(cell[0])));
      if (cell[1]) out.right_end.add_term(a, b, mpz_class(std::to_string(cell[1])));
      if (cell[2]) out.maximal.add_term(a, b, mpz_class(std::to_string(cell[2])));
    }
  }
  return out;
}

void for_each_position(unsigned m, unsigned n,
                       const std::function<void(const Position&)>& fn,
                       unsigned cell_limit) {
  check_oracle_limits(m, n, cell_limit);
  unsigned cells = m * n;
  std::vector<Domino> stack;

  // Mirrors enumerate_rec but materializes the domino set at each node.
  std::function<void(unsigned, std::uint64_t)> rec =
      [&](unsigned pos, std::uint64_t covered) {
        while (pos < cells && ((covered >> pos) & 1u)) ++pos;
        if (pos == cells) {
          fn(Position::from_dominoes(m, n, stack));
          return;
        }
        rec(pos + 1, covered);
        if (pos % n != n - 1 && !((covered >> (pos + 1)) & 1u)) {
          stack.push_back(horizontal_at(pos / n, pos % n));
          rec(pos + 2, covered | (std::uint64_t{3} << pos));
          stack.pop_back();
        }
        if (pos + n < cells) {
          stack.push_back(vertical_at(pos / n, pos % n));
          rec(pos + 1, covered | (std::uint64_t{1} << pos) |
                           (std::uint64_t{1} << (pos + n)));
          stack.pop_back();
        }
      };
  rec(0, 0);
}

AlphaResult oracle_alpha(unsigned m, unsigned n, unsigned cell_limit) {
  EndPolys polys = enumerate_end_polys(m, n, cell_limit);
  auto result = alpha_from_polys(m, n, polys.left_end, polys.right_end);
  if (!result) {
    throw std::logic_error("no alternating end found by enumeration");
  }
  return *result;
}

// --- play sequences ----------------------------------------------------------

bool validate_sequence(const PlaySequence& seq, const Position& final_pos) {
  Position pos(final_pos.rows(), final_pos.cols());
  std::optional<Player> last;
  for (const PlayStep& step : seq) {
    if (last && *last == step.player) return false;
    last = step.player;
    if (step.domino.orientation != orientation_of(step.player)) return false;
    if (!pos.can_place(step.domino)) return false;
    pos = pos.with(step.domino);
  }
  return pos == final_pos;
}

PlaySequence alternating_sequence_for(const Position& pos, EndKind kind) {
  std::vector<Domino> verticals;
  std::vector<Domino> horizontals;
  for (const Domino& d : pos.dominoes()) {
    (d.orientation == Orientation::Vertical ? verticals : horizontals)
        .push_back(d);
  }
  int diff = static_cast<int>(verticals.size()) -
             static_cast<int>(horizontals.size());
  if (!alternation_diffs(kind).count(diff)) {
    throw std::invalid_argument(
        "domino counts do not fit an alternating game ending at this kind");
  }
  // The player who is stuck must be the one to move after the last step, which
  // fixes the starter: equal counts start with the stuck player, otherwise
  // the player with the extra domino's opponent ends the sequence.
  Player starter;
  if (kind == EndKind::LeftEnd) {
    starter = diff == 0 ? Player::Left : Player::Right;  // diff is 0 or -1
  } else {
    starter = diff == 0 ? Player::Right : Player::Left;  // diff is 0 or 1
  }
  PlaySequence seq;
  seq.reserve(verticals.size() + horizontals.size());
  std::size_t vi = 0, hi = 0;
  Player turn = starter;
  while (vi < verticals.size() || hi < horizontals.size()) {
    if (turn == Player::Left) {
      seq.push_back(PlayStep{Player::Left, verticals[vi++]});
      turn = Player::Right;
    } else {
      seq.push_back(PlayStep{Player::Right, horizontals[hi++]});
      turn = Player::Left;
    }
  }
  return seq;
}

// --- witness search ----------------------------------------------------------

namespace {

// Depth-first search over the same first-undecided-cell recursion, but pruned:
// leaving a cell empty is refused as soon as it would complete an empty pair
// of the forbidden orientation, so every leaf has the requested end kind.
class WitnessSearch {
 public:
  WitnessSearch(unsigned m, unsigned n, unsigned need_a, unsigned need_b,
                EndKind kind)
      : m_(m), n_(n), cells_(m * n), need_a_(need_a), need_b_(need_b),
        kind_(kind), covered_(cells_, 0) {}

  std::optional<std::vector<Domino>> run() {
    if (search(0, 0, 0)) return found_;
    return std::nullopt;
  }

 private:
  bool empty_allowed(unsigned pos) const {
    if (kind_ == EndKind::LeftEnd) {
      // No empty cell directly above may remain.
      return pos < n_ || covered_[pos - n_];
    }
    // RightEnd: no empty left neighbour in the same row.
    return pos % n_ == 0 || covered_[pos - 1];
  }

  bool search(unsigned pos, unsigned a, unsigned b) {
    while (pos < cells_ && covered_[pos]) ++pos;
    unsigned needed = (need_a_ - a) + (need_b_ - b);
    if (pos == cells_) {
      if (needed != 0) return false;
      found_ = stack_;
      return true;
    }
    if (cells_ - pos < 2 * needed) return false;  // not enough room left

    // Empty-first ordering tends to reach sparse end positions directly.
    if (empty_allowed(pos)) {
      if (search(pos + 1, a, b)) return true;
    }
    unsigned r = pos / n_, c = pos % n_;
    if (a < need_a_ && r + 1 < m_ && !covered_[pos + n_]) {
      covered_[pos] = covered_[pos + n_] = 1;
      stack_.push_back(vertical_at(r, c));
      bool ok = search(pos + 1, a + 1, b);
      stack_.pop_back();
      covered_[pos] = covered_[pos + n_] = 0;
      if (ok) return true;
    }
    if (b < need_b_ && c + 1 < n_ && !covered_[pos + 1]) {
      covered_[pos] = covered_[pos + 1] = 1;
      stack_.push_back(horizontal_at(r, c));
      bool ok = search(pos + 2, a, b + 1);
      stack_.pop_back();
      covered_[pos] = covered_[pos + 1] = 0;
      if (ok) return true;
    }
    return false;
  }

  unsigned m_, n_, cells_, need_a_, need_b_;
  EndKind kind_;
  std::vector<char> covered_;
  std::vector<Domino> stack_;
  std::optional<std::vector<Domino>> found_;
};

}  // namespace

Witness find_witness(const AlphaResult& target) {
  for (EndKind kind : target.provenance) {
    auto it = target.witnesses.find(kind);
    if (it == target.witnesses.end()) continue;
    for (auto [a, b] : it->second) {
      WitnessSearch search(target.m, target.n, a, b, kind);
      if (auto dominoes = search.run()) {
        Witness w{Position::from_dominoes(target.m, target.n, *dominoes), {},
                  kind};
        w.sequence = alternating_sequence_for(w.position, kind);
        return w;
      }
    }
  }
  throw std::logic_error("no position realizes the claimed witnesses");
}

// --- rendering and parsing ---------------------------------------------------

namespace {

constexpr const char* kLetters = "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz";

bool cells_adjacent(unsigned r1, unsigned c1, unsigned r2, unsigned c2) {
  unsigned dr = r1 > r2 ? r1 - r2 : r2 - r1;
  unsigned dc = c1 > c2 ? c1 - c2 : c2 - c1;
  return dr + dc == 1;
}

bool dominoes_adjacent(const Domino& x, const Domino& y) {
  const unsigned xr[2] = {x.row, x.other_row()};
  const unsigned xc[2] = {x.col, x.other_col()};
  const unsigned yr[2] = {y.row, y.other_row()};
  const unsigned yc[2] = {y.col, y.other_col()};
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      if (cells_adjacent(xr[i], xc[i], yr[j], yc[j])) return true;
    }
  }
  return false;
}

}  // namespace

std::string render_ascii(const Position& pos) {
  const auto& dominoes = pos.dominoes();
  std::vector<char> letter(dominoes.size(), '?');
  for (std::size_t i = 0; i < dominoes.size(); ++i) {
    std::set<char> taken;
    for (std::size_t j = 0; j < i; ++j) {
      if (dominoes_adjacent(dominoes[i], dominoes[j])) taken.insert(letter[j]);
    }
    for (const char* cand = kLetters; *cand; ++cand) {
      if (!taken.count(*cand)) {
        letter[i] = *cand;
        break;
      }
    }
  }
  std::vector<std::string> grid(pos.rows(), std::string(pos.cols(), '.'));
  for (std::size_t i = 0; i < dominoes.size(); ++i) {
    const Domino& d = dominoes[i];
    grid[d.row][d.col] = letter[i];
    grid[d.other_row()][d.other_col()] = letter[i];
  }
  std::string out;
  for (const auto& row : grid) {
    out += row;
    out += '\n';
  }
  return out;
}

Position parse_ascii(const std::string& text) {
  std::vector<std::string> lines;
  std::string line;
  std::istringstream in(text);
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  if (lines.empty()) throw ParseError("empty board text");
  unsigned m = static_cast<unsigned>(lines.size());
  unsigned n = static_cast<unsigned>(lines[0].size());
  if (n == 0) throw ParseError("empty board row");
  for (unsigned r = 0; r < m; ++r) {
    if (lines[r].size() != n) {
      throw ParseError("ragged row " + std::to_string(r));
    }
    for (char ch : lines[r]) {
      if (ch != '.' && !std::isalpha(static_cast<unsigned char>(ch))) {
        throw ParseError(std::string("bad cell character '") + ch + "'");
      }
    }
  }

  std::vector<std::vector<char>> consumed(m, std::vector<char>(n, 0));
  std::vector<Domino> dominoes;
  for (unsigned r = 0; r < m; ++r) {
    for (unsigned c = 0; c < n; ++c) {
      char ch = lines[r][c];
      if (ch == '.' || consumed[r][c]) continue;
      bool right = c + 1 < n && lines[r][c + 1] == ch && !consumed[r][c + 1];
      bool down = r + 1 < m && lines[r + 1][c] == ch && !consumed[r + 1][c];
      if (right == down) {
        throw ParseError(std::string("cell (") + std::to_string(r) + "," +
                         std::to_string(c) + ") letter '" + ch +
                         (right ? "' pairs ambiguously" : "' has no partner"));
      }
      consumed[r][c] = 1;
      if (right) {
        consumed[r][c + 1] = 1;
        dominoes.push_back(horizontal_at(r, c));
      } else {
        consumed[r + 1][c] = 1;
        dominoes.push_back(vertical_at(r, c));
      }
    }
  }
  try {
    return Position::from_dominoes(m, n, std::move(dominoes));
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("inconsistent board: ") + e.what());
  }
}

std::string to_json_text(const Position& pos) {
  nlohmann::json doc;
  doc["m"] = pos.rows();
  doc["n"] = pos.cols();
  nlohmann::json list = nlohmann::json::array();
  for (const Domino& d : pos.dominoes()) {
    const char* o = d.orientation == Orientation::Vertical ? "V" : "H";
    list.push_back({o, d.row, d.col});
  }
  doc["dominoes"] = std::move(list);
  return doc.dump();
}

Position position_from_json_text(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("bad position JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("m") || !doc.contains("n") ||
      !doc.contains("dominoes") || !doc["m"].is_number_unsigned() ||
      !doc["n"].is_number_unsigned() || !doc["dominoes"].is_array()) {
    throw ParseError("position JSON must carry m, n and a dominoes array");
  }
  std::vector<Domino> dominoes;
  for (const auto& entry : doc["dominoes"]) {
    if (!entry.is_array() || entry.size() != 3 || !entry[0].is_string() ||
        !entry[1].is_number_unsigned() || !entry[2].is_number_unsigned()) {
      throw ParseError("each domino must be [\"V\"|\"H\", row, col]");
    }
    std::string o = entry[0].get<std::string>();
    if (o != "V" && o != "H") {
      throw ParseError("bad domino orientation \"" + o + "\"");
    }
    Orientation orientation =
        o == "V" ? Orientation::Vertical : Orientation::Horizontal;
    dominoes.push_back(
        Domino{orientation, entry[1].get<unsigned>(), entry[2].get<unsigned>()});
  }
  try {
    return Position::from_dominoes(doc["m"].get<unsigned>(),
                                   doc["n"].get<unsigned>(),
                                   std::move(dominoes));
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("inconsistent position: ") + e.what());
  }
}

}  // namespace domineering
