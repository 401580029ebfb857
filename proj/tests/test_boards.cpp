#include "domineering/boards.hpp"

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "domineering/errors.hpp"

using namespace domineering;

namespace {

// Independent check on the enumeration: memoized broken-profile recursion
// counting all disjoint domino placements. The window mask tracks the covered
// status of the next `cols` cells.
class ProfileCounter {
 public:
  ProfileCounter(unsigned m, unsigned n) : cells_(m * n), cols_(n) {}

  unsigned long long count() { return rec(0, 0); }

 private:
  unsigned long long rec(unsigned pos, std::uint32_t window) {
    if (pos == cells_) return 1;
    auto key = std::make_pair(pos, window);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;

    unsigned long long total = 0;
    if (window & 1u) {
      total = rec(pos + 1, window >> 1);
    } else {
      total = rec(pos + 1, window >> 1);  // leave the cell empty
      if (pos % cols_ != cols_ - 1 && !((window >> 1) & 1u)) {
        total += rec(pos + 1, (window | 2u) >> 1);  // horizontal
      }
      if (pos + cols_ < cells_) {
        total += rec(pos + 1, (window >> 1) | (1u << (cols_ - 1)));  // vertical
      }
    }
    memo_[key] = total;
    return total;
  }

  unsigned cells_, cols_;
  std::map<std::pair<unsigned, std::uint32_t>, unsigned long long> memo_;
};

BivariatePoly poly(std::vector<Term> terms) {
  return BivariatePoly::from_terms(std::move(terms));
}

}  // namespace

TEST_CASE("positions validate their dominoes") {
  CHECK_THROWS_AS(Position(0, 3), std::invalid_argument);
  CHECK_THROWS_AS(Position(3, 0), std::invalid_argument);

  Position empty(2, 3);
  CHECK(empty.rows() == 2);
  CHECK(empty.cols() == 3);
  CHECK(empty.dominoes().empty());
  CHECK(empty.vertical_count() == 0);

  auto pos = Position::from_dominoes(2, 3, {vertical_at(0, 1)});
  CHECK(pos.vertical_count() == 1);
  CHECK(pos.horizontal_count() == 0);
  CHECK(pos.occupied(0, 1));
  CHECK(pos.occupied(1, 1));
  CHECK(!pos.occupied(0, 0));

  // Out of bounds: a vertical needs two rows, a horizontal two columns.
  CHECK_THROWS_AS(Position::from_dominoes(2, 3, {vertical_at(1, 0)}),
                  std::invalid_argument);
  CHECK_THROWS_AS(Position::from_dominoes(2, 3, {horizontal_at(0, 2)}),
                  std::invalid_argument);
  // Overlap.
  CHECK_THROWS_AS(Position::from_dominoes(
                      2, 3, {vertical_at(0, 1), horizontal_at(0, 0)}),
                  std::invalid_argument);

  auto grown = empty.with(horizontal_at(1, 0));
  CHECK(grown.horizontal_count() == 1);
  CHECK_THROWS_AS(grown.with(horizontal_at(1, 1)), std::invalid_argument);
  CHECK(empty.dominoes().empty());  // with() copies
}

TEST_CASE("transposition is an involution matching the transposed board") {
  auto pos = Position::from_dominoes(2, 3, {vertical_at(0, 2), horizontal_at(0, 0)});
  auto t = pos.transposed();
  CHECK(t.rows() == 3);
  CHECK(t.cols() == 2);
  CHECK(t == Position::from_dominoes(3, 2, {horizontal_at(2, 0), vertical_at(0, 0)}));
  CHECK(t.transposed() == pos);
}

TEST_CASE("legal_moves matches the worked examples") {
  Position row5(1, 5);
  CHECK(legal_moves(row5, Player::Left).empty());
  CHECK(legal_moves(row5, Player::Right).size() == 4);

  Position square(2, 2);
  CHECK(legal_moves(square, Player::Left).size() == 2);
  CHECK(legal_moves(square, Player::Right).size() == 2);

  auto full = Position::from_dominoes(2, 2, {vertical_at(0, 0), vertical_at(0, 1)});
  CHECK(legal_moves(full, Player::Left).empty());
  CHECK(legal_moves(full, Player::Right).empty());
}

TEST_CASE("end predicates match the worked examples") {
  Position row5(1, 5);
  CHECK(is_left_end(row5));
  CHECK(!is_right_end(row5));
  CHECK(has_end_kind(row5, EndKind::LeftEnd));
  CHECK(!has_end_kind(row5, EndKind::RightEnd));

  auto middle = Position::from_dominoes(2, 3, {vertical_at(0, 1)});
  CHECK(is_right_end(middle));
  CHECK(!is_left_end(middle));

  auto full = Position::from_dominoes(2, 2, {vertical_at(0, 0), vertical_at(0, 1)});
  CHECK(is_maximal(full));

  // A player having no move is exactly the corresponding predicate.
  for_each_position(2, 3, [](const Position& p) {
    CHECK(is_left_end(p) == legal_moves(p, Player::Left).empty());
    CHECK(is_right_end(p) == legal_moves(p, Player::Right).empty());
  });
}

TEST_CASE("enumeration reproduces hand-counted boards") {
  auto p11 = enumerate_end_polys(1, 1);
  CHECK(p11.left_end == BivariatePoly::one());
  CHECK(p11.right_end == BivariatePoly::one());
  CHECK(p11.maximal == BivariatePoly::one());
  CHECK(p11.positions == 1);

  auto p12 = enumerate_end_polys(1, 2);
  CHECK(p12.left_end == poly({{0, 0, 1}, {0, 1, 1}}));   // 1 + y
  CHECK(p12.right_end == poly({{0, 1, 1}}));             // y
  CHECK(p12.maximal == poly({{0, 1, 1}}));               // y
  CHECK(p12.positions == 2);

  auto p13 = enumerate_end_polys(1, 3);
  CHECK(p13.left_end == poly({{0, 0, 1}, {0, 1, 2}}));   // 1 + 2y
  CHECK(p13.right_end == poly({{0, 1, 2}}));             // 2y
  CHECK(p13.maximal == poly({{0, 1, 2}}));
  CHECK(p13.positions == 3);

  auto p22 = enumerate_end_polys(2, 2);
  CHECK(p22.left_end == poly({{0, 1, 2}, {0, 2, 1}, {2, 0, 1}}));   // 2y + y^2 + x^2
  CHECK(p22.right_end == poly({{1, 0, 2}, {2, 0, 1}, {0, 2, 1}}));  // 2x + x^2 + y^2
  CHECK(p22.maximal == poly({{2, 0, 1}, {0, 2, 1}}));               // x^2 + y^2
  CHECK(p22.positions == 7);

  auto p23 = enumerate_end_polys(2, 3);
  CHECK(p23.positions == 22);
  CHECK(p23.maximal == poly({{3, 0, 1}, {1, 2, 2}, {0, 2, 2}}));  // x^3 + 2xy^2 + 2y^2
  CHECK(p23.right_end.coefficient(1, 0) == 1);  // only the middle vertical
  CHECK(p23.left_end.coefficient(1, 1) == 4);
  CHECK(p23.left_end.coefficient(0, 1) == 0);
}

TEST_CASE("enumeration refuses oversized boards") {
  CHECK_THROWS_AS(enumerate_end_polys(5, 5), ResourceError);
  CHECK_THROWS_AS(enumerate_end_polys(5, 5, 24), ResourceError);
  CHECK_NOTHROW(enumerate_end_polys(5, 4));
  CHECK_THROWS_AS(for_each_position(7, 3, [](const Position&) {}),
                  ResourceError);
  CHECK_THROWS_AS(enumerate_end_polys(0, 3), std::invalid_argument);
}

TEST_CASE("enumeration count agrees with an independent profile recursion") {
  for (unsigned m = 1; m <= 16; ++m) {
    for (unsigned n = 1; n <= 16; ++n) {
      if (m * n > 16) continue;
      auto polys = enumerate_end_polys(m, n, 16);
      ProfileCounter counter(m, n);
      CHECK_MESSAGE(polys.positions == mpz_class(std::to_string(counter.count())),
                    "board ", m, "x", n);
    }
  }
}

TEST_CASE("maximal positions are counted in both end polynomials") {
  for (auto [m, n] : std::vector<std::pair<unsigned, unsigned>>{
           {1, 4}, {2, 3}, {3, 3}, {2, 5}, {4, 3}}) {
    auto polys = enumerate_end_polys(m, n);
    for (const auto& t : polys.maximal.terms()) {
      CHECK(polys.left_end.coefficient(t.a, t.b) >= t.coeff);
      CHECK(polys.right_end.coefficient(t.a, t.b) >= t.coeff);
    }
  }
}

TEST_CASE("predicate duality under transposition") {
  for (auto [m, n] : std::vector<std::pair<unsigned, unsigned>>{{2, 3}, {3, 3}, {2, 5}}) {
    for_each_position(m, n, [](const Position& p) {
      CHECK(is_left_end(p) == is_right_end(p.transposed()));
      CHECK(is_right_end(p) == is_left_end(p.transposed()));
    });
  }
}

TEST_CASE("oracle alpha matches hand-checked boards") {
  auto a25 = oracle_alpha(2, 5);
  CHECK(a25.alpha == 3);
  CHECK(a25.provenance == std::set<EndKind>{EndKind::LeftEnd});

  auto a34 = oracle_alpha(3, 4);
  CHECK(a34.alpha == 3);
  CHECK(a34.provenance == std::set<EndKind>{EndKind::RightEnd});

  auto a11 = oracle_alpha(1, 1);
  CHECK(a11.alpha == 0);
  CHECK(a11.provenance ==
        std::set<EndKind>{EndKind::LeftEnd, EndKind::RightEnd});

  auto a22 = oracle_alpha(2, 2);
  CHECK(a22.alpha == 1);
  CHECK(a22.provenance ==
        std::set<EndKind>{EndKind::LeftEnd, EndKind::RightEnd});
  CHECK(a22.witnesses.at(EndKind::LeftEnd) ==
        std::vector<std::pair<unsigned, unsigned>>{{0, 1}});
  CHECK(a22.witnesses.at(EndKind::RightEnd) ==
        std::vector<std::pair<unsigned, unsigned>>{{1, 0}});
}

TEST_CASE("alpha transposition swaps families and witness coordinates") {
  auto a23 = oracle_alpha(2, 3);
  auto a32 = oracle_alpha(3, 2);
  CHECK(transpose(a23) == a32);
  CHECK(transpose(a32) == a23);
  CHECK(a23.provenance == std::set<EndKind>{EndKind::RightEnd});
  CHECK(a32.provenance == std::set<EndKind>{EndKind::LeftEnd});
}

TEST_CASE("alternating sequences validate on every small end position") {
  for (unsigned m = 1; m <= 12; ++m) {
    for (unsigned n = 1; n <= 12; ++n) {
      if (m * n > 12) continue;
      for_each_position(m, n, [](const Position& p) {
        int diff = static_cast<int>(p.vertical_count()) -
                   static_cast<int>(p.horizontal_count());
        for (EndKind kind : {EndKind::LeftEnd, EndKind::RightEnd}) {
          if (!has_end_kind(p, kind)) continue;
          if (!alternation_diffs(kind).count(diff)) continue;
          auto seq = alternating_sequence_for(p, kind);
          CHECK(seq.size() == p.dominoes().size());
          CHECK(validate_sequence(seq, p));
        }
      });
    }
  }
}

TEST_CASE("sequence validation rejects broken games") {
  auto pos = Position::from_dominoes(2, 3, {vertical_at(0, 0), horizontal_at(0, 1)});

  PlaySequence good{{Player::Left, vertical_at(0, 0)},
                    {Player::Right, horizontal_at(0, 1)}};
  CHECK(validate_sequence(good, pos));

  PlaySequence twice{{Player::Left, vertical_at(0, 0)},
                     {Player::Left, vertical_at(0, 0)}};
  CHECK(!validate_sequence(twice, pos));  // no alternation, and overlapping

  PlaySequence wrong_orientation{{Player::Left, horizontal_at(0, 1)},
                                 {Player::Right, vertical_at(0, 0)}};
  CHECK(!validate_sequence(wrong_orientation, pos));

  PlaySequence incomplete{{Player::Left, vertical_at(0, 0)}};
  CHECK(!validate_sequence(incomplete, pos));

  PlaySequence overlapping{{Player::Left, vertical_at(0, 0)},
                           {Player::Right, horizontal_at(0, 0)}};
  CHECK(!validate_sequence(overlapping, pos));
}

TEST_CASE("the stuck player is to move after the sequence ends") {
  // One vertical, one horizontal: with equal counts the stuck player starts.
  auto even = Position::from_dominoes(2, 3, {vertical_at(0, 0), horizontal_at(0, 1)});
  REQUIRE(is_left_end(even));
  auto left_seq = alternating_sequence_for(even, EndKind::LeftEnd);
  REQUIRE(left_seq.size() == 2);
  CHECK(left_seq.front().player == Player::Left);  // L, R, then Left is stuck
  auto right_seq = alternating_sequence_for(even, EndKind::RightEnd);
  CHECK(right_seq.front().player == Player::Right);

  // With a - b = -1 Right must start so that Left faces the final position.
  auto odd = Position::from_dominoes(
      2, 5, {vertical_at(0, 0), horizontal_at(0, 1), horizontal_at(0, 3)});
  auto seq = alternating_sequence_for(odd, EndKind::LeftEnd);
  REQUIRE(seq.size() == 3);
  CHECK(seq.front().player == Player::Right);
  CHECK(seq.back().player == Player::Right);

  auto mismatch = Position::from_dominoes(2, 3, {vertical_at(0, 0)});
  // a - b = 1 cannot end with Left stuck.
  CHECK_THROWS_AS(alternating_sequence_for(mismatch, EndKind::LeftEnd),
                  std::invalid_argument);
}

TEST_CASE("find_witness realizes oracle results") {
  auto w25 = find_witness(oracle_alpha(2, 5));
  CHECK(w25.kind == EndKind::LeftEnd);
  CHECK(w25.position.vertical_count() == 1);
  CHECK(w25.position.horizontal_count() == 2);
  CHECK(is_left_end(w25.position));
  CHECK(w25.sequence.size() == 3);
  CHECK(validate_sequence(w25.sequence, w25.position));

  auto w23 = find_witness(oracle_alpha(2, 3));
  CHECK(w23.kind == EndKind::RightEnd);
  CHECK(w23.position == Position::from_dominoes(2, 3, {vertical_at(0, 1)}));
  CHECK(w23.sequence.size() == 1);
  CHECK(w23.sequence.front().player == Player::Left);

  auto w14 = find_witness(oracle_alpha(1, 4));
  CHECK(w14.position.dominoes().empty());
  CHECK(w14.sequence.empty());

  // Every small-board oracle result must be realizable.
  for (unsigned m = 1; m <= 4; ++m) {
    for (unsigned n = 1; n <= 4; ++n) {
      auto target = oracle_alpha(m, n);
      auto w = find_witness(target);
      CHECK(w.position.vertical_count() + w.position.horizontal_count() ==
            target.alpha);
      CHECK(has_end_kind(w.position, w.kind));
      CHECK(validate_sequence(w.sequence, w.position));
    }
  }

  AlphaResult impossible;
  impossible.m = 2;
  impossible.n = 2;
  impossible.alpha = 4;
  impossible.provenance = {EndKind::LeftEnd};
  impossible.witnesses[EndKind::LeftEnd] = {{4, 4}};
  CHECK_THROWS_AS(find_witness(impossible), std::logic_error);
}

TEST_CASE("ascii rendering matches the documented format") {
  auto middle = Position::from_dominoes(2, 3, {vertical_at(0, 1)});
  CHECK(render_ascii(middle) == ".A.\n.A.\n");
  CHECK(render_ascii(Position(1, 3)) == "...\n");

  auto two = Position::from_dominoes(2, 2, {vertical_at(0, 0), vertical_at(0, 1)});
  CHECK(render_ascii(two) == "AB\nAB\n");  // adjacent dominoes differ
}

TEST_CASE("ascii round-trips every small position") {
  for (auto [m, n] : std::vector<std::pair<unsigned, unsigned>>{{2, 3}, {3, 3}, {1, 5}}) {
    for_each_position(m, n, [](const Position& p) {
      CHECK(parse_ascii(render_ascii(p)) == p);
    });
  }
}

TEST_CASE("ascii parser rejects malformed boards") {
  CHECK_THROWS_AS(parse_ascii(""), ParseError);
  CHECK_THROWS_AS(parse_ascii(".A.\n.A\n"), ParseError);     // ragged
  CHECK_THROWS_AS(parse_ascii("AA\nAA\n"), ParseError);      // ambiguous block
  CHECK_THROWS_AS(parse_ascii("A..\n...\n"), ParseError);    // unpaired
  CHECK_THROWS_AS(parse_ascii("A.A\n...\n"), ParseError);    // split letter
  CHECK_THROWS_AS(parse_ascii(".#.\n"), ParseError);         // bad character
  CHECK(parse_ascii("AA\nBB\n") ==
        Position::from_dominoes(2, 2, {horizontal_at(0, 0), horizontal_at(1, 0)}));
}

TEST_CASE("position JSON round-trips and validates") {
  auto pos = Position::from_dominoes(2, 3, {vertical_at(0, 2), horizontal_at(1, 0)});
  CHECK(to_json_text(pos) ==
        R"({"dominoes":[["V",0,2],["H",1,0]],"m":2,"n":3})");
  CHECK(position_from_json_text(to_json_text(pos)) == pos);

  for_each_position(3, 3, [](const Position& p) {
    CHECK(position_from_json_text(to_json_text(p)) == p);
  });

  CHECK_THROWS_AS(position_from_json_text("nope"), ParseError);
  CHECK_THROWS_AS(position_from_json_text(R"({"m":2,"n":3})"), ParseError);
  CHECK_THROWS_AS(
      position_from_json_text(R"({"m":2,"n":3,"dominoes":[["X",0,0]]})"),
      ParseError);
  CHECK_THROWS_AS(
      position_from_json_text(R"({"m":2,"n":3,"dominoes":[["V",1,0]]})"),
      ParseError);  // out of bounds
  CHECK_THROWS_AS(
      position_from_json_text(
          R"({"m":2,"n":3,"dominoes":[["V",0,0],["V",0,0]]})"),
      ParseError);  // overlap
}
