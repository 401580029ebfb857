#include "domineering/transfer.hpp"

#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <vector>

#include "doctest.h"
#include "domineering/boards.hpp"
#include "domineering/errors.hpp"

using namespace domineering;

namespace {

BivariatePoly poly(std::vector<Term> terms) {
  return BivariatePoly::from_terms(std::move(terms));
}

std::vector<std::pair<unsigned, unsigned>> oracle_range() {
  std::vector<std::pair<unsigned, unsigned>> boards;
  for (unsigned m = 1; m <= 16; ++m) {
    for (unsigned n = 1; n <= 16; ++n) {
      if (m * n <= 16) boards.emplace_back(m, n);
    }
  }
  for (unsigned n = 1; n <= 7; ++n) {
    if (2 * n > 16) boards.emplace_back(2u, n);
  }
  return boards;
}

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    path = std::filesystem::temp_directory_path() /
           ("domineering_test_" + std::to_string(::getpid()));
    std::filesystem::remove_all(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
};

}  // namespace

TEST_CASE("level base cases") {
  auto right = build_right_level(0);
  REQUIRE(right.q == 0);
  for (const auto& m : right.plain) CHECK(m.dim() == 1);
  CHECK(right.plain[0].entry(1, 1) == BivariatePoly::one());
  CHECK(right.plain[1].entry(1, 1).is_zero());
  CHECK(right.plain[2].entry(1, 1).is_zero());
  CHECK(right.primed[0].entry(1, 1).is_zero());
  CHECK(right.primed[1].entry(1, 1) == BivariatePoly::one());
  CHECK(right.primed[2].entry(1, 1).is_zero());

  auto maximal = build_maximal_level(0);
  CHECK(maximal.plain[0].entry(1, 1) == BivariatePoly::one());
  CHECK(maximal.primed[1].entry(1, 1) == BivariatePoly::one());
  CHECK(maximal.primed[0].entry(1, 1).is_zero());
}

TEST_CASE("level one matches hand substitution") {
  auto x = BivariatePoly::monomial(1, 0);
  auto y = BivariatePoly::monomial(0, 1);
  auto one = BivariatePoly::one();

  auto right = build_right_level(1);
  REQUIRE(right.q == 1);
  REQUIRE(right.plain[0].dim() == 2);
  CHECK(right.plain[0].entry(1, 1).is_zero());
  CHECK(right.plain[0].entry(1, 2) == x);
  CHECK(right.plain[0].entry(2, 1) == one);
  CHECK(right.plain[0].entry(2, 2).is_zero());

  CHECK(right.primed[0].entry(1, 1) == one);
  CHECK(right.primed[0].entry(1, 2).is_zero());
  CHECK(right.primed[0].entry(2, 1).is_zero());

  CHECK(right.plain[2].entry(1, 1) == y);
  CHECK(right.plain[2].nonzero_count() == 1);

  auto maximal = build_maximal_level(1);
  REQUIRE(maximal.plain[2].dim() == 3);
  CHECK(maximal.plain[2].entry(1, 1) == y);
  CHECK(maximal.plain[2].entry(1, 2) == y);
  CHECK(maximal.plain[2].entry(1, 3).is_zero());
  CHECK(maximal.plain[2].nonzero_count() == 2);

  CHECK(maximal.plain[0].entry(1, 3) == x);
  CHECK(maximal.plain[0].entry(2, 1).is_zero());  // family 0 keeps row 2 empty
  CHECK(maximal.plain[1].entry(2, 1).is_zero());
  CHECK(maximal.plain[0].entry(3, 1) == one);
  CHECK(maximal.plain[0].entry(3, 2) == one);
}

TEST_CASE("level dimensions grow with the branching factor") {
  auto right = build_right_level(2);
  for (const auto& m : right.plain) CHECK(m.dim() == 4);
  for (const auto& m : right.primed) CHECK(m.dim() == 4);

  auto maximal = build_maximal_level(2);
  for (const auto& m : maximal.plain) CHECK(m.dim() == 9);
  for (const auto& m : maximal.primed) CHECK(m.dim() == 9);

  CHECK_THROWS_AS(build_right_level(50), ResourceError);
  CHECK_THROWS_AS(build_maximal_level(50), ResourceError);
}

TEST_CASE("end polynomials match hand-enumerated boards") {
  CHECK(right_end_poly(1, 1) == BivariatePoly::one());
  CHECK(right_end_poly(1, 2) == poly({{0, 1, 1}}));
  CHECK(right_end_poly(2, 2) == poly({{1, 0, 2}, {2, 0, 1}, {0, 2, 1}}));

  CHECK(left_end_poly(1, 1) == BivariatePoly::one());
  CHECK(left_end_poly(2, 1) == poly({{1, 0, 1}}));
  CHECK(left_end_poly(2, 2) == poly({{0, 1, 2}, {0, 2, 1}, {2, 0, 1}}));

  CHECK(maximal_poly(1, 1) == BivariatePoly::one());
  CHECK(maximal_poly(1, 2) == poly({{0, 1, 1}}));
  CHECK(maximal_poly(2, 2) == poly({{2, 0, 1}, {0, 2, 1}}));
}

TEST_CASE("matrix method equals exhaustive enumeration") {
  for (auto [m, n] : oracle_range()) {
    auto oracle = enumerate_end_polys(m, n, 16);
    CAPTURE(m);
    CAPTURE(n);
    CHECK(right_end_poly(m, n) == oracle.right_end);
    CHECK(left_end_poly(m, n) == oracle.left_end);
    CHECK(maximal_poly(m, n) == oracle.maximal);
  }
}

TEST_CASE("maximal counts are contained in both end polynomials") {
  for (auto [m, n] : oracle_range()) {
    auto f = maximal_poly(m, n);
    auto l = left_end_poly(m, n);
    auto r = right_end_poly(m, n);
    for (const auto& t : f.terms()) {
      CHECK(l.coefficient(t.a, t.b) >= t.coeff);
      CHECK(r.coefficient(t.a, t.b) >= t.coeff);
    }
  }
}

TEST_CASE("every term respects the cell budget") {
  for (auto [m, n] : oracle_range()) {
    for (const auto& p :
         {right_end_poly(m, n), left_end_poly(m, n), maximal_poly(m, n)}) {
      for (const auto& t : p.terms()) {
        CHECK(2 * (t.a + t.b) <= m * n);
      }
    }
  }
}

TEST_CASE("transpose duality") {
  for (unsigned m = 1; m <= 4; ++m) {
    for (unsigned n = 1; n <= 4; ++n) {
      CHECK(left_end_poly(m, n) == swap_vars(right_end_poly(n, m)));
      CHECK(maximal_poly(m, n) == swap_vars(maximal_poly(n, m)));
    }
  }
}

TEST_CASE("one-row boards use the scalar recurrence consistently") {
  for (unsigned n = 1; n <= 6; ++n) {
    auto level = build_right_level(n);
    auto sum = mat_add(level.plain[0], level.primed[0]);
    CHECK(right_end_poly(1, n) == sum.entry(1, 1));
  }
  // Beyond the matrix width limit the scalar path still works.
  auto long_row = right_end_poly(1, 40);
  CHECK(!long_row.is_zero());
  CHECK(long_row == swap_vars(left_end_poly(40, 1)));
}

TEST_CASE("capped results equal truncated uncapped results") {
  for (auto [m, n] : std::vector<std::pair<unsigned, unsigned>>{
           {2, 4}, {3, 3}, {4, 3}, {2, 7}}) {
    auto full_r = right_end_poly(m, n);
    auto full_f = maximal_poly(m, n);
    for (unsigned c : {0u, 1u, 2u, 3u, 5u}) {
      TransferOptions opts;
      opts.cap = DegreeCap::bounded(c);
      CHECK(right_end_poly(m, n, opts) == truncate(full_r, opts.cap));
      CHECK(maximal_poly(m, n, opts) == truncate(full_f, opts.cap));
    }
  }
}

TEST_CASE("thread count does not change results") {
  TransferOptions serial;
  serial.threads = 1;
  TransferOptions parallel;
  parallel.threads = 4;
  CHECK(right_end_poly(3, 5, serial) == right_end_poly(3, 5, parallel));
  CHECK(maximal_poly(3, 4, serial) == maximal_poly(3, 4, parallel));
}

TEST_CASE("width limits are enforced and transposition rescues maximal") {
  TransferOptions opts;
  CHECK_THROWS_AS(right_end_poly(2, opts.max_end_width + 1, opts),
                  ResourceError);
  CHECK_THROWS_AS(maximal_poly(8, 8, opts), ResourceError);

  // 2x9 exceeds the maximal width but its transpose fits.
  auto f29 = maximal_poly(2, 9, opts);
  CHECK(f29 == enumerate_end_polys(2, 9, 18).maximal);

  TransferOptions narrow;
  narrow.max_end_width = 3;
  CHECK_THROWS_AS(right_end_poly(2, 4, narrow), ResourceError);
  CHECK_NOTHROW(right_end_poly(1, 10, narrow));  // scalar path has no width
}

TEST_CASE("kind names round-trip and dispatch") {
  for (PolyKind kind :
       {PolyKind::LeftEnd, PolyKind::RightEnd, PolyKind::Maximal}) {
    CHECK(poly_kind_from_name(poly_kind_name(kind)) == kind);
  }
  CHECK_THROWS_AS(poly_kind_from_name("sideways"), ParseError);

  CHECK(end_poly(PolyKind::RightEnd, 2, 2) == right_end_poly(2, 2));
  CHECK(end_poly(PolyKind::LeftEnd, 2, 3) == left_end_poly(2, 3));
  CHECK(end_poly(PolyKind::Maximal, 3, 3) == maximal_poly(3, 3));
}

TEST_CASE("cache stores and retrieves polynomials byte-identically") {
  TempDir tmp;
  EndPolySpec spec{PolyKind::RightEnd, 2, 3, DegreeCap::unbounded()};

  CHECK(!cache_lookup(tmp.path, spec).has_value());

  auto p = right_end_poly(2, 3);
  cache_store(tmp.path, spec, p);
  CHECK(std::filesystem::exists(tmp.path / "right_2x3_unbounded.poly.json"));
  auto hit = cache_lookup(tmp.path, spec);
  REQUIRE(hit.has_value());
  CHECK(*hit == p);
  CHECK(to_json_text(*hit) == to_json_text(p));

  // A different cap is a different key.
  EndPolySpec capped = spec;
  capped.cap = DegreeCap::bounded(2);
  CHECK(!cache_lookup(tmp.path, capped).has_value());
}

TEST_CASE("cache ignores wrong versions and corrupt files") {
  TempDir tmp;
  EndPolySpec spec{PolyKind::Maximal, 2, 2, DegreeCap::unbounded()};
  std::filesystem::create_directories(tmp.path);

  {
    std::ofstream out(tmp.path / cache_file_name(spec));
    out << R"({"format":2,"kind":"maximal","m":2,"n":2,"cap":"unbounded","terms":[]})";
  }
  CHECK(!cache_lookup(tmp.path, spec).has_value());

  {
    std::ofstream out(tmp.path / cache_file_name(spec));
    out << "{ not json";
  }
  CHECK(!cache_lookup(tmp.path, spec).has_value());

  {
    // Right header, mismatching board: treated as a miss.
    std::ofstream out(tmp.path / cache_file_name(spec));
    out << R"({"format":1,"kind":"maximal","m":9,"n":9,"cap":"unbounded","terms":[]})";
  }
  CHECK(!cache_lookup(tmp.path, spec).has_value());
}

TEST_CASE("polynomial functions consult the cache when configured") {
  TempDir tmp;
  TransferOptions opts;
  opts.cache_dir = tmp.path;

  auto first = right_end_poly(3, 3, opts);
  CHECK(std::filesystem::exists(tmp.path / "right_3x3_unbounded.poly.json"));

  // Poison the cache entry; a hit would now return the poisoned value.
  EndPolySpec spec{PolyKind::RightEnd, 3, 3, DegreeCap::unbounded()};
  cache_store(tmp.path, spec, BivariatePoly::monomial(9, 9, 123));
  auto poisoned = right_end_poly(3, 3, opts);
  CHECK(poisoned == BivariatePoly::monomial(9, 9, 123));
  CHECK(first == right_end_poly(3, 3));  // uncached path is unaffected
}
