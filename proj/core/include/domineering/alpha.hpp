#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "domineering/alpha_result.hpp"

namespace domineering {

// How the polynomial degree cap is chosen while searching for alpha.
//
// IterativeDeepening starts from a small cap and doubles it until a
// qualifying term appears.  Because every coefficient is nonnegative,
// truncation never cancels terms: any minimum found under a cap is the
// true minimum, so the strategy only affects cost, never results.
enum class CapStrategy {
  IterativeDeepening,
  Unbounded,
};

struct AlphaOptions {
  CapStrategy strategy = CapStrategy::IterativeDeepening;
  unsigned threads = 1;
  unsigned max_end_width = 11;
  std::optional<std::filesystem::path> cache_dir;
};

// Minimum number of moves in an alternating game on an m x n board that
// reaches a position where the player to move is stuck, together with the
// end families (Left/Right) that achieve it and the (a, b) count pairs.
AlphaResult compute_alpha(unsigned m, unsigned n, const AlphaOptions& options = {});
AlphaResult compute_alpha(unsigned m, unsigned n, CapStrategy strategy);

// Rectangular table of alpha results, 1-based in both dimensions.  Cells
// that were skipped (resource limits) stay empty.
class AlphaTable {
 public:
  AlphaTable(unsigned max_m, unsigned max_n);

  unsigned max_m() const { return max_m_; }
  unsigned max_n() const { return max_n_; }
  bool in_range(unsigned m, unsigned n) const {
    return m >= 1 && m <= max_m_ && n >= 1 && n <= max_n_;
  }

  const std::optional<AlphaResult>& cell(unsigned m, unsigned n) const;
  void set_cell(AlphaResult result);

  bool operator==(const AlphaTable&) const = default;

 private:
  unsigned max_m_;
  unsigned max_n_;
  std::vector<std::optional<AlphaResult>> cells_;
};

// Computes every cell of the table, filling symmetric cells by
// transposition.  Cells whose boards exceed the resource limits are left
// absent instead of failing the whole table.
AlphaTable build_table(unsigned max_m, unsigned max_n, const AlphaOptions& options = {});

// Frozen reference values for the boards whose alpha is known: the full
// 10x10 range published for this problem plus the 2x11 board.  Witness
// pair sets are left empty; only values and end families are recorded.
AlphaTable expected_table();

// Empirical regularities checked over a computed table:
//  - one-row and one-column boards need 0 moves;
//  - alpha is symmetric under transposition, with end families swapped;
//  - for boards with both sides >= 5, both end families share the minimum.
// Violations are reported, not thrown: the third pattern in particular is
// a conjecture checked on the computed range only.
struct ObservationReport {
  unsigned cells_checked = 0;
  std::vector<std::string> dimension_one_violations;
  std::vector<std::string> symmetry_violations;
  std::vector<std::string> shared_minimum_violations;

  bool all_hold() const {
    return dimension_one_violations.empty() && symmetry_violations.empty() &&
           shared_minimum_violations.empty();
  }
  std::string summary() const;
};

ObservationReport check_observations(const AlphaTable& table);

// Renderers.  Text mimics the published layout: bare values with the end
// families as suffixes (3L, 4LR), zero cells without a suffix, absent
// cells as "-".  CSV and JSON list populated cells in row-major order.
std::string render_table_text(const AlphaTable& table);
std::string render_table_csv(const AlphaTable& table);
std::string render_table_json(const AlphaTable& table);

std::string render_alpha_text(const AlphaResult& result);
std::string render_alpha_csv(const AlphaResult& result);

}  // namespace domineering
