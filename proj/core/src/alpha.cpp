#include "domineering/alpha.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string_view>
#include <utility>

#include <nlohmann/json.hpp>

#include "domineering/errors.hpp"
#include "domineering/transfer.hpp"

namespace domineering {

namespace {

std::optional<AlphaResult> attempt_alpha(unsigned m, unsigned n,
                                         const AlphaOptions& options,
                                         const DegreeCap& cap) {
  TransferOptions transfer;
  transfer.cap = cap;
  transfer.threads = options.threads;
  transfer.max_end_width = options.max_end_width;
  transfer.cache_dir = options.cache_dir;
  auto left = left_end_poly(m, n, transfer);
  auto right = right_end_poly(m, n, transfer);
  return alpha_from_polys(m, n, left, right);
}

}  // namespace

AlphaResult compute_alpha(unsigned m, unsigned n, const AlphaOptions& options) {
  if (m == 0 || n == 0) {
    throw std::invalid_argument("compute_alpha: board dimensions must be >= 1");
  }
  if (options.strategy == CapStrategy::Unbounded) {
    auto result = attempt_alpha(m, n, options, DegreeCap::unbounded());
    if (!result) {
      throw std::logic_error("compute_alpha: no terminating alternating line");
    }
    return *result;
  }

  // Iterative deepening.  A found minimum is always the true minimum:
  // truncation only removes terms of higher total degree.  Alternating play
  // always terminates and uses at most floor(m*n/2) dominoes, so the final
  // cap is guaranteed to succeed.
  const unsigned cells = m * n;
  const unsigned max_cap = (cells + 1) / 2;
  unsigned cap = std::min((cells + 5) / 6 + 2, max_cap);
  for (;;) {
    auto result = attempt_alpha(m, n, options, DegreeCap::bounded(cap));
    if (result) return *result;
    if (cap >= max_cap) {
      throw std::logic_error("compute_alpha: no terminating alternating line");
    }
    cap = std::min(cap * 2, max_cap);
  }
}

AlphaResult compute_alpha(unsigned m, unsigned n, CapStrategy strategy) {
  AlphaOptions options;
  options.strategy = strategy;
  return compute_alpha(m, n, options);
}

AlphaTable::AlphaTable(unsigned max_m, unsigned max_n)
    : max_m_(max_m), max_n_(max_n) {
  if (max_m == 0 || max_n == 0) {
    throw std::invalid_argument("AlphaTable: dimensions must be >= 1");
  }
  cells_.resize(static_cast<std::size_t>(max_m) * max_n);
}

const std::optional<AlphaResult>& AlphaTable::cell(unsigned m, unsigned n) const {
  if (!in_range(m, n)) {
    throw std::out_of_range("AlphaTable::cell: index out of range");
  }
  return cells_[static_cast<std::size_t>(m - 1) * max_n_ + (n - 1)];
}

void AlphaTable::set_cell(AlphaResult result) {
  if (!in_range(result.m, result.n)) {
    throw std::out_of_range("AlphaTable::set_cell: result out of range");
  }
  cells_[static_cast<std::size_t>(result.m - 1) * max_n_ + (result.n - 1)] =
      std::move(result);
}

AlphaTable build_table(unsigned max_m, unsigned max_n, const AlphaOptions& options) {
  AlphaTable table(max_m, max_n);
  for (unsigned m = 1; m <= max_m; ++m) {
    for (unsigned n = 1; n <= max_n; ++n) {
      if (table.cell(m, n).has_value()) continue;  // filled by transposition
      try {
        auto result = compute_alpha(m, n, options);
        if (m != n && table.in_range(n, m)) {
          table.set_cell(transpose(result));
        }
        table.set_cell(std::move(result));
      } catch (const ResourceError&) {
        // Board too large for the configured limits; leave the cell absent.
      }
    }
  }
  return table;
}

namespace {

// Known values, row per board height starting at 1; columns start at
// width 1.  Suffix letters name the end families achieving the minimum.
constexpr std::string_view kKnownRows[] = {
    "0LR 0L 0L 0L 0L 0L 0L 0L 0L 0L",
    "0R 1LR 1R 3L 3L 4LR 4R 4R 5R 5R 7LR",
    "0R 1L 2LR 3R 3L 4L 5R 5L 6L 8L",
    "0R 3R 3L 4LR 5R 7LR 7L 8LR 9R",
    "0R 3R 3R 5L 7LR 8LR 9LR 11LR",
    "0R 4LR 4R 7LR 8LR 9LR 11LR 12LR",
    "0R 4L 5L 7R 9LR 11LR 12LR 15LR",
    "0R 4L 5R 8LR 11LR 12LR 15LR 16LR",
    "0R 5L 6R 9L",
    "0R 5L 8R",
};

AlphaResult reference_cell(unsigned m, unsigned n, std::string_view token) {
  AlphaResult result;
  result.m = m;
  result.n = n;
  std::size_t digits = 0;
  while (digits < token.size() &&
         std::isdigit(static_cast<unsigned char>(token[digits]))) {
    ++digits;
  }
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + digits, result.alpha);
  if (ec != std::errc() || ptr != token.data() + digits || digits == 0) {
    throw std::logic_error("reference table: bad value token");
  }
  for (char c : token.substr(digits)) {
    result.provenance.insert(end_kind_from_letter(c));
  }
  if (result.provenance.empty()) {
    throw std::logic_error("reference table: missing end families");
  }
  return result;
}

}  // namespace

AlphaTable expected_table() {
  AlphaTable table(10, 11);
  unsigned m = 0;
  for (std::string_view row : kKnownRows) {
    ++m;
    unsigned n = 0;
    std::size_t start = 0;
    while (start < row.size()) {
      std::size_t end = row.find(' ', start);
      if (end == std::string_view::npos) end = row.size();
      table.set_cell(reference_cell(m, ++n, row.substr(start, end - start)));
      start = end + 1;
    }
  }
  return table;
}

namespace {

std::string cell_name(unsigned m, unsigned n) {
  return "(" + std::to_string(m) + "," + std::to_string(n) + ")";
}

}  // namespace

ObservationReport check_observations(const AlphaTable& table) {
  ObservationReport report;
  for (unsigned m = 1; m <= table.max_m(); ++m) {
    for (unsigned n = 1; n <= table.max_n(); ++n) {
      const auto& cell = table.cell(m, n);
      if (!cell) continue;
      ++report.cells_checked;
      if ((m == 1 || n == 1) && cell->alpha != 0) {
        report.dimension_one_violations.push_back(
            cell_name(m, n) + ": one-dimensional board has alpha " +
            std::to_string(cell->alpha) + ", expected 0");
      }
      if (m >= 5 && n >= 5 &&
          cell->provenance != std::set<EndKind>{EndKind::LeftEnd, EndKind::RightEnd}) {
        report.shared_minimum_violations.push_back(
            cell_name(m, n) + ": minimum achieved only by " +
            provenance_suffix(cell->provenance));
      }
      if (m < n && table.in_range(n, m) && table.cell(n, m)) {
        const auto& mirror = *table.cell(n, m);
        if (cell->alpha != mirror.alpha) {
          report.symmetry_violations.push_back(
              cell_name(m, n) + " vs " + cell_name(n, m) + ": values " +
              std::to_string(cell->alpha) + " and " + std::to_string(mirror.alpha));
        }
        std::set<EndKind> transposed;
        for (EndKind kind : cell->provenance) transposed.insert(transpose(kind));
        if (transposed != mirror.provenance) {
          report.symmetry_violations.push_back(
              cell_name(m, n) + " vs " + cell_name(n, m) +
              ": end families do not transpose (" +
              provenance_suffix(cell->provenance) + " vs " +
              provenance_suffix(mirror.provenance) + ")");
        }
      }
    }
  }
  return report;
}

std::string ObservationReport::summary() const {
  std::ostringstream out;
  out << "cells checked: " << cells_checked << "\n";
  auto section = [&out](const char* label, const std::vector<std::string>& items) {
    out << label << ": ";
    if (items.empty()) {
      out << "ok\n";
      return;
    }
    out << items.size() << " violation" << (items.size() == 1 ? "" : "s") << "\n";
    for (const auto& item : items) out << "  " << item << "\n";
  };
  section("one-dimensional boards need 0 moves", dimension_one_violations);
  section("transpose symmetry", symmetry_violations);
  section("shared minimum for boards >= 5x5", shared_minimum_violations);
  return out.str();
}

namespace {

std::string table_cell_text(const std::optional<AlphaResult>& cell) {
  if (!cell) return "-";
  std::string text = std::to_string(cell->alpha);
  if (cell->alpha != 0) text += provenance_suffix(cell->provenance);
  return text;
}

}  // namespace

std::string render_table_text(const AlphaTable& table) {
  const unsigned cols = table.max_n() + 1;
  std::vector<std::vector<std::string>> grid;
  grid.emplace_back();
  grid.back().push_back("m/n");
  for (unsigned n = 1; n <= table.max_n(); ++n) {
    grid.back().push_back(std::to_string(n));
  }
  for (unsigned m = 1; m <= table.max_m(); ++m) {
    grid.emplace_back();
    grid.back().push_back(std::to_string(m));
    for (unsigned n = 1; n <= table.max_n(); ++n) {
      grid.back().push_back(table_cell_text(table.cell(m, n)));
    }
  }

  std::vector<std::size_t> widths(cols, 0);
  for (const auto& row : grid) {
    for (unsigned c = 0; c < cols; ++c) {
      widths[c] = std::max(widths[c], row[c].size());
    }
  }

  std::string out;
  for (const auto& row : grid) {
    for (unsigned c = 0; c < cols; ++c) {
      if (c > 0) out += "  ";
      out.append(widths[c] - row[c].size(), ' ');
      out += row[c];
    }
    out += '\n';
  }
  return out;
}

std::string render_table_csv(const AlphaTable& table) {
  std::string out = "m,n,alpha,provenance\n";
  for (unsigned m = 1; m <= table.max_m(); ++m) {
    for (unsigned n = 1; n <= table.max_n(); ++n) {
      const auto& cell = table.cell(m, n);
      if (!cell) continue;
      out += std::to_string(m) + "," + std::to_string(n) + "," +
             std::to_string(cell->alpha) + "," + provenance_suffix(cell->provenance) +
             "\n";
    }
  }
  return out;
}

std::string render_table_json(const AlphaTable& table) {
  nlohmann::json doc;
  doc["max_m"] = table.max_m();
  doc["max_n"] = table.max_n();
  doc["cells"] = nlohmann::json::array();
  for (unsigned m = 1; m <= table.max_m(); ++m) {
    for (unsigned n = 1; n <= table.max_n(); ++n) {
      const auto& cell = table.cell(m, n);
      if (!cell) continue;
      doc["cells"].push_back(nlohmann::json::parse(to_json_text(*cell)));
    }
  }
  return doc.dump();
}

std::string render_alpha_text(const AlphaResult& result) {
  return "alpha(" + std::to_string(result.m) + "," + std::to_string(result.n) +
         ") = " + std::to_string(result.alpha) + " [" +
         provenance_suffix(result.provenance) + "]";
}

std::string render_alpha_csv(const AlphaResult& result) {
  return "m,n,alpha,provenance\n" + std::to_string(result.m) + "," +
         std::to_string(result.n) + "," + std::to_string(result.alpha) + "," +
         provenance_suffix(result.provenance) + "\n";
}

}  // namespace domineering
