#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "domineering/alpha.hpp"
#include "domineering/boards.hpp"
#include "domineering/errors.hpp"
#include "domineering/oeis.hpp"
#include "domineering/parallel.hpp"
#include "domineering/transfer.hpp"

using namespace domineering;

namespace {

enum ExitCode : int {
  kOk = 0,
  kVerificationFailure = 1,
  kUsageError = 2,
  kResourceError = 3,
  kInternalError = 4,
};

struct RunConfig {
  std::string format = "text";
  std::string cache_dir;
  unsigned threads = 0;  // 0 = all available cores
  bool offline = false;
  std::string oeis_url = kOeisDefaultUrl;

  unsigned resolved_threads() const { return resolve_threads(threads); }
  std::optional<std::filesystem::path> cache_path() const {
    if (cache_dir.empty()) return std::nullopt;
    return std::filesystem::path(cache_dir);
  }
  AlphaOptions alpha_options() const {
    AlphaOptions options;
    options.threads = resolved_threads();
    options.cache_dir = cache_path();
    return options;
  }
  TransferOptions transfer_options() const {
    TransferOptions options;
    options.threads = resolved_threads();
    options.cache_dir = cache_path();
    return options;
  }
};

std::string player_name(Player player) {
  return player == Player::Left ? "Left" : "Right";
}

std::string orientation_name(Orientation orientation) {
  return orientation == Orientation::Vertical ? "vertical" : "horizontal";
}

char orientation_letter(Orientation orientation) {
  return orientation == Orientation::Vertical ? 'V' : 'H';
}

int cmd_alpha(unsigned m, unsigned n, const RunConfig& config) {
  auto result = compute_alpha(m, n, config.alpha_options());
  if (config.format == "json") {
    std::cout << to_json_text(result) << "\n";
  } else if (config.format == "csv") {
    std::cout << render_alpha_csv(result);
  } else {
    std::cout << render_alpha_text(result) << "\n";
  }
  return kOk;
}

int cmd_table(unsigned max_m, unsigned max_n, const RunConfig& config) {
  auto table = build_table(max_m, max_n, config.alpha_options());
  if (config.format == "json") {
    std::cout << render_table_json(table) << "\n";
  } else if (config.format == "csv") {
    std::cout << render_table_csv(table);
  } else {
    std::cout << render_table_text(table);
  }
  return kOk;
}

int cmd_poly(const std::string& kind_name, unsigned m, unsigned n,
             const RunConfig& config) {
  auto kind = poly_kind_from_name(kind_name);
  auto poly = end_poly(kind, m, n, config.transfer_options());
  if (config.format == "json") {
    std::cout << to_json_text(poly) << "\n";
  } else if (config.format == "csv") {
    std::cout << "a,b,coeff\n";
    for (const auto& term : poly.terms()) {
      std::cout << term.a << "," << term.b << "," << term.coeff.get_str()
                << "\n";
    }
  } else {
    std::cout << to_text(poly);
  }
  return kOk;
}

struct BoardCheck {
  unsigned m = 0;
  unsigned n = 0;
  bool polys_ok = false;
  bool alpha_ok = false;
};

int cmd_verify(unsigned max_cells, const RunConfig& config) {
  constexpr unsigned kOracleLimit = 20;
  if (max_cells > kOracleLimit) {
    throw ResourceError("verify: the exhaustive oracle is limited to " +
                        std::to_string(kOracleLimit) + " cells per board");
  }
  TransferOptions transfer;
  transfer.threads = config.resolved_threads();  // no cache: verify runs fresh
  AlphaOptions alpha_options;
  alpha_options.threads = transfer.threads;

  std::vector<BoardCheck> checks;
  bool all_ok = true;
  for (unsigned m = 1; m <= max_cells; ++m) {
    for (unsigned n = 1; n <= max_cells; ++n) {
      if (m * n > max_cells) continue;
      BoardCheck check;
      check.m = m;
      check.n = n;
      auto oracle = enumerate_end_polys(m, n);
      check.polys_ok = left_end_poly(m, n, transfer) == oracle.left_end &&
                       right_end_poly(m, n, transfer) == oracle.right_end &&
                       maximal_poly(m, n, transfer) == oracle.maximal;
      check.alpha_ok = compute_alpha(m, n, alpha_options) == oracle_alpha(m, n);
      all_ok = all_ok && check.polys_ok && check.alpha_ok;
      checks.push_back(check);
    }
  }

  if (config.format == "json") {
    nlohmann::json doc;
    doc["max_cells"] = max_cells;
    doc["all_ok"] = all_ok;
    doc["boards"] = nlohmann::json::array();
    for (const auto& check : checks) {
      doc["boards"].push_back({{"m", check.m},
                               {"n", check.n},
                               {"polynomials_ok", check.polys_ok},
                               {"alpha_ok", check.alpha_ok}});
    }
    std::cout << doc.dump() << "\n";
  } else if (config.format == "csv") {
    std::cout << "m,n,polynomials_ok,alpha_ok\n";
    for (const auto& check : checks) {
      std::cout << check.m << "," << check.n << ","
                << (check.polys_ok ? "true" : "false") << ","
                << (check.alpha_ok ? "true" : "false") << "\n";
    }
  } else {
    for (const auto& check : checks) {
      std::cout << check.m << "x" << check.n << ": "
                << (check.polys_ok ? "polynomials ok" : "POLYNOMIAL MISMATCH")
                << ", " << (check.alpha_ok ? "alpha ok" : "ALPHA MISMATCH")
                << "\n";
    }
    std::cout << (all_ok ? "verified " : "FAILED: ") << checks.size()
              << " boards" << (all_ok ? ", all ok" : " had mismatches") << "\n";
  }
  return all_ok ? kOk : kVerificationFailure;
}

int cmd_witness(unsigned m, unsigned n, const RunConfig& config) {
  auto result = compute_alpha(m, n, config.alpha_options());
  auto witness = find_witness(result);
  if (config.format == "json") {
    nlohmann::json doc;
    doc["m"] = m;
    doc["n"] = n;
    doc["alpha"] = result.alpha;
    doc["kind"] = std::string(1, end_kind_letter(witness.kind));
    doc["position"] = nlohmann::json::parse(to_json_text(witness.position));
    doc["moves"] = nlohmann::json::array();
    for (const auto& step : witness.sequence) {
      doc["moves"].push_back(
          {{"player", player_name(step.player)},
           {"orientation", std::string(1, orientation_letter(step.domino.orientation))},
           {"row", step.domino.row},
           {"col", step.domino.col}});
    }
    std::cout << doc.dump() << "\n";
  } else if (config.format == "csv") {
    std::cout << "step,player,orientation,row,col\n";
    for (std::size_t i = 0; i < witness.sequence.size(); ++i) {
      const auto& step = witness.sequence[i];
      std::cout << i + 1 << "," << player_name(step.player) << ","
                << orientation_letter(step.domino.orientation) << ","
                << step.domino.row << "," << step.domino.col << "\n";
    }
  } else {
    std::cout << render_alpha_text(result) << "\n";
    std::cout << render_ascii(witness.position);
    if (witness.sequence.empty()) {
      std::cout << "moves: none\n";
    } else {
      std::cout << "moves:\n";
      for (std::size_t i = 0; i < witness.sequence.size(); ++i) {
        const auto& step = witness.sequence[i];
        std::cout << "  " << i + 1 << ". " << player_name(step.player) << " "
                  << orientation_name(step.domino.orientation) << " at ("
                  << step.domino.row << "," << step.domino.col << ")\n";
      }
    }
  }
  return kOk;
}

int cmd_oeis_check(unsigned n_max, const RunConfig& config) {
  OeisOptions options;
  options.n_max = n_max;
  options.offline = config.offline;
  options.cache_dir = config.cache_path();
  options.url = config.oeis_url;
  options.threads = config.resolved_threads();
  auto report = oeis_check(options);
  if (config.format == "json") {
    std::cout << render_oeis_json(report) << "\n";
  } else if (config.format == "csv") {
    std::cout << render_oeis_csv(report);
  } else {
    std::cout << render_oeis_text(report);
  }
  return report.all_agree() ? kOk : kVerificationFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Domineering end positions: generating polynomials and "
               "minimum alternating game lengths"};
  app.require_subcommand(1);

  RunConfig config;
  app.add_option("--format", config.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
  app.add_option("--cache-dir", config.cache_dir,
                 "Directory for cached polynomials and downloads")
      ->envname("DOMINEERING_CACHE_DIR");
  app.add_option("--threads", config.threads,
                 "Worker threads (default: all available cores)")
      ->check(CLI::Range(1u, 4096u))
      ->envname("DOMINEERING_THREADS");
  app.add_flag("--offline", config.offline, "Never touch the network");
  app.add_option("--oeis-url", config.oeis_url)->group("");  // test override

  unsigned m = 1, n = 1, max_m = 1, max_n = 1, max_cells = 1, n_max = 11;
  std::string kind;

  auto* alpha_cmd =
      app.add_subcommand("alpha", "Minimum alternating game length for m x n");
  alpha_cmd->add_option("m", m, "Board rows")->required()->check(CLI::Range(1u, 1048576u));
  alpha_cmd->add_option("n", n, "Board columns")->required()->check(CLI::Range(1u, 1048576u));

  auto* table_cmd = app.add_subcommand("table", "Table of minimum game lengths");
  table_cmd->add_option("max_m", max_m, "Max rows")->required()->check(CLI::Range(1u, 1048576u));
  table_cmd->add_option("max_n", max_n, "Max columns")->required()->check(CLI::Range(1u, 1048576u));

  auto* poly_cmd =
      app.add_subcommand("poly", "Generating polynomial of end positions");
  poly_cmd->add_option("kind", kind, "left, right, or maximal")
      ->required()
      ->check(CLI::IsMember({"left", "right", "maximal"}));
  poly_cmd->add_option("m", m, "Board rows")->required()->check(CLI::Range(1u, 1048576u));
  poly_cmd->add_option("n", n, "Board columns")->required()->check(CLI::Range(1u, 1048576u));

  auto* verify_cmd = app.add_subcommand(
      "verify", "Check matrix results against exhaustive enumeration");
  verify_cmd->add_option("max_cells", max_cells, "Check all boards with m*n <= this")
      ->required()
      ->check(CLI::Range(1u, 1048576u));

  auto* witness_cmd = app.add_subcommand(
      "witness", "Minimal end position with an alternating move sequence");
  witness_cmd->add_option("m", m, "Board rows")->required()->check(CLI::Range(1u, 1048576u));
  witness_cmd->add_option("n", n, "Board columns")->required()->check(CLI::Range(1u, 1048576u));

  auto* oeis_cmd = app.add_subcommand(
      "oeis-check", "Compare alpha(2,n) against OEIS sequence A319198");
  oeis_cmd->add_option("--n-max", n_max, "Check n = 1..n_max")
      ->check(CLI::Range(1u, 1048576u))
      ->capture_default_str();

  for (auto* sub : {alpha_cmd, table_cmd, poly_cmd, verify_cmd, witness_cmd, oeis_cmd}) {
    sub->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }

  try {
    if (*alpha_cmd) return cmd_alpha(m, n, config);
    if (*table_cmd) return cmd_table(max_m, max_n, config);
    if (*poly_cmd) return cmd_poly(kind, m, n, config);
    if (*verify_cmd) return cmd_verify(max_cells, config);
    if (*witness_cmd) return cmd_witness(m, n, config);
    if (*oeis_cmd) return cmd_oeis_check(n_max, config);
    std::cerr << "error: no command selected\n";
    return kUsageError;
  } catch (const ResourceError& e) {
    std::cerr << "resource error: " << e.what() << "\n";
    return kResourceError;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternalError;
  }
}
