#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "domineering/alpha_result.hpp"
#include "domineering/bipoly.hpp"

namespace domineering {

// Which generating polynomial is requested.
enum class PolyKind { LeftEnd, RightEnd, Maximal };

std::string poly_kind_name(PolyKind kind);  // "left", "right", "maximal"
PolyKind poly_kind_from_name(const std::string& name);

struct TransferOptions {
  DegreeCap cap = DegreeCap::unbounded();
  unsigned threads = 1;
  // Board width accepted by the column-recurrence matrices. Right/Left-end
  // matrices have dimension 2^n, maximal ones 3^n; the limits keep peak
  // memory at desk scale. Boards wider than the maximal limit fall back to
  // the transposed orientation when the other side fits.
  unsigned max_end_width = 11;
  unsigned max_maximal_width = 7;
  std::optional<std::filesystem::path> cache_dir;
};

// One level of the column-extension recurrence for Right-end counting: six
// matrices of dimension 2^q, three per family. Family 0 is the one whose
// (1, 1) entry (after summing with the primed family and raising to the
// board-height power) yields the Right-end polynomial.
struct RightLevel {
  unsigned q = 0;
  std::vector<PolyMatrix> plain;   // size 3
  std::vector<PolyMatrix> primed;  // size 3
};

RightLevel build_right_level(unsigned q,
                             const DegreeCap& cap = DegreeCap::unbounded(),
                             unsigned threads = 1);

// Same shape for maximal-position counting, with dimension 3^q.
struct MaximalLevel {
  unsigned q = 0;
  std::vector<PolyMatrix> plain;
  std::vector<PolyMatrix> primed;
};

MaximalLevel build_maximal_level(unsigned q,
                                 const DegreeCap& cap = DegreeCap::unbounded(),
                                 unsigned threads = 1);

// Generating polynomials of end positions on an m x n board: coefficient of
// x^a y^b counts positions with a vertical and b horizontal dominoes whose
// stuck player matches the kind. Results are exact up to the degree cap.
BivariatePoly right_end_poly(unsigned m, unsigned n,
                             const TransferOptions& opts = {});
BivariatePoly left_end_poly(unsigned m, unsigned n,
                            const TransferOptions& opts = {});
BivariatePoly maximal_poly(unsigned m, unsigned n,
                           const TransferOptions& opts = {});

// Kind-dispatching convenience used by the CLI and the verifier.
BivariatePoly end_poly(PolyKind kind, unsigned m, unsigned n,
                       const TransferOptions& opts = {});

// On-disk memoization of computed polynomials, keyed by kind, board and cap.
struct EndPolySpec {
  PolyKind kind = PolyKind::RightEnd;
  unsigned m = 0;
  unsigned n = 0;
  DegreeCap cap;

  bool operator==(const EndPolySpec&) const = default;
};

// "<kind>_<m>x<n>_<cap>.poly.json"
std::string cache_file_name(const EndPolySpec& spec);

// Absent on missing file, key mismatch, or unreadable content (the latter
// warns on stderr); never throws for bad cache state.
std::optional<BivariatePoly> cache_lookup(const std::filesystem::path& dir,
                                          const EndPolySpec& spec);

// Atomic: writes a temporary file and renames it into place.
void cache_store(const std::filesystem::path& dir, const EndPolySpec& spec,
                 const BivariatePoly& poly);

}  // namespace domineering
