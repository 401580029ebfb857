#include "domineering/transfer.hpp"

#include <unistd.h>

#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "domineering/errors.hpp"
#include "json.hpp"

namespace domineering {

namespace {

// A cell of the block pattern assembling level q+1 from level q: the sum of
// the referenced level matrices, each optionally multiplied by x or y.
struct BlockRef {
  unsigned src;  // index into the three level matrices
  enum class Scale { None, X, Y } scale = Scale::None;
};
using BlockCell = std::vector<BlockRef>;
using BlockPattern = std::vector<std::vector<BlockCell>>;

BivariatePoly scaled(const BivariatePoly& p, BlockRef::Scale scale,
                     const DegreeCap& cap) {
  switch (scale) {
    case BlockRef::Scale::None:
      return truncate(p, cap);
    case BlockRef::Scale::X:
      return truncate(scale_x(p), cap);
    case BlockRef::Scale::Y:
      return truncate(scale_y(p), cap);
  }
  return {};
}

// Builds the next-level matrix of dimension blocks*d from the current level's
// matrices of dimension d according to the pattern.
PolyMatrix assemble(const BlockPattern& pattern,
                    const std::vector<PolyMatrix>& level, unsigned d,
                    const DegreeCap& cap) {
  unsigned blocks = static_cast<unsigned>(pattern.size());
  PolyMatrix out(blocks * d);
  for (unsigned bi = 0; bi < blocks; ++bi) {
    for (unsigned r = 0; r < d; ++r) {
      for (unsigned bj = 0; bj < blocks; ++bj) {
        const BlockCell& cell = pattern[bi][bj];
        if (cell.empty()) continue;
        if (cell.size() == 1) {
          for (const auto& e : level[cell[0].src].rows()[r]) {
            out.append_entry_unchecked(bi * d + r, bj * d + e.col,
                                       scaled(e.poly, cell[0].scale, cap));
          }
          continue;
        }
        // Sum of two level matrices: merge the sparse rows by column.
        const auto& ra = level[cell[0].src].rows()[r];
        const auto& rb = level[cell[1].src].rows()[r];
        std::size_t i = 0, j = 0;
        while (i < ra.size() || j < rb.size()) {
          if (j == rb.size() || (i < ra.size() && ra[i].col < rb[j].col)) {
            out.append_entry_unchecked(bi * d + r, bj * d + ra[i].col,
                                       scaled(ra[i].poly, cell[0].scale, cap));
            ++i;
          } else if (i == ra.size() || rb[j].col < ra[i].col) {
            out.append_entry_unchecked(bi * d + r, bj * d + rb[j].col,
                                       scaled(rb[j].poly, cell[1].scale, cap));
            ++j;
          } else {
            out.append_entry_unchecked(
                bi * d + r, bj * d + ra[i].col,
                poly_add(scaled(ra[i].poly, cell[0].scale, cap),
                         scaled(rb[j].poly, cell[1].scale, cap)));
            ++i;
            ++j;
          }
        }
      }
    }
  }
  return out;
}

const BlockRef kM0{0, BlockRef::Scale::None};
const BlockRef kM1{1, BlockRef::Scale::None};
const BlockRef kM2{2, BlockRef::Scale::None};
const BlockRef kXM0{0, BlockRef::Scale::X};
const BlockRef kYM0{0, BlockRef::Scale::Y};

// Right-end recurrence: three 2x2 block patterns shared by both families.
const std::vector<BlockPattern>& right_patterns() {
  static const std::vector<BlockPattern> patterns = {
      {{BlockCell{kM1, kM2}, BlockCell{kXM0}}, {BlockCell{kM0}, BlockCell{}}},
      {{BlockCell{kM2}, BlockCell{kXM0}}, {BlockCell{kM0}, BlockCell{}}},
      {{BlockCell{kYM0}, BlockCell{}}, {BlockCell{}, BlockCell{}}},
  };
  return patterns;
}

// Maximal recurrence: three 3x3 block patterns shared by both families.
const std::vector<BlockPattern>& maximal_patterns() {
  static const std::vector<BlockPattern> patterns = {
      {{BlockCell{kM2}, BlockCell{kM2}, BlockCell{kXM0}},
       {BlockCell{kM1}, BlockCell{}, BlockCell{}},
       {BlockCell{kM0}, BlockCell{kM0}, BlockCell{}}},
      {{BlockCell{kM2}, BlockCell{kM2}, BlockCell{kXM0}},
       {BlockCell{}, BlockCell{}, BlockCell{}},
       {BlockCell{kM0}, BlockCell{kM0}, BlockCell{}}},
      {{BlockCell{kYM0}, BlockCell{kYM0}, BlockCell{}},
       {BlockCell{}, BlockCell{}, BlockCell{}},
       {BlockCell{}, BlockCell{}, BlockCell{}}},
  };
  return patterns;
}

std::vector<PolyMatrix> base_level(unsigned plain_one, unsigned count) {
  std::vector<PolyMatrix> level;
  for (unsigned k = 0; k < count; ++k) {
    PolyMatrix m(1);
    if (k == plain_one) m.set_entry(1, 1, BivariatePoly::one());
    level.push_back(std::move(m));
  }
  return level;
}

template <typename Level>
Level build_level(unsigned q, const std::vector<BlockPattern>& patterns,
                  unsigned branching, unsigned max_depth, const DegreeCap& cap) {
  if (q > max_depth) {
    throw ResourceError("column depth " + std::to_string(q) +
                        " exceeds the supported maximum of " +
                        std::to_string(max_depth));
  }
  Level level;
  level.q = 0;
  // Family 0 starts as [1] unprimed; family 1 as [1] primed.
  level.plain = base_level(0, 3);
  level.primed = base_level(1, 3);
  unsigned dim = 1;
  for (unsigned depth = 0; depth < q; ++depth) {
    std::vector<PolyMatrix> next_plain, next_primed;
    for (unsigned k = 0; k < 3; ++k) {
      next_plain.push_back(assemble(patterns[k], level.plain, dim, cap));
      next_primed.push_back(assemble(patterns[k], level.primed, dim, cap));
    }
    level.plain = std::move(next_plain);
    level.primed = std::move(next_primed);
    level.q = depth + 1;
    dim *= branching;
  }
  return level;
}

// Column vector e1, then m sparse matrix applications; entry (1,1) of the
// m-th power is the first slot. Avoids materializing the dense power.
std::vector<BivariatePoly> power_times_e1(const PolyMatrix& mat, unsigned m,
                                          const DegreeCap& cap,
                                          unsigned threads) {
  std::vector<BivariatePoly> v(mat.dim());
  v[0] = BivariatePoly::one();
  for (unsigned k = 0; k < m; ++k) {
    v = mat_apply(mat, v, cap, threads);
  }
  return v;
}

void check_dims(unsigned m, unsigned n) {
  if (m == 0 || n == 0) {
    throw std::invalid_argument("board dimensions must be positive");
  }
}

// The width-1 board recurrence: the (1, 1) entries of the right-end level
// matrices close under the block recurrence (the leading block occupies the
// top-left corner), so height-1 boards never need the exponential matrices.
BivariatePoly right_end_poly_one_row(unsigned n, const DegreeCap& cap) {
  BivariatePoly r0 = BivariatePoly::one(), r1, r2;
  BivariatePoly p0, p1 = BivariatePoly::one(), p2;
  for (unsigned q = 0; q < n; ++q) {
    BivariatePoly next_r0 = poly_add(r1, r2);
    BivariatePoly next_r1 = r2;
    BivariatePoly next_r2 = scale_y(r0);
    BivariatePoly next_p0 = poly_add(p1, p2);
    BivariatePoly next_p1 = p2;
    BivariatePoly next_p2 = scale_y(p0);
    r0 = std::move(next_r0);
    r1 = std::move(next_r1);
    r2 = std::move(next_r2);
    p0 = std::move(next_p0);
    p1 = std::move(next_p1);
    p2 = std::move(next_p2);
  }
  return truncate(poly_add(r0, p0), cap);
}

BivariatePoly compute_right_end(unsigned m, unsigned n,
                                const TransferOptions& opts) {
  if (m == 1) return right_end_poly_one_row(n, opts.cap);
  if (n > opts.max_end_width) {
    throw ResourceError("board width " + std::to_string(n) +
                        " exceeds the end-polynomial width limit of " +
                        std::to_string(opts.max_end_width));
  }
  RightLevel level = build_right_level(n, opts.cap, opts.threads);
  PolyMatrix sum = mat_add(level.plain[0], level.primed[0]);
  auto v = power_times_e1(sum, m, opts.cap, opts.threads);
  return v[0];
}

BivariatePoly compute_maximal(unsigned m, unsigned n,
                              const TransferOptions& opts) {
  if (n > opts.max_maximal_width) {
    if (m <= opts.max_maximal_width) {
      TransferOptions flipped = opts;
      flipped.cache_dir.reset();  // the outer call owns caching
      return swap_vars(compute_maximal(n, m, flipped));
    }
    throw ResourceError("board width " + std::to_string(n) +
                        " exceeds the maximal-polynomial width limit of " +
                        std::to_string(opts.max_maximal_width));
  }
  MaximalLevel level = build_maximal_level(n, opts.cap, opts.threads);
  PolyMatrix sum = mat_add(level.plain[0], level.primed[0]);
  auto v = power_times_e1(sum, m, opts.cap, opts.threads);

  // Sum the vector slots whose 0-based index has only ternary digits 0 and 1:
  // those are the rows the closing column-state sum ranges over.
  std::vector<unsigned> rows{0};
  unsigned power = 1;
  for (unsigned i = 0; i < n; ++i) {
    std::size_t count = rows.size();
    for (std::size_t j = 0; j < count; ++j) rows.push_back(rows[j] + power);
    power *= 3;
  }
  BivariatePoly out;
  for (unsigned row : rows) {
    if (row >= sum.dim()) {
      throw std::logic_error("column-state row index out of range");
    }
    out = poly_add(out, v[row]);
  }
  return out;
}

BivariatePoly with_cache(const EndPolySpec& spec, const TransferOptions& opts,
                         BivariatePoly (*compute)(unsigned, unsigned,
                                                  const TransferOptions&)) {
  if (opts.cache_dir) {
    if (auto hit = cache_lookup(*opts.cache_dir, spec)) return *hit;
  }
  BivariatePoly result = compute(spec.m, spec.n, opts);
  if (opts.cache_dir) cache_store(*opts.cache_dir, spec, result);
  return result;
}

}  // namespace

std::string poly_kind_name(PolyKind kind) {
  switch (kind) {
    case PolyKind::LeftEnd:
      return "left";
    case PolyKind::RightEnd:
      return "right";
    case PolyKind::Maximal:
      return "maximal";
  }
  return {};
}

PolyKind poly_kind_from_name(const std::string& name) {
  if (name == "left") return PolyKind::LeftEnd;
  if (name == "right") return PolyKind::RightEnd;
  if (name == "maximal") return PolyKind::Maximal;
  throw ParseError("unknown polynomial kind \"" + name + "\"");
}

RightLevel build_right_level(unsigned q, const DegreeCap& cap,
                             unsigned threads) {
  (void)threads;  // assembly is linear in the output; no parallel win yet
  return build_level<RightLevel>(q, right_patterns(), 2, 13, cap);
}

MaximalLevel build_maximal_level(unsigned q, const DegreeCap& cap,
                                 unsigned threads) {
  (void)threads;
  return build_level<MaximalLevel>(q, maximal_patterns(), 3, 10, cap);
}

BivariatePoly right_end_poly(unsigned m, unsigned n,
                             const TransferOptions& opts) {
  check_dims(m, n);
  return with_cache(EndPolySpec{PolyKind::RightEnd, m, n, opts.cap}, opts,
                    &compute_right_end);
}

BivariatePoly left_end_poly(unsigned m, unsigned n,
                            const TransferOptions& opts) {
  check_dims(m, n);
  EndPolySpec spec{PolyKind::LeftEnd, m, n, opts.cap};
  if (opts.cache_dir) {
    if (auto hit = cache_lookup(*opts.cache_dir, spec)) return *hit;
  }
  TransferOptions inner = opts;
  inner.cache_dir.reset();
  BivariatePoly result = swap_vars(compute_right_end(n, m, inner));
  if (opts.cache_dir) cache_store(*opts.cache_dir, spec, result);
  return result;
}

BivariatePoly maximal_poly(unsigned m, unsigned n,
                           const TransferOptions& opts) {
  check_dims(m, n);
  return with_cache(EndPolySpec{PolyKind::Maximal, m, n, opts.cap}, opts,
                    &compute_maximal);
}

BivariatePoly end_poly(PolyKind kind, unsigned m, unsigned n,
                       const TransferOptions& opts) {
  switch (kind) {
    case PolyKind::LeftEnd:
      return left_end_poly(m, n, opts);
    case PolyKind::RightEnd:
      return right_end_poly(m, n, opts);
    case PolyKind::Maximal:
      return maximal_poly(m, n, opts);
  }
  throw std::logic_error("unhandled polynomial kind");
}

// --- cache -------------------------------------------------------------------

std::string cache_file_name(const EndPolySpec& spec) {
  return poly_kind_name(spec.kind) + "_" + std::to_string(spec.m) + "x" +
         std::to_string(spec.n) + "_" + spec.cap.to_string() + ".poly.json";
}

std::optional<BivariatePoly> cache_lookup(const std::filesystem::path& dir,
                                          const EndPolySpec& spec) {
  std::filesystem::path file = dir / cache_file_name(spec);
  std::ifstream in(file);
  if (!in) return std::nullopt;
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    nlohmann::json doc = nlohmann::json::parse(buffer.str());
    if (!doc.is_object() || doc.value("format", 0) != 1) return std::nullopt;
    if (doc.value("kind", "") != poly_kind_name(spec.kind) ||
        doc.value("m", 0u) != spec.m || doc.value("n", 0u) != spec.n ||
        doc.value("cap", "") != spec.cap.to_string()) {
      return std::nullopt;
    }
    nlohmann::json terms;
    terms["terms"] = doc.at("terms");
    return poly_from_json_text(terms.dump());
  } catch (const std::exception& e) {
    std::cerr << "warning: ignoring unreadable cache entry " << file << ": "
              << e.what() << "\n";
    return std::nullopt;
  }
}

void cache_store(const std::filesystem::path& dir, const EndPolySpec& spec,
                 const BivariatePoly& poly) {
  std::filesystem::create_directories(dir);
  nlohmann::json doc = nlohmann::json::parse(to_json_text(poly));
  doc["format"] = 1;
  doc["kind"] = poly_kind_name(spec.kind);
  doc["m"] = spec.m;
  doc["n"] = spec.n;
  doc["cap"] = spec.cap.to_string();

  std::filesystem::path final_path = dir / cache_file_name(spec);
  std::filesystem::path temp_path =
      final_path.string() + ".tmp" + std::to_string(::getpid());
  {
    std::ofstream out(temp_path);
    if (!out) {
      throw ResourceError("cannot write cache file " + temp_path.string());
    }
    out << doc.dump() << "\n";
  }
  std::filesystem::rename(temp_path, final_path);
}

}  // namespace domineering
