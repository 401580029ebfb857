#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace domineering {

// Truncation bound on the total degree a+b of kept terms.
// With nonnegative coefficients there is no cancellation, so truncating a
// product never perturbs the surviving low-degree terms.
class DegreeCap {
 public:
  static DegreeCap unbounded() { return DegreeCap{}; }
  static DegreeCap bounded(unsigned cap) {
    DegreeCap c;
    c.cap_ = cap;
    return c;
  }

  bool is_bounded() const { return cap_.has_value(); }
  unsigned value() const { return *cap_; }
  bool keeps(unsigned a, unsigned b) const { return !cap_ || a + b <= *cap_; }
  bool operator==(const DegreeCap&) const = default;

  std::string to_string() const;  // "unbounded" or the decimal bound
  static DegreeCap from_string(const std::string& text);

 private:
  std::optional<unsigned> cap_;
};

// One x^a y^b term. a counts vertical dominoes, b horizontal ones.
struct Term {
  unsigned a = 0;
  unsigned b = 0;
  mpz_class coeff;

  bool operator==(const Term&) const = default;
};

struct MinDegree {
  unsigned degree = 0;
  std::vector<std::pair<unsigned, unsigned>> witnesses;  // all (a,b) with a+b == degree

  bool operator==(const MinDegree&) const = default;
};

class BivariatePoly;

namespace detail {
struct PolyAccess;  // implementation-side factory for already-canonical term lists
}

// Sparse bivariate polynomial with arbitrary-precision nonnegative
// coefficients. Terms are kept sorted ascending-lex by (a, b) and no zero
// coefficient is ever stored, so equal polynomials are structurally equal and
// serialize byte-identically.
class BivariatePoly {
 public:
  BivariatePoly() = default;  // zero polynomial

  static BivariatePoly zero() { return {}; }
  static BivariatePoly one() { return monomial(0, 0); }
  static BivariatePoly monomial(unsigned a, unsigned b, mpz_class coeff = 1);
  // Canonicalizes: merges duplicates, drops zeros. Rejects negative coefficients.
  static BivariatePoly from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  mpz_class coefficient(unsigned a, unsigned b) const;
  // Value at x = y = 1.
  mpz_class coefficient_sum() const;
  unsigned max_total_degree() const;  // 0 for the zero polynomial

  void add_term(unsigned a, unsigned b, const mpz_class& coeff);

  bool operator==(const BivariatePoly&) const = default;

 private:
  friend struct detail::PolyAccess;

  std::vector<Term> terms_;
};

BivariatePoly poly_add(const BivariatePoly& p, const BivariatePoly& q);
BivariatePoly poly_mul(const BivariatePoly& p, const BivariatePoly& q,
                       const DegreeCap& cap = DegreeCap::unbounded());

inline BivariatePoly operator+(const BivariatePoly& p, const BivariatePoly& q) {
  return poly_add(p, q);
}
inline BivariatePoly operator*(const BivariatePoly& p, const BivariatePoly& q) {
  return poly_mul(p, q);
}

// Multiply by x (every (a,b) -> (a+1,b)) resp. by y.
BivariatePoly scale_x(const BivariatePoly& p);
BivariatePoly scale_y(const BivariatePoly& p);
// Exchange the roles of x and y: (a,b) -> (b,a).
BivariatePoly swap_vars(const BivariatePoly& p);
// Keep exactly the terms whose signed difference a-b lies in allowed_diffs.
BivariatePoly filter_terms(const BivariatePoly& p, const std::set<int>& allowed_diffs);
// Drop terms with a+b above the cap.
BivariatePoly truncate(const BivariatePoly& p, const DegreeCap& cap);
// Minimum a+b over stored terms plus every pair attaining it; empty for zero.
std::optional<MinDegree> min_total_degree(const BivariatePoly& p);

// One term per line, "a b coefficient", ascending-lex; empty text = zero.
std::string to_text(const BivariatePoly& p);
BivariatePoly poly_from_text(const std::string& text);  // strict: rejects non-canonical input
// {"terms": [[a, b, "coeff"], ...]} in the same canonical order.
std::string to_json_text(const BivariatePoly& p);
BivariatePoly poly_from_json_text(const std::string& text);

std::ostream& operator<<(std::ostream& os, const BivariatePoly& p);

// Square matrix over BivariatePoly. Storage is sparse (absent entries are the
// zero polynomial); the public entry accessors are 1-based.
class PolyMatrix {
 public:
  struct RowEntry {
    unsigned col = 0;  // 0-based in storage
    BivariatePoly poly;

    bool operator==(const RowEntry&) const = default;
  };

  explicit PolyMatrix(unsigned dim);  // zero matrix
  static PolyMatrix identity(unsigned dim);

  unsigned dim() const { return dim_; }
  std::size_t nonzero_count() const;

  // 1-based; returns the zero polynomial for absent entries.
  const BivariatePoly& entry(unsigned i, unsigned j) const;
  void set_entry(unsigned i, unsigned j, BivariatePoly p);

  // Raw sparse rows, 0-based columns, sorted ascending, no zero entries.
  const std::vector<std::vector<RowEntry>>& rows() const { return rows_; }

  // Appends to row i (0-based); columns must arrive in ascending order.
  void append_entry_unchecked(unsigned i, unsigned j, BivariatePoly p);

  bool operator==(const PolyMatrix&) const = default;

 private:
  unsigned dim_;
  std::vector<std::vector<RowEntry>> rows_;
};

enum class PowStrategy { SquareAndMultiply, RepeatedMultiply };

PolyMatrix mat_add(const PolyMatrix& lhs, const PolyMatrix& rhs);
PolyMatrix mat_mul(const PolyMatrix& lhs, const PolyMatrix& rhs,
                   const DegreeCap& cap = DegreeCap::unbounded(), unsigned threads = 1);
PolyMatrix mat_pow(const PolyMatrix& base, unsigned exponent,
                   const DegreeCap& cap = DegreeCap::unbounded(),
                   PowStrategy strategy = PowStrategy::SquareAndMultiply,
                   unsigned threads = 1);
// Matrix times column vector.
std::vector<BivariatePoly> mat_apply(const PolyMatrix& mat,
                                     const std::vector<BivariatePoly>& vec,
                                     const DegreeCap& cap = DegreeCap::unbounded(),
                                     unsigned threads = 1);

}  // namespace domineering
