#include "domineering/bipoly.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "domineering/errors.hpp"
#include "domineering/parallel.hpp"
#include "json.hpp"

namespace domineering {

namespace detail {
struct PolyAccess {
  static BivariatePoly from_canonical(std::vector<Term> terms) {
    BivariatePoly p;
    p.terms_ = std::move(terms);
    return p;
  }
};
}  // namespace detail

namespace {

// Ascending lexicographic order on (a, b): the canonical term order.
bool term_key_less(const Term& lhs, const Term& rhs) {
  return lhs.a != rhs.a ? lhs.a < rhs.a : lhs.b < rhs.b;
}

BivariatePoly make_canonical(std::vector<Term> terms) {
  return detail::PolyAccess::from_canonical(std::move(terms));
}

}  // namespace

// --- DegreeCap ---------------------------------------------------------------

std::string DegreeCap::to_string() const {
  if (!cap_) return "unbounded";
  return std::to_string(*cap_);
}

DegreeCap DegreeCap::from_string(const std::string& text) {
  if (text == "unbounded") return unbounded();
  unsigned value = 0;
  const char* first = text.data();
  const char* last = first + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) {
    throw ParseError("bad degree cap: \"" + text + "\"");
  }
  return bounded(value);
}

// --- BivariatePoly -----------------------------------------------------------

BivariatePoly BivariatePoly::monomial(unsigned a, unsigned b, mpz_class coeff) {
  if (sgn(coeff) < 0) throw std::invalid_argument("negative coefficient");
  BivariatePoly p;
  if (sgn(coeff) != 0) p.terms_.push_back(Term{a, b, std::move(coeff)});
  return p;
}

BivariatePoly BivariatePoly::from_terms(std::vector<Term> terms) {
  std::stable_sort(terms.begin(), terms.end(), term_key_less);
  std::vector<Term> merged;
  merged.reserve(terms.size());
  for (auto& t : terms) {
    if (!merged.empty() && merged.back().a == t.a && merged.back().b == t.b) {
      merged.back().coeff += t.coeff;
    } else {
      merged.push_back(std::move(t));
    }
  }
  std::size_t kept = 0;
  for (auto& t : merged) {
    if (sgn(t.coeff) < 0) throw std::invalid_argument("negative coefficient");
    if (sgn(t.coeff) != 0) merged[kept++] = std::move(t);
  }
  merged.resize(kept);
  return make_canonical(std::move(merged));
}

mpz_class BivariatePoly::coefficient(unsigned a, unsigned b) const {
  Term probe{a, b, 0};
  auto it = std::lower_bound(terms_.begin(), terms_.end(), probe, term_key_less);
  if (it != terms_.end() && it->a == a && it->b == b) return it->coeff;
  return 0;
}

mpz_class BivariatePoly::coefficient_sum() const {
  mpz_class total = 0;
  for (const auto& t : terms_) total += t.coeff;
  return total;
}

unsigned BivariatePoly::max_total_degree() const {
  unsigned best = 0;
  for (const auto& t : terms_) best = std::max(best, t.a + t.b);
  return best;
}

void BivariatePoly::add_term(unsigned a, unsigned b, const mpz_class& coeff) {
  if (sgn(coeff) == 0) return;
  Term probe{a, b, 0};
  auto it = std::lower_bound(terms_.begin(), terms_.end(), probe, term_key_less);
  if (it != terms_.end() && it->a == a && it->b == b) {
    it->coeff += coeff;
    if (sgn(it->coeff) < 0) throw std::invalid_argument("negative coefficient");
    if (sgn(it->coeff) == 0) terms_.erase(it);
  } else {
    if (sgn(coeff) < 0) throw std::invalid_argument("negative coefficient");
    terms_.insert(it, Term{a, b, coeff});
  }
}

BivariatePoly poly_add(const BivariatePoly& p, const BivariatePoly& q) {
  const auto& l = p.terms();
  const auto& r = q.terms();
  std::vector<Term> out;
  out.reserve(l.size() + r.size());
  std::size_t i = 0, j = 0;
  while (i < l.size() && j < r.size()) {
    if (term_key_less(l[i], r[j])) {
      out.push_back(l[i++]);
    } else if (term_key_less(r[j], l[i])) {
      out.push_back(r[j++]);
    } else {
      mpz_class c = l[i].coeff + r[j].coeff;
      if (sgn(c) != 0) out.push_back(Term{l[i].a, l[i].b, std::move(c)});
      ++i;
      ++j;
    }
  }
  for (; i < l.size(); ++i) out.push_back(l[i]);
  for (; j < r.size(); ++j) out.push_back(r[j]);
  return make_canonical(std::move(out));
}

BivariatePoly poly_mul(const BivariatePoly& p, const BivariatePoly& q,
                       const DegreeCap& cap) {
  if (p.is_zero() || q.is_zero()) return BivariatePoly::zero();

  // A monomial factor just shifts/scales the other side; the shifted term
  // list stays sorted, so no accumulation map is needed.
  if (p.term_count() == 1 || q.term_count() == 1) {
    const Term& mono = p.term_count() == 1 ? p.terms().front() : q.terms().front();
    const BivariatePoly& other = p.term_count() == 1 ? q : p;
    std::vector<Term> out;
    out.reserve(other.term_count());
    for (const auto& t : other.terms()) {
      unsigned a = t.a + mono.a;
      unsigned b = t.b + mono.b;
      if (!cap.keeps(a, b)) continue;
      out.push_back(Term{a, b, t.coeff * mono.coeff});
    }
    return make_canonical(std::move(out));
  }

  std::map<std::pair<unsigned, unsigned>, mpz_class> acc;
  for (const auto& lt : p.terms()) {
    for (const auto& rt : q.terms()) {
      unsigned a = lt.a + rt.a;
      unsigned b = lt.b + rt.b;
      if (!cap.keeps(a, b)) continue;
      acc[{a, b}] += lt.coeff * rt.coeff;
    }
  }
  std::vector<Term> out;
  out.reserve(acc.size());
  for (auto& [key, coeff] : acc) {
    if (sgn(coeff) != 0) out.push_back(Term{key.first, key.second, std::move(coeff)});
  }
  return make_canonical(std::move(out));
}

BivariatePoly scale_x(const BivariatePoly& p) {
  std::vector<Term> out = p.terms();
  for (auto& t : out) ++t.a;  // shifting a keeps the lex order intact
  return make_canonical(std::move(out));
}

BivariatePoly scale_y(const BivariatePoly& p) {
  std::vector<Term> out = p.terms();
  for (auto& t : out) ++t.b;
  return make_canonical(std::move(out));
}

BivariatePoly swap_vars(const BivariatePoly& p) {
  std::vector<Term> out = p.terms();
  for (auto& t : out) std::swap(t.a, t.b);
  std::sort(out.begin(), out.end(), term_key_less);
  return make_canonical(std::move(out));
}

BivariatePoly filter_terms(const BivariatePoly& p,
                           const std::set<int>& allowed_diffs) {
  std::vector<Term> out;
  for (const auto& t : p.terms()) {
    int diff = static_cast<int>(t.a) - static_cast<int>(t.b);
    if (allowed_diffs.count(diff)) out.push_back(t);
  }
  return make_canonical(std::move(out));
}

BivariatePoly truncate(const BivariatePoly& p, const DegreeCap& cap) {
  if (!cap.is_bounded()) return p;
  std::vector<Term> out;
  for (const auto& t : p.terms()) {
    if (cap.keeps(t.a, t.b)) out.push_back(t);
  }
  return make_canonical(std::move(out));
}

std::optional<MinDegree> min_total_degree(const BivariatePoly& p) {
  if (p.is_zero()) return std::nullopt;
  unsigned best = p.terms().front().a + p.terms().front().b;
  for (const auto& t : p.terms()) best = std::min(best, t.a + t.b);
  MinDegree result;
  result.degree = best;
  for (const auto& t : p.terms()) {
    if (t.a + t.b == best) result.witnesses.emplace_back(t.a, t.b);
  }
  return result;
}

// --- serialization -----------------------------------------------------------

std::string to_text(const BivariatePoly& p) {
  std::string out;
  for (const auto& t : p.terms()) {
    out += std::to_string(t.a);
    out += ' ';
    out += std::to_string(t.b);
    out += ' ';
    out += t.coeff.get_str();
    out += '\n';
  }
  return out;
}

namespace {

unsigned parse_exponent(const std::string& token, const std::string& where) {
  unsigned value = 0;
  const char* first = token.data();
  const char* last = first + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (token.empty() || ec != std::errc{} || ptr != last) {
    throw ParseError(where + ": bad exponent \"" + token + "\"");
  }
  return value;
}

mpz_class parse_coefficient(const std::string& token, const std::string& where) {
  if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos) {
    throw ParseError(where + ": bad coefficient \"" + token + "\"");
  }
  mpz_class c(token, 10);
  if (sgn(c) == 0) {
    throw ParseError(where + ": zero coefficient is not stored");
  }
  return c;
}

}  // namespace

BivariatePoly poly_from_text(const std::string& text) {
  std::vector<Term> terms;
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const std::string where = "line " + std::to_string(line_no);
    std::istringstream fields(line);
    std::string ta, tb, tc, extra;
    if (!(fields >> ta >> tb >> tc)) {
      throw ParseError(where + ": expected \"a b coefficient\"");
    }
    if (fields >> extra) {
      throw ParseError(where + ": trailing content \"" + extra + "\"");
    }
    Term t;
    t.a = parse_exponent(ta, where);
    t.b = parse_exponent(tb, where);
    t.coeff = parse_coefficient(tc, where);
    if (!terms.empty() && !term_key_less(terms.back(), t)) {
      throw ParseError(where + ": terms out of order");
    }
    terms.push_back(std::move(t));
  }
  return make_canonical(std::move(terms));
}

std::string to_json_text(const BivariatePoly& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& t : p.terms()) {
    terms.push_back({t.a, t.b, t.coeff.get_str()});
  }
  nlohmann::json doc;
  doc["terms"] = std::move(terms);
  return doc.dump();
}

BivariatePoly poly_from_json_text(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("bad polynomial JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("terms") || !doc["terms"].is_array()) {
    throw ParseError("polynomial JSON must be an object with a \"terms\" array");
  }
  std::vector<Term> terms;
  std::size_t index = 0;
  for (const auto& entry : doc["terms"]) {
    ++index;
    const std::string where = "term " + std::to_string(index);
    if (!entry.is_array() || entry.size() != 3 ||
        !entry[0].is_number_unsigned() || !entry[1].is_number_unsigned() ||
        !entry[2].is_string()) {
      throw ParseError(where + ": expected [a, b, \"coefficient\"]");
    }
    Term t;
    t.a = entry[0].get<unsigned>();
    t.b = entry[1].get<unsigned>();
    t.coeff = parse_coefficient(entry[2].get<std::string>(), where);
    if (!terms.empty() && !term_key_less(terms.back(), t)) {
      throw ParseError(where + ": terms out of order");
    }
    terms.push_back(std::move(t));
  }
  return make_canonical(std::move(terms));
}

std::ostream& operator<<(std::ostream& os, const BivariatePoly& p) {
  if (p.is_zero()) return os << "0";
  bool first = true;
  for (const auto& t : p.terms()) {
    if (!first) os << " + ";
    first = false;
    bool has_var = t.a > 0 || t.b > 0;
    if (!has_var || t.coeff != 1) os << t.coeff.get_str();
    if (t.a >= 1) {
      os << 'x';
      if (t.a > 1) os << '^' << t.a;
    }
    if (t.b >= 1) {
      os << 'y';
      if (t.b > 1) os << '^' << t.b;
    }
  }
  return os;
}

// --- PolyMatrix --------------------------------------------------------------

PolyMatrix::PolyMatrix(unsigned dim) : dim_(dim), rows_(dim) {
  if (dim == 0) throw std::invalid_argument("matrix dimension must be positive");
}

PolyMatrix PolyMatrix::identity(unsigned dim) {
  PolyMatrix m(dim);
  for (unsigned i = 0; i < dim; ++i) {
    m.rows_[i].push_back(RowEntry{i, BivariatePoly::one()});
  }
  return m;
}

std::size_t PolyMatrix::nonzero_count() const {
  std::size_t total = 0;
  for (const auto& row : rows_) total += row.size();
  return total;
}

const BivariatePoly& PolyMatrix::entry(unsigned i, unsigned j) const {
  static const BivariatePoly kZero;
  if (i < 1 || i > dim_ || j < 1 || j > dim_) {
    throw std::out_of_range("matrix index out of range");
  }
  const auto& row = rows_[i - 1];
  auto it = std::lower_bound(
      row.begin(), row.end(), j - 1,
      [](const RowEntry& e, unsigned col) { return e.col < col; });
  if (it != row.end() && it->col == j - 1) return it->poly;
  return kZero;
}

void PolyMatrix::set_entry(unsigned i, unsigned j, BivariatePoly p) {
  if (i < 1 || i > dim_ || j < 1 || j > dim_) {
    throw std::out_of_range("matrix index out of range");
  }
  auto& row = rows_[i - 1];
  unsigned col = j - 1;
  auto it = std::lower_bound(
      row.begin(), row.end(), col,
      [](const RowEntry& e, unsigned c) { return e.col < c; });
  if (it != row.end() && it->col == col) {
    if (p.is_zero()) {
      row.erase(it);
    } else {
      it->poly = std::move(p);
    }
  } else if (!p.is_zero()) {
    row.insert(it, RowEntry{col, std::move(p)});
  }
}

void PolyMatrix::append_entry_unchecked(unsigned i, unsigned j, BivariatePoly p) {
  if (p.is_zero()) return;
  rows_[i].push_back(RowEntry{j, std::move(p)});
}

PolyMatrix mat_add(const PolyMatrix& lhs, const PolyMatrix& rhs) {
  if (lhs.dim() != rhs.dim()) {
    throw std::invalid_argument("matrix dimension mismatch");
  }
  PolyMatrix out(lhs.dim());
  for (unsigned i = 0; i < lhs.dim(); ++i) {
    const auto& a = lhs.rows()[i];
    const auto& b = rhs.rows()[i];
    std::size_t p = 0, q = 0;
    while (p < a.size() && q < b.size()) {
      if (a[p].col < b[q].col) {
        out.append_entry_unchecked(i, a[p].col, a[p].poly);
        ++p;
      } else if (b[q].col < a[p].col) {
        out.append_entry_unchecked(i, b[q].col, b[q].poly);
        ++q;
      } else {
        out.append_entry_unchecked(i, a[p].col, poly_add(a[p].poly, b[q].poly));
        ++p;
        ++q;
      }
    }
    for (; p < a.size(); ++p) out.append_entry_unchecked(i, a[p].col, a[p].poly);
    for (; q < b.size(); ++q) out.append_entry_unchecked(i, b[q].col, b[q].poly);
  }
  return out;
}

PolyMatrix mat_mul(const PolyMatrix& lhs, const PolyMatrix& rhs,
                   const DegreeCap& cap, unsigned threads) {
  if (lhs.dim() != rhs.dim()) {
    throw std::invalid_argument("matrix dimension mismatch");
  }
  unsigned dim = lhs.dim();
  std::vector<std::vector<PolyMatrix::RowEntry>> result_rows(dim);
  parallel_for(dim, threads, [&](std::size_t i) {
    std::map<unsigned, BivariatePoly> acc;
    for (const auto& le : lhs.rows()[i]) {
      for (const auto& re : rhs.rows()[le.col]) {
        BivariatePoly prod = poly_mul(le.poly, re.poly, cap);
        if (prod.is_zero()) continue;
        auto it = acc.find(re.col);
        if (it == acc.end()) {
          acc.emplace(re.col, std::move(prod));
        } else {
          it->second = poly_add(it->second, prod);
        }
      }
    }
    auto& row = result_rows[i];
    row.reserve(acc.size());
    for (auto& [col, poly] : acc) {
      row.push_back(PolyMatrix::RowEntry{col, std::move(poly)});
    }
  });
  PolyMatrix out(dim);
  for (unsigned i = 0; i < dim; ++i) {
    for (auto& e : result_rows[i]) {
      out.append_entry_unchecked(i, e.col, std::move(e.poly));
    }
  }
  return out;
}

PolyMatrix mat_pow(const PolyMatrix& base, unsigned exponent,
                   const DegreeCap& cap, PowStrategy strategy,
                   unsigned threads) {
  if (exponent == 0) {
    throw std::invalid_argument("matrix power requires a positive exponent");
  }
  if (strategy == PowStrategy::RepeatedMultiply) {
    PolyMatrix result = base;
    for (unsigned k = 1; k < exponent; ++k) {
      result = mat_mul(result, base, cap, threads);
    }
    return result;
  }
  // Square-and-multiply over the truncated ring: with nonnegative
  // coefficients a truncated term can only have fed terms that are
  // themselves truncated, so both strategies agree term-for-term.
  PolyMatrix result = PolyMatrix::identity(base.dim());
  PolyMatrix square = base;
  unsigned e = exponent;
  while (true) {
    if (e & 1u) result = mat_mul(result, square, cap, threads);
    e >>= 1u;
    if (e == 0) break;
    square = mat_mul(square, square, cap, threads);
  }
  return result;
}

std::vector<BivariatePoly> mat_apply(const PolyMatrix& mat,
                                     const std::vector<BivariatePoly>& vec,
                                     const DegreeCap& cap, unsigned threads) {
  if (vec.size() != mat.dim()) {
    throw std::invalid_argument("matrix/vector dimension mismatch");
  }
  std::vector<BivariatePoly> out(mat.dim());
  parallel_for(mat.dim(), threads, [&](std::size_t i) {
    BivariatePoly sum;
    for (const auto& e : mat.rows()[i]) {
      if (vec[e.col].is_zero()) continue;
      sum = poly_add(sum, poly_mul(e.poly, vec[e.col], cap));
    }
    out[i] = std::move(sum);
  });
  return out;
}

}  // namespace domineering
