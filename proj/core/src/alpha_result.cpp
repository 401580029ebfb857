#include "domineering/alpha_result.hpp"

#include <algorithm>
#include <stdexcept>

#include "domineering/errors.hpp"
#include "json.hpp"

namespace domineering {

char end_kind_letter(EndKind kind) {
  return kind == EndKind::LeftEnd ? 'L' : 'R';
}

EndKind end_kind_from_letter(char letter) {
  if (letter == 'L') return EndKind::LeftEnd;
  if (letter == 'R') return EndKind::RightEnd;
  throw ParseError(std::string("bad end-kind letter '") + letter + "'");
}

EndKind transpose(EndKind kind) {
  return kind == EndKind::LeftEnd ? EndKind::RightEnd : EndKind::LeftEnd;
}

const std::set<int>& alternation_diffs(EndKind kind) {
  static const std::set<int> left{0, -1};
  static const std::set<int> right{0, 1};
  return kind == EndKind::LeftEnd ? left : right;
}

std::optional<AlphaResult> alpha_from_polys(unsigned m, unsigned n,
                                            const BivariatePoly& left_end,
                                            const BivariatePoly& right_end) {
  struct Candidate {
    EndKind kind;
    MinDegree min;
  };
  std::vector<Candidate> candidates;
  for (EndKind kind : {EndKind::LeftEnd, EndKind::RightEnd}) {
    const BivariatePoly& poly =
        kind == EndKind::LeftEnd ? left_end : right_end;
    auto min = min_total_degree(filter_terms(poly, alternation_diffs(kind)));
    if (min) candidates.push_back(Candidate{kind, std::move(*min)});
  }
  if (candidates.empty()) return std::nullopt;

  unsigned best = candidates.front().min.degree;
  for (const auto& c : candidates) best = std::min(best, c.min.degree);

  AlphaResult result;
  result.m = m;
  result.n = n;
  result.alpha = best;
  for (auto& c : candidates) {
    if (c.min.degree != best) continue;
    result.provenance.insert(c.kind);
    result.witnesses[c.kind] = std::move(c.min.witnesses);
  }
  return result;
}

AlphaResult transpose(const AlphaResult& result) {
  AlphaResult out;
  out.m = result.n;
  out.n = result.m;
  out.alpha = result.alpha;
  for (EndKind kind : result.provenance) out.provenance.insert(transpose(kind));
  for (const auto& [kind, pairs] : result.witnesses) {
    std::vector<std::pair<unsigned, unsigned>> swapped;
    swapped.reserve(pairs.size());
    for (auto [a, b] : pairs) swapped.emplace_back(b, a);
    std::sort(swapped.begin(), swapped.end());
    out.witnesses[transpose(kind)] = std::move(swapped);
  }
  return out;
}

std::string provenance_suffix(const std::set<EndKind>& provenance) {
  std::string suffix;
  for (EndKind kind : provenance) suffix += end_kind_letter(kind);
  return suffix;
}

std::string to_json_text(const AlphaResult& result) {
  nlohmann::json doc;
  doc["m"] = result.m;
  doc["n"] = result.n;
  doc["alpha"] = result.alpha;
  nlohmann::json prov = nlohmann::json::array();
  for (EndKind kind : result.provenance) {
    prov.push_back(std::string(1, end_kind_letter(kind)));
  }
  doc["provenance"] = std::move(prov);
  nlohmann::json wit = nlohmann::json::object();
  for (const auto& [kind, pairs] : result.witnesses) {
    nlohmann::json list = nlohmann::json::array();
    for (auto [a, b] : pairs) list.push_back({a, b});
    wit[std::string(1, end_kind_letter(kind))] = std::move(list);
  }
  doc["witnesses"] = std::move(wit);
  return doc.dump();
}

}  // namespace domineering
