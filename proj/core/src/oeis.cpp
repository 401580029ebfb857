#include "domineering/oeis.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <string_view>
#include <unistd.h>

#include <httplib.h>
#include <nlohmann/json.hpp>

#include "domineering/alpha.hpp"
#include "domineering/errors.hpp"

namespace domineering {

namespace {

// alpha(2,n) for n = 1..11, shipped so the check runs fully offline.
constexpr std::string_view kEmbeddedBFile =
    "1 0\n2 1\n3 1\n4 3\n5 3\n6 4\n7 4\n8 4\n9 5\n10 5\n11 7\n";

long long parse_integer(std::string_view token, unsigned line_no) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParseError("b-file line " + std::to_string(line_no) +
                     ": bad integer '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace

BFile parse_b_file(const std::string& text) {
  BFile sequence;
  std::istringstream in(text);
  std::string line;
  unsigned line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;

    std::istringstream fields(line);
    std::string index_token, value_token, extra;
    fields >> index_token >> value_token;
    if (value_token.empty() || (fields >> extra)) {
      throw ParseError("b-file line " + std::to_string(line_no) +
                       ": expected 'index value'");
    }
    long long index = parse_integer(index_token, line_no);
    long long value = parse_integer(value_token, line_no);
    if (!sequence.emplace(index, value).second) {
      throw ParseError("b-file line " + std::to_string(line_no) +
                       ": duplicate index " + std::to_string(index));
    }
  }
  if (sequence.empty()) throw ParseError("b-file has no entries");
  return sequence;
}

std::string oeis_source_name(OeisSource source) {
  switch (source) {
    case OeisSource::Network: return "network";
    case OeisSource::Cache: return "cache";
    case OeisSource::Embedded: return "embedded";
  }
  throw std::logic_error("oeis_source_name: bad source");
}

bool OeisCheckReport::all_agree() const {
  return !entries.empty() &&
         std::all_of(entries.begin(), entries.end(),
                     [](const OeisEntry& e) { return e.agrees; });
}

namespace {

std::optional<std::string> http_get(const std::string& url, std::string& error) {
  auto scheme_end = url.find("://");
  if (scheme_end == std::string::npos) {
    error = "unsupported URL '" + url + "'";
    return std::nullopt;
  }
  auto path_start = url.find('/', scheme_end + 3);
  std::string base =
      url.substr(0, path_start == std::string::npos ? url.size() : path_start);
  std::string path = path_start == std::string::npos ? "/" : url.substr(path_start);
  try {
    httplib::Client client(base);
    client.set_connection_timeout(5, 0);
    client.set_read_timeout(10, 0);
    auto res = client.Get(path);
    if (!res) {
      error = "request failed: " + httplib::to_string(res.error());
      return std::nullopt;
    }
    if (res->status != 200) {
      error = "HTTP status " + std::to_string(res->status);
      return std::nullopt;
    }
    return res->body;
  } catch (const std::exception& e) {
    error = e.what();
    return std::nullopt;
  }
}

std::filesystem::path cache_path(const std::filesystem::path& dir) {
  return dir / (std::string(kOeisSequenceId) + "_bfile.txt");
}

void store_cache(const std::filesystem::path& dir, const std::string& body) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) return;
  auto final_path = cache_path(dir);
  auto tmp_path = final_path;
  tmp_path += ".tmp" + std::to_string(::getpid());
  {
    std::ofstream out(tmp_path, std::ios::binary | std::ios::trunc);
    out << body;
    if (!out) return;
  }
  std::filesystem::rename(tmp_path, final_path, ec);
}

// Best index shift: computed alpha(2,n) is compared with sequence(n + offset).
struct Alignment {
  long long offset = 0;
  unsigned matches = 0;
  unsigned overlap = 0;
};

Alignment align(const BFile& sequence, const std::vector<unsigned>& computed) {
  Alignment best;
  bool have = false;
  const long long n_max = static_cast<long long>(computed.size());
  const long long lo = sequence.begin()->first - n_max;
  const long long hi = sequence.rbegin()->first - 1;
  for (long long offset = lo; offset <= hi; ++offset) {
    Alignment candidate;
    candidate.offset = offset;
    for (long long n = 1; n <= n_max; ++n) {
      auto it = sequence.find(n + offset);
      if (it == sequence.end()) continue;
      ++candidate.overlap;
      if (it->second == static_cast<long long>(computed[n - 1])) {
        ++candidate.matches;
      }
    }
    if (candidate.overlap == 0) continue;
    if (!have || candidate.matches > best.matches ||
        (candidate.matches == best.matches && offset < best.offset)) {
      best = candidate;
      have = true;
    }
  }
  return best;
}

}  // namespace

OeisCheckReport oeis_check(const OeisOptions& options) {
  if (options.n_max == 0) {
    throw std::invalid_argument("oeis_check: n_max must be >= 1");
  }
  OeisCheckReport report;

  std::optional<BFile> sequence;
  if (!options.offline) {
    std::string error;
    if (auto body = http_get(options.url, error)) {
      try {
        sequence = parse_b_file(*body);
        report.source = OeisSource::Network;
        if (options.cache_dir) store_cache(*options.cache_dir, *body);
      } catch (const ParseError& e) {
        report.warnings.push_back(std::string("network b-file rejected: ") +
                                  e.what());
      }
    } else {
      report.warnings.push_back("fetch failed (" + error + ")");
    }
    if (!sequence && options.cache_dir) {
      std::ifstream in(cache_path(*options.cache_dir), std::ios::binary);
      if (in) {
        std::ostringstream body;
        body << in.rdbuf();
        try {
          sequence = parse_b_file(body.str());
          report.source = OeisSource::Cache;
        } catch (const ParseError& e) {
          report.warnings.push_back(std::string("cached b-file rejected: ") +
                                    e.what());
        }
      }
    }
    if (!sequence) {
      report.warnings.push_back("falling back to embedded values");
    }
  }
  if (!sequence) {
    sequence = parse_b_file(std::string(kEmbeddedBFile));
    report.source = OeisSource::Embedded;
  }

  AlphaOptions alpha_options;
  alpha_options.threads = options.threads;
  alpha_options.cache_dir = options.cache_dir;
  std::vector<unsigned> computed;
  computed.reserve(options.n_max);
  for (unsigned n = 1; n <= options.n_max; ++n) {
    computed.push_back(compute_alpha(2, n, alpha_options).alpha);
  }

  auto alignment = align(*sequence, computed);
  report.alignment_offset = alignment.offset;
  if (alignment.overlap == 0) {
    report.warnings.push_back("sequence and computed range do not overlap");
    return report;
  }
  for (unsigned n = 1; n <= options.n_max; ++n) {
    auto it = sequence->find(static_cast<long long>(n) + alignment.offset);
    if (it == sequence->end()) {
      report.warnings.push_back("no sequence value aligned with n=" +
                                std::to_string(n));
      continue;
    }
    OeisEntry entry;
    entry.n = n;
    entry.index = it->first;
    entry.oeis_value = it->second;
    entry.computed = computed[n - 1];
    entry.agrees = it->second == static_cast<long long>(entry.computed);
    report.entries.push_back(entry);
  }
  return report;
}

std::string render_oeis_text(const OeisCheckReport& report) {
  std::ostringstream out;
  out << "sequence " << report.sequence_id << " (source: "
      << oeis_source_name(report.source) << ")\n";
  out << "alignment: sequence index = n + " << report.alignment_offset << "\n";
  out << "  n  index  sequence  computed  verdict\n";
  for (const auto& entry : report.entries) {
    out << std::setw(3) << entry.n << "  " << std::setw(5) << entry.index
        << "  " << std::setw(8) << entry.oeis_value << "  " << std::setw(8)
        << entry.computed << "  " << (entry.agrees ? "ok" : "MISMATCH") << "\n";
  }
  for (const auto& warning : report.warnings) {
    out << "warning: " << warning << "\n";
  }
  if (report.all_agree()) {
    out << "all " << report.entries.size()
        << " entries agree (checked range only, not a proof)\n";
  } else {
    out << "DISAGREEMENT within the checked range\n";
  }
  return out.str();
}

std::string render_oeis_csv(const OeisCheckReport& report) {
  std::string out = "n,index,sequence,computed,agrees\n";
  for (const auto& entry : report.entries) {
    out += std::to_string(entry.n) + "," + std::to_string(entry.index) + "," +
           std::to_string(entry.oeis_value) + "," +
           std::to_string(entry.computed) + "," +
           (entry.agrees ? "true" : "false") + "\n";
  }
  return out;
}

std::string render_oeis_json(const OeisCheckReport& report) {
  nlohmann::json doc;
  doc["sequence_id"] = report.sequence_id;
  doc["source"] = oeis_source_name(report.source);
  doc["alignment_offset"] = report.alignment_offset;
  doc["all_agree"] = report.all_agree();
  doc["warnings"] = report.warnings;
  doc["entries"] = nlohmann::json::array();
  for (const auto& entry : report.entries) {
    doc["entries"].push_back({{"n", entry.n},
                              {"index", entry.index},
                              {"sequence", entry.oeis_value},
                              {"computed", entry.computed},
                              {"agrees", entry.agrees}});
  }
  return doc.dump();
}

}  // namespace domineering
