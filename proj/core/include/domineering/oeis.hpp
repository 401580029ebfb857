#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace domineering {

// OEIS sequence conjectured to equal alpha(2,n); checked empirically.
inline constexpr const char* kOeisSequenceId = "A319198";
inline constexpr const char* kOeisDefaultUrl =
    "https://oeis.org/A319198/b319198.txt";

// Parsed b-file: sequence index -> value.  Accepts blank lines and
// '#' comments; rejects malformed lines, duplicate indices, and files
// with no entries.
using BFile = std::map<long long, long long>;
BFile parse_b_file(const std::string& text);

enum class OeisSource { Network, Cache, Embedded };
std::string oeis_source_name(OeisSource source);  // "network"/"cache"/"embedded"

struct OeisOptions {
  unsigned n_max = 11;
  bool offline = false;
  std::optional<std::filesystem::path> cache_dir;
  std::string url = kOeisDefaultUrl;
  unsigned threads = 1;
};

struct OeisEntry {
  unsigned n = 0;             // board is 2 x n
  long long index = 0;        // sequence index compared against
  long long oeis_value = 0;
  unsigned computed = 0;      // alpha(2,n)
  bool agrees = false;

  bool operator==(const OeisEntry&) const = default;
};

struct OeisCheckReport {
  std::string sequence_id = kOeisSequenceId;
  OeisSource source = OeisSource::Embedded;
  // Sequence index = n + alignment_offset, chosen as the best empirical
  // match rather than assumed.
  long long alignment_offset = 0;
  std::vector<OeisEntry> entries;
  std::vector<std::string> warnings;

  bool all_agree() const;
};

// Compares computed alpha(2,n) for n = 1..n_max against the sequence.
// Data source order: network fetch (cached on disk), then the disk
// cache, then embedded values; the offline flag goes straight to the
// embedded values.  Agreement is reported per entry, never asserted as
// a proof of the conjectured identity.
OeisCheckReport oeis_check(const OeisOptions& options = {});

std::string render_oeis_text(const OeisCheckReport& report);
std::string render_oeis_csv(const OeisCheckReport& report);
std::string render_oeis_json(const OeisCheckReport& report);

}  // namespace domineering
