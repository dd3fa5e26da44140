#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace cubicfields {

/// OEIS b-file: one "n a(n)" pair per line, n contiguous and increasing.
struct BFile {
  std::string id;  // "A" followed by six digits
  std::vector<std::pair<long, mpz_class>> rows;
};

/// "A" + exactly six digits.
bool is_valid_sequence_id(std::string_view id);

/// Lines starting with '#' and blank lines are skipped. Throws BFileFormatError.
BFile parse_bfile(std::string_view text, std::string id);

/// "n a(n)\n" per row.
std::string format_bfile(const BFile& bfile);

/// Rows (offset, terms[0]), (offset+1, terms[1]), ...
BFile make_bfile(std::string id, long offset, const std::vector<mpz_class>& terms);

struct FetchOptions {
  std::filesystem::path cache_dir;
  /// Searched after the cache and the network; empty disables it.
  std::filesystem::path fixture_dir;
  bool offline = false;
  int timeout_seconds = 10;
};

/// Directory named by CUBICFIELDS_OEIS_CACHE, else ~/.cache/cubicfields/oeis.
std::filesystem::path default_cache_dir();
/// Directory named by CUBICFIELDS_FIXTURE_DIR, else the bundled data/oeis.
std::filesystem::path default_fixture_dir();

/// Cache, then https://oeis.org/<id>/b<digits>.txt (cached on success via
/// write-then-rename), then the fixture directory. Throws OfflineMiss when all
/// three miss, BFileFormatError on malformed content and std::invalid_argument
/// on a malformed id.
BFile fetch_bfile(const std::string& id, const FetchOptions& options);

}  // namespace cubicfields
