#include "cubicfields/bfile.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "cubicfields/errors.hpp"
#include "oeis_http.hpp"

namespace cubicfields {

namespace {

std::string bfile_name(const std::string& id) { return "b" + id.substr(1) + ".txt"; }

bool read_file(const std::filesystem::path& path, std::string& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream buffer;
  buffer << in.rdbuf();
  out = buffer.str();
  return true;
}

void write_atomically(const std::filesystem::path& target, const std::string& content) {
  std::filesystem::create_directories(target.parent_path());
  std::random_device rd;
  const auto tmp = target.parent_path() / (target.filename().string() + ".tmp." + std::to_string(rd()));
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << content;
    if (!out) {
      std::filesystem::remove(tmp);
      return;
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, target, ec);
  if (ec) std::filesystem::remove(tmp, ec);
}

}  // namespace

bool is_valid_sequence_id(std::string_view id) {
  if (id.size() != 7 || id[0] != 'A') return false;
  for (std::size_t i = 1; i < id.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(id[i]))) return false;
  }
  return true;
}

BFile parse_bfile(std::string_view text, std::string id) {
  BFile out{std::move(id), {}};
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string line(text.substr(start, end - start));
    start = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;

    std::istringstream fields(line);
    std::string index_text;
    std::string value_text;
    std::string extra;
    fields >> index_text >> value_text;
    if (value_text.empty() || (fields >> extra)) {
      throw Error(ErrorCode::BFileFormatError, "line " + std::to_string(line_no) + ": expected 'n a(n)'");
    }
    long index = 0;
    mpz_class value;
    try {
      std::size_t used = 0;
      index = std::stol(index_text, &used);
      if (used != index_text.size()) throw std::invalid_argument("index");
      if (value.set_str(value_text, 10) != 0) throw std::invalid_argument("value");
    } catch (const std::exception&) {
      throw Error(ErrorCode::BFileFormatError, "line " + std::to_string(line_no) + ": non-integer field");
    }
    if (!out.rows.empty() && index != out.rows.back().first + 1) {
      throw Error(ErrorCode::BFileFormatError,
                  "line " + std::to_string(line_no) + ": index " + std::to_string(index) + " is not contiguous");
    }
    out.rows.emplace_back(index, std::move(value));
  }
  return out;
}

std::string format_bfile(const BFile& bfile) {
  std::string out;
  for (const auto& [n, value] : bfile.rows) {
    out += std::to_string(n);
    out += ' ';
    out += value.get_str();
    out += '\n';
  }
  return out;
}

BFile make_bfile(std::string id, long offset, const std::vector<mpz_class>& terms) {
  BFile out{std::move(id), {}};
  out.rows.reserve(terms.size());
  for (std::size_t i = 0; i < terms.size(); ++i) out.rows.emplace_back(offset + static_cast<long>(i), terms[i]);
  return out;
}

std::filesystem::path default_cache_dir() {
  if (const char* env = std::getenv("CUBICFIELDS_OEIS_CACHE"); env != nullptr && *env != '\0') return env;
  if (const char* home = std::getenv("HOME"); home != nullptr && *home != '\0') {
    return std::filesystem::path(home) / ".cache" / "cubicfields" / "oeis";
  }
  return std::filesystem::temp_directory_path() / "cubicfields-oeis";
}

std::filesystem::path default_fixture_dir() {
  if (const char* env = std::getenv("CUBICFIELDS_FIXTURE_DIR"); env != nullptr && *env != '\0') return env;
#ifdef CUBICFIELDS_FIXTURE_DIR
  return CUBICFIELDS_FIXTURE_DIR;
#else
  return {};
#endif
}

BFile fetch_bfile(const std::string& id, const FetchOptions& options) {
  if (!is_valid_sequence_id(id)) {
    throw std::invalid_argument("sequence id must be 'A' followed by six digits, got '" + id + "'");
  }
  const std::string name = bfile_name(id);
  std::string body;

  if (!options.cache_dir.empty() && read_file(options.cache_dir / name, body)) {
    return parse_bfile(body, id);
  }
  if (!options.offline && detail::download_bfile(id, options.timeout_seconds, body)) {
    BFile parsed = parse_bfile(body, id);
    if (!options.cache_dir.empty()) write_atomically(options.cache_dir / name, body);
    return parsed;
  }
  if (!options.fixture_dir.empty() && read_file(options.fixture_dir / name, body)) {
    return parse_bfile(body, id);
  }
  throw Error(ErrorCode::OfflineMiss, "no cached, downloadable or bundled copy of " + name);
}

}  // namespace cubicfields
