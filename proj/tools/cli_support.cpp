#include "cli_support.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <exception>
#include <fstream>
#include <sstream>
#include <thread>

#include "starspline/error.hpp"

namespace starspline::cli {

namespace {

int parse_int(const std::string& text, const std::string& what) {
  int value = 0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc() || ptr != end)
    throw Error(Errc::InvalidInput, "bad " + what + " '" + text + "'");
  return value;
}

}  // namespace

Range parse_range(const std::string& text) {
  Range range;
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    range.lo = range.hi = parse_int(text, "range");
  } else {
    range.lo = parse_int(text.substr(0, dots), "range start");
    range.hi = parse_int(text.substr(dots + 2), "range end");
  }
  if (range.lo < 0) throw Error(Errc::InvalidInput, "range '" + text + "' has a negative bound");
  if (range.lo > range.hi) throw Error(Errc::InvalidInput, "range '" + text + "' is empty");
  return range;
}

std::vector<std::size_t> parse_index_list(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    const int v = parse_int(item, "index");
    if (v < 0) throw Error(Errc::InvalidInput, "negative index " + item);
    out.push_back(static_cast<std::size_t>(v));
  }
  if (out.empty()) throw Error(Errc::InvalidInput, "empty index list");
  return out;
}

std::uint64_t fnv1a64(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::string hex64(std::uint64_t value) {
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i, value >>= 4) out[static_cast<std::size_t>(i)] = digits[value & 15];
  return out;
}

ResultCache::ResultCache(std::string path) : path_(std::move(path)) {
  std::ifstream in(path_);
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (line.empty()) continue;
    const auto space = line.find(' ');
    if (space == std::string::npos)
      throw Error(Errc::ParseError, path_ + ":" + std::to_string(number) + ": malformed cache line");
    const std::string key = line.substr(0, space);
    const std::string value = line.substr(space + 1);
    auto [it, inserted] = entries_.emplace(key, value);
    if (!inserted && it->second != value)
      throw Error(Errc::CacheMismatch, path_ + ": conflicting entries for " + key);
  }
}

std::optional<std::string> ResultCache::get(const std::string& key) const {
  std::lock_guard<std::mutex> lock(mutex_);
  auto it = entries_.find(key);
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

void ResultCache::put(const std::string& key, const std::string& value) {
  if (!enabled()) return;
  std::lock_guard<std::mutex> lock(mutex_);
  auto [it, inserted] = entries_.emplace(key, value);
  if (!inserted) {
    if (it->second != value)
      throw Error(Errc::CacheMismatch,
                  "cache entry " + key + " holds '" + it->second + "' but recomputed '" + value + "'");
    return;
  }
  std::ofstream out(path_, std::ios::app | std::ios::binary);
  out << key << ' ' << value << '\n';
  if (!out) throw Error(Errc::InvalidInput, "cannot write cache file " + path_);
}

void parallel_for(std::size_t count, unsigned jobs, const std::function<void(std::size_t)>& task) {
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(count);
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        task(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  // Report the first failing cell in grid order, independent of scheduling.
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

std::string format_table(const std::vector<std::string>& header,
                         const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
  for (const auto& row : rows)
    for (std::size_t c = 0; c < row.size() && c < width.size(); ++c)
      width[c] = std::max(width[c], row[c].size());
  std::string out;
  auto emit = [&](const std::vector<std::string>& cells) {
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (c > 0) out += "  ";
      out += std::string(width[c] - cells[c].size(), ' ') + cells[c];
    }
    out += '\n';
  };
  emit(header);
  for (const auto& row : rows) emit(row);
  return out;
}

std::string format_csv(const std::vector<std::string>& header,
                       const std::vector<std::vector<std::string>>& rows) {
  std::string out;
  auto emit = [&](const std::vector<std::string>& cells) {
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (c > 0) out += ',';
      out += cells[c];
    }
    out += '\n';
  };
  emit(header);
  for (const auto& row : rows) emit(row);
  return out;
}

}  // namespace starspline::cli
