#ifndef STARSPLINE_TOOLS_CLI_SUPPORT_HPP
#define STARSPLINE_TOOLS_CLI_SUPPORT_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace starspline::cli {

struct Range {
  int lo = 0;
  int hi = 0;
};

/// "a..b" or a single integer "a". Throws Error(InvalidInput) on malformed
/// text, negative bounds or an empty range.
Range parse_range(const std::string& text);

/// Comma separated non-negative indices, e.g. "1,0,2".
std::vector<std::size_t> parse_index_list(const std::string& text);

std::uint64_t fnv1a64(const std::string& bytes);

/// 16 lowercase hex digits.
std::string hex64(std::uint64_t value);

/// Text file of "key value" lines. Lookups and appends are serialized; an
/// entry, once written, is never rewritten.
class ResultCache {
 public:
  ResultCache() = default;
  explicit ResultCache(std::string path);

  bool enabled() const { return !path_.empty(); }
  std::optional<std::string> get(const std::string& key) const;
  /// Appends key -> value. Throws Error(CacheMismatch) if the key is
  /// already recorded with a different value.
  void put(const std::string& key, const std::string& value);

 private:
  std::string path_;
  std::map<std::string, std::string> entries_;
  mutable std::mutex mutex_;
};

/// Runs task(i) for i in [0, count) on up to `jobs` threads.
void parallel_for(std::size_t count, unsigned jobs, const std::function<void(std::size_t)>& task);

/// Right-aligned columns separated by two spaces.
std::string format_table(const std::vector<std::string>& header,
                         const std::vector<std::vector<std::string>>& rows);

std::string format_csv(const std::vector<std::string>& header,
                       const std::vector<std::vector<std::string>>& rows);

}  // namespace starspline::cli

#endif  // STARSPLINE_TOOLS_CLI_SUPPORT_HPP
