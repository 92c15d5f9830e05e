#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace exdir {

/// One solve outcome.  closed_min is the minimum closed-set size of the
/// graph (the minimum of f_d over all starts), so f_d >= closed_min holds
/// per record but is not a field invariant.
struct ResultRecord {
  std::string graph_hash;
  std::optional<std::string> family_spec;
  int start = 0;
  int f_d = 0;
  int closed_min = 0;
  std::int64_t timestamp = 0;

  std::string to_json_line() const;
  static ResultRecord from_json_line(const std::string& line);

  /// Field equality ignoring the timestamp.
  bool same_result(const ResultRecord& o) const {
    return graph_hash == o.graph_hash && family_spec == o.family_spec && start == o.start &&
           f_d == o.f_d && closed_min == o.closed_min;
  }
};

/// Timestamp for freshly computed records.  Honors SOURCE_DATE_EPOCH so
/// structured outputs can be made byte-stable across runs.
std::int64_t record_timestamp();

/// Append-only, line-delimited JSON record store keyed by
/// (graph_hash, start).  Later records win on lookup.  Graphs are
/// immutable values, so there is no invalidation.
class ResultCache {
 public:
  explicit ResultCache(std::string path);

  const std::string& path() const { return path_; }
  std::optional<ResultRecord> lookup(const std::string& graph_hash, int start) const;
  void append(const ResultRecord& rec);
  const std::vector<ResultRecord>& records() const { return records_; }

 private:
  std::string path_;
  std::vector<ResultRecord> records_;
};

/// $EXDIR_CACHE when set, else ".exdir-cache.jsonl" in the working directory.
std::string default_cache_path();

}  // namespace exdir
