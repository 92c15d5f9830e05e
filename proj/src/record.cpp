#include "exdir/record.hpp"

#include <cstdlib>
#include <ctime>
#include <fstream>

#include "exdir/errors.hpp"
#include "json.hpp"

namespace exdir {

std::string ResultRecord::to_json_line() const {
  nlohmann::ordered_json j;
  j["graph_hash"] = graph_hash;
  if (family_spec)
    j["family_spec"] = *family_spec;
  else
    j["family_spec"] = nullptr;
  j["start"] = start;
  j["f_d"] = f_d;
  j["closed_min"] = closed_min;
  j["timestamp"] = timestamp;
  return j.dump();
}

ResultRecord ResultRecord::from_json_line(const std::string& line) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(line);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("bad record line: ") + e.what());
  }
  ResultRecord rec;
  rec.graph_hash = j.at("graph_hash").get<std::string>();
  if (!j.at("family_spec").is_null()) rec.family_spec = j.at("family_spec").get<std::string>();
  rec.start = j.at("start").get<int>();
  rec.f_d = j.at("f_d").get<int>();
  rec.closed_min = j.at("closed_min").get<int>();
  rec.timestamp = j.at("timestamp").get<std::int64_t>();
  return rec;
}

std::int64_t record_timestamp() {
  if (const char* epoch = std::getenv("SOURCE_DATE_EPOCH")) {
    try {
      return std::stoll(epoch);
    } catch (const std::exception&) {
      // fall through to the clock
    }
  }
  return static_cast<std::int64_t>(std::time(nullptr));
}

ResultCache::ResultCache(std::string path) : path_(std::move(path)) {
  std::ifstream in(path_);
  if (!in) return;  // no cache yet
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    records_.push_back(ResultRecord::from_json_line(line));
  }
}

std::optional<ResultRecord> ResultCache::lookup(const std::string& graph_hash, int start) const {
  for (auto it = records_.rbegin(); it != records_.rend(); ++it)
    if (it->graph_hash == graph_hash && it->start == start) return *it;
  return std::nullopt;
}

void ResultCache::append(const ResultRecord& rec) {
  std::ofstream out(path_, std::ios::app);
  if (!out) throw std::runtime_error("cannot open cache file: " + path_);
  out << rec.to_json_line() << "\n";
  records_.push_back(rec);
}

std::string default_cache_path() {
  if (const char* env = std::getenv("EXDIR_CACHE")) return env;
  return ".exdir-cache.jsonl";
}

}  // namespace exdir
