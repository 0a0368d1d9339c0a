#pragma once

// Append-only JSON-lines cache of depth reports. Keys are the exact
// serialized labelled graph plus engine settings; no isomorphism dedup.

#include <fstream>
#include <optional>
#include <string>
#include <unordered_map>

#include "exdepth/report_json.hpp"

namespace exdepth {

inline std::string cache_key(const Graph& g, const DepthOptions& opt) {
  std::string key = serialize(g);
  if (g.has_labels())
    for (const auto& l : g.labels()) key += "label " + l + "\n";
  if (g.family() != nullptr) key += "family " + to_string(*g.family()) + "\n";
  key += "method " + to_string(opt.method) + " max-oracle-n " + std::to_string(opt.max_oracle_n) + " rank-cap " +
         std::to_string(opt.rank_cap) + " trials " + std::to_string(opt.trials) + " seed " + std::to_string(opt.seed);
  return key;
}

class ResultCache {
 public:
  explicit ResultCache(std::string path) : path_(std::move(path)) {
    std::ifstream in(path_);
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      Json j = Json::parse(line, nullptr, false);
      if (j.is_discarded() || !j.contains("key") || !j.contains("report")) continue;
      entries_[j["key"].get<std::string>()] = j["report"].dump();
    }
  }

  /// The stored report JSON, byte for byte as first rendered.
  std::optional<std::string> get(const std::string& key) const {
    auto it = entries_.find(key);
    if (it == entries_.end()) return std::nullopt;
    return it->second;
  }

  void put(const std::string& key, const std::string& report_json) {
    if (entries_.count(key) != 0) return;
    Json line;
    line["key"] = key;
    line["report"] = Json::parse(report_json);
    std::ofstream out(path_, std::ios::app);
    out << line.dump() << '\n';
    entries_[key] = report_json;
  }

  std::size_t size() const { return entries_.size(); }

 private:
  std::string path_;
  std::unordered_map<std::string, std::string> entries_;
};

/// depth_exterior through the cache; returns the JSON text.
inline std::string cached_depth_json(const Graph& g, const DepthOptions& opt, ResultCache* cache) {
  if (cache != nullptr)
    if (auto hit = cache->get(cache_key(g, opt))) return *hit;
  std::string json = render_json(depth_exterior(g, opt));
  if (cache != nullptr) cache->put(cache_key(g, opt), json);
  return json;
}

}  // namespace exdepth
