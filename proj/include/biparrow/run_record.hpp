#pragma once

// Run records (the JSON the CLI prints) and the append-only results cache.
// Records carry a schema tag and re-parse losslessly; the cache is a JSONL
// log keyed by (canonical form, targets), written under BIPARROW_CACHE
// (default .biparrow/) with advisory file locking.

#include <optional>
#include <string>

#include <json.hpp>

#include "biparrow/arrowing.hpp"
#include "biparrow/enumerate.hpp"

namespace biparrow {

inline constexpr const char *schema_version = "biparrow/v1";
inline constexpr const char *tool_version = "0.1.0";

struct RunRecord {
    std::string command;
    nlohmann::json parameters;
    nlohmann::json verdict;
    std::vector<std::string> witness_files;
    double wall_time_s = 0.0;

    nlohmann::json to_json() const;
    static RunRecord from_json(const nlohmann::json &j);
};

nlohmann::json stats_to_json(const SearchStats &stats);

class ResultCache {
  public:
    // Resolves the directory from BIPARROW_CACHE, falling back to ".biparrow";
    // creates it on first store.
    ResultCache();
    explicit ResultCache(std::string dir);

    static std::string key_for(const BipartiteGraph &g, const Target &t_red,
                               const Target &t_blue);

    std::optional<nlohmann::json> lookup(const std::string &key) const;
    void store(const std::string &key, const nlohmann::json &value) const;

    const std::string &dir() const { return dir_; }

  private:
    std::string dir_;
};

}  // namespace biparrow
