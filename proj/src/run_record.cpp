#include "biparrow/run_record.hpp"

#include <sys/file.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

namespace biparrow {

using nlohmann::json;

json RunRecord::to_json() const {
    return json{{"schema", schema_version},  {"tool_version", tool_version},
                {"command", command},        {"parameters", parameters},
                {"verdict", verdict},        {"witness_files", witness_files},
                {"wall_time_s", wall_time_s}};
}

RunRecord RunRecord::from_json(const json &j) {
    if (j.at("schema").get<std::string>() != schema_version)
        throw std::runtime_error("run record: unknown schema '" +
                                 j.at("schema").get<std::string>() + "'");
    RunRecord r;
    r.command = j.at("command").get<std::string>();
    r.parameters = j.at("parameters");
    r.verdict = j.at("verdict");
    r.witness_files = j.at("witness_files").get<std::vector<std::string>>();
    r.wall_time_s = j.at("wall_time_s").get<double>();
    return r;
}

json stats_to_json(const SearchStats &stats) {
    return json{{"nodes", stats.nodes},
                {"prune_red", stats.prune_red},
                {"prune_blue", stats.prune_blue},
                {"prune_symmetry", stats.prune_symmetry},
                {"red_completions", stats.red_completions},
                {"frontier", stats.frontier},
                {"exhausted", stats.exhausted}};
}

namespace {

std::string default_cache_dir() {
    if (const char *env = std::getenv("BIPARROW_CACHE"); env && *env) return env;
    return ".biparrow";
}

}  // namespace

ResultCache::ResultCache() : dir_(default_cache_dir()) {}
ResultCache::ResultCache(std::string dir) : dir_(std::move(dir)) {}

std::string ResultCache::key_for(const BipartiteGraph &g, const Target &t_red,
                                 const Target &t_blue) {
    return canonical_form(g, /*allow_side_swap=*/true).hex() + "|" + t_red.to_string() + "|" +
           t_blue.to_string();
}

std::optional<json> ResultCache::lookup(const std::string &key) const {
    std::ifstream in(dir_ + "/cache.jsonl");
    if (!in) return std::nullopt;
    std::optional<json> found;  // last entry wins
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        json entry = json::parse(line, nullptr, /*allow_exceptions=*/false);
        if (entry.is_discarded() || !entry.contains("key")) continue;
        if (entry["key"] == key) found = entry["value"];
    }
    return found;
}

void ResultCache::store(const std::string &key, const json &value) const {
    std::filesystem::create_directories(dir_);
    const std::string path = dir_ + "/cache.jsonl";
    const std::string line = json{{"key", key}, {"value", value}}.dump() + "\n";
    FILE *f = std::fopen(path.c_str(), "a");
    if (!f) throw std::runtime_error("cache: cannot open " + path);
    const int fd = fileno(f);
    flock(fd, LOCK_EX);  // advisory lock around the append
    std::fwrite(line.data(), 1, line.size(), f);
    std::fflush(f);
    flock(fd, LOCK_UN);
    std::fclose(f);
}

}  // namespace biparrow
