#include "bns/cache.hpp"

#include <nlohmann/json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>

namespace bns {

using nlohmann::json;

std::string ResultRecord::to_json() const {
    json j{{"method", method},         {"n", n},
           {"s", s},                   {"value", value},
           {"wall_time", wall_time},   {"tool_version", tool_version}};
    return j.dump();
}

ResultRecord ResultRecord::from_json(const std::string& line) {
    json j = json::parse(line);
    ResultRecord r;
    r.method = j.at("method").get<std::string>();
    r.n = j.at("n").get<int>();
    r.s = j.at("s").get<int>();
    r.value = j.at("value").get<std::string>();
    r.wall_time = j.value("wall_time", 0.0);
    r.tool_version = j.value("tool_version", "");
    return r;
}

ResultCache::ResultCache(std::string directory) {
    if (directory.empty()) {
        if (const char* env = std::getenv("BNS_CACHE_DIR"))
            directory = env;
        else
            directory = ".bns_cache";
    }
    std::filesystem::create_directories(directory);
    path_ = (std::filesystem::path(directory) / "cache.jsonl").string();
}

void ResultCache::append(const ResultRecord& record) const {
    std::ofstream out(path_, std::ios::app);
    out << record.to_json() << "\n";
}

std::vector<ResultRecord> ResultCache::load() const {
    std::vector<ResultRecord> records;
    std::ifstream in(path_);
    std::string line;
    while (std::getline(in, line))
        if (!line.empty()) records.push_back(ResultRecord::from_json(line));
    return records;
}

std::optional<ResultRecord> ResultCache::lookup(const std::string& method, int n,
                                                int s) const {
    std::optional<ResultRecord> found;
    for (const auto& r : load())
        if (r.method == method && r.n == n && r.s == s) found = r;
    return found;
}

}  // namespace bns
