#pragma once

#include "bns/exact.hpp"

#include <optional>
#include <string>
#include <vector>

namespace bns {

inline constexpr const char* kToolVersion = "bns 0.1.0";

struct ResultRecord {
    std::string method;  // oracle | conjecture | mir | brute
    int n = 0;
    int s = 0;
    std::string value;  // decimal string of the exact count
    double wall_time = 0.0;
    std::string tool_version = kToolVersion;

    std::string to_json() const;
    static ResultRecord from_json(const std::string& line);
};

// Append-only JSONL cache of computed counts, one self-describing record per
// line. Directory comes from $BNS_CACHE_DIR, defaulting to .bns_cache.
class ResultCache {
public:
    explicit ResultCache(std::string directory = "");

    const std::string& path() const { return path_; }
    void append(const ResultRecord& record) const;
    std::vector<ResultRecord> load() const;
    std::optional<ResultRecord> lookup(const std::string& method, int n, int s) const;

private:
    std::string path_;
};

}  // namespace bns
