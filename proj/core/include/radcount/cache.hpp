#pragma once

// Append-only JSON-lines result cache. One record per line; corrupt lines are
// skipped with a warning; appends take an advisory lock so concurrent CLI
// invocations do not interleave partial lines. Records carry enough context
// (input, mode, q) to recompute and audit their values.

#include "radcount/quiver.hpp"

#include <optional>
#include <string>
#include <vector>

namespace radcount {

struct CacheRecord {
    std::string key;   // canonical hash : mode : q
    std::string value; // decimal count
    // meta
    std::string version;
    std::string timestamp; // UTC ISO-8601
    double elapsed_seconds = 0.0;
    std::string input_json; // quiver as given, for audits
    std::string mode;       // "radical", "overline", "weakened(l,m)"
    int q = 0;
};

class ResultCache {
public:
    explicit ResultCache(std::string path) : path_(std::move(path)) {}

    // Read every line; bad JSON or missing fields warn on stderr and are
    // skipped. A missing file is an empty cache.
    void load();

    std::optional<std::string> lookup(const std::string& key) const;
    void append(const CacheRecord& rec);

    const std::vector<CacheRecord>& records() const { return records_; }
    const std::string& path() const { return path_; }

    static std::string make_key(const Quiver& q, const SummandVector& d, const std::string& mode,
                                int fq);

private:
    std::string path_;
    std::vector<CacheRecord> records_;
};

// Library version stamped into cache records.
extern const char* const kVersion;

} // namespace radcount
