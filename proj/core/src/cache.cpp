#include "radcount/cache.hpp"

#include "radcount/canonical.hpp"

#include <json.hpp>

#include <cstdio>
#include <ctime>
#include <fstream>
#include <iostream>
#include <sstream>

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

namespace radcount {

const char* const kVersion = "0.1.0";

void ResultCache::load() {
    records_.clear();
    std::ifstream in(path_);
    if (!in.is_open()) return;

    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        nlohmann::json j = nlohmann::json::parse(line, nullptr, /*allow_exceptions=*/false);
        if (j.is_discarded() || !j.is_object() || !j.contains("key") || !j.contains("value") ||
            !j.contains("meta") || !j["key"].is_string() || !j["value"].is_string() ||
            !j["meta"].is_object()) {
            std::cerr << "warning: skipping corrupt cache line " << lineno << " in " << path_
                      << "\n";
            continue;
        }
        CacheRecord rec;
        rec.key = j["key"].get<std::string>();
        rec.value = j["value"].get<std::string>();
        const auto& meta = j["meta"];
        rec.version = meta.value("version", "");
        rec.timestamp = meta.value("timestamp", "");
        rec.elapsed_seconds = meta.value("elapsed_seconds", 0.0);
        rec.input_json = meta.value("input", "");
        rec.mode = meta.value("mode", "");
        rec.q = meta.value("q", 0);
        records_.push_back(std::move(rec));
    }
}

std::optional<std::string> ResultCache::lookup(const std::string& key) const {
    // Later lines win, matching append-only semantics.
    for (auto it = records_.rbegin(); it != records_.rend(); ++it)
        if (it->key == key) return it->value;
    return std::nullopt;
}

void ResultCache::append(const CacheRecord& rec) {
    nlohmann::ordered_json j;
    j["key"] = rec.key;
    j["value"] = rec.value;
    j["meta"] = {{"version", rec.version},
                 {"timestamp", rec.timestamp},
                 {"elapsed_seconds", rec.elapsed_seconds},
                 {"input", rec.input_json},
                 {"mode", rec.mode},
                 {"q", rec.q}};
    std::string line = j.dump() + "\n";

    int fd = ::open(path_.c_str(), O_WRONLY | O_CREAT | O_APPEND, 0644);
    if (fd < 0) throw std::runtime_error("cannot open cache file " + path_);
    ::flock(fd, LOCK_EX);
    ssize_t n = ::write(fd, line.data(), line.size());
    ::flock(fd, LOCK_UN);
    ::close(fd);
    if (n != static_cast<ssize_t>(line.size()))
        throw std::runtime_error("short write to cache file " + path_);
    records_.push_back(rec);
}

std::string ResultCache::make_key(const Quiver& q, const SummandVector& d,
                                  const std::string& mode, int fq) {
    return canonical_hash(q, d) + ":" + mode + ":q=" + std::to_string(fq);
}

} // namespace radcount
