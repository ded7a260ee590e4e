#include "severi/cache_file.hpp"

#include <fstream>
#include <sstream>

namespace severi {

nlohmann::ordered_json cache_to_json(const MemoCache& cache) {
    nlohmann::ordered_json invariants = nlohmann::ordered_json::object();
    for (auto kind : kAllKinds) {
        nlohmann::ordered_json column = nlohmann::ordered_json::array();
        for (const auto& [d, value] : cache.column(kind)) column.push_back({d, value.to_string()});
        invariants[std::string(kind_name(kind))] = std::move(column);
    }
    nlohmann::ordered_json doc;
    doc["schema_version"] = kCacheSchemaVersion;
    doc["engine_version"] = std::string(kEngineVersion);
    doc["invariants"] = std::move(invariants);
    return doc;
}

MemoCache cache_from_json(const nlohmann::json& doc) {
    if (!doc.is_object() || !doc.contains("schema_version") || !doc["schema_version"].is_number_integer()) {
        throw CacheFileError("cache: missing schema_version");
    }
    if (doc["schema_version"].get<int>() != kCacheSchemaVersion) {
        throw CacheFileError("cache: schema_version " + doc["schema_version"].dump() + " is not supported (expected " +
                             std::to_string(kCacheSchemaVersion) + ")");
    }
    if (!doc.contains("invariants") || !doc["invariants"].is_object()) {
        throw CacheFileError("cache: missing invariants object");
    }

    MemoCache loaded;
    Engine reference;
    for (const auto& [name, column] : doc["invariants"].items()) {
        const auto kind = parse_kind(name);
        if (!kind) throw CacheFileError("cache: unknown invariant '" + name + "'");
        if (!column.is_array()) throw CacheFileError("cache: column " + name + " is not an array");
        for (const auto& entry : column) {
            if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number_integer() || !entry[1].is_string()) {
                throw CacheFileError("cache: malformed entry in " + name + ": " + entry.dump());
            }
            const int d = entry[0].get<int>();
            if (d < 1 || d > kMaxCachedDegree) {
                throw CacheFileError("cache: degree " + std::to_string(d) + " in " + name + " is out of range");
            }
            const auto value = ExactScalar::parse(entry[1].get<std::string>());
            if (!value) throw CacheFileError("cache: unparseable value in " + name + ": " + entry[1].dump());

            const auto fresh = reference.evaluate(*kind, Degree{d}).value;
            if (fresh != *value) {
                throw CacheFileError("cache: poisoned entry " + name + " at d=" + std::to_string(d) + ": file has " +
                                     value->to_string() + ", recomputation gives " + fresh.to_string());
            }
            try {
                loaded.store(*kind, d, *value);
            } catch (const CacheConflict& e) {
                throw CacheFileError(std::string("cache: duplicate entry, ") + e.what());
            }
        }
    }
    return loaded;
}

void cache_save(const MemoCache& cache, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw CacheFileError("cache: cannot open " + path.string() + " for writing");
    out << cache_to_json(cache).dump(2) << '\n';
    out.close();
    if (!out) throw CacheFileError("cache: write to " + path.string() + " failed");
}

MemoCache cache_load(const std::filesystem::path& path) {
    std::error_code ec;
    if (!std::filesystem::exists(path, ec)) return {};
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CacheFileError("cache: cannot open " + path.string());
    std::stringstream buffer;
    buffer << in.rdbuf();
    const std::string text = buffer.str();
    if (text.find_first_not_of(" \t\r\n") == std::string::npos) return {};

    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw CacheFileError(std::string("cache: parse failure: ") + e.what());
    }
    return cache_from_json(doc);
}

void cache_load_into(Engine& engine, const std::filesystem::path& path) {
    const MemoCache loaded = cache_load(path);
    for (auto kind : kAllKinds) {
        for (const auto& [d, value] : loaded.column(kind)) engine.cache().store(kind, d, value);
    }
}

}  // namespace severi
