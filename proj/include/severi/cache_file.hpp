#pragma once

// JSON persistence of the memo cache:
//
//   { "schema_version": 1, "engine_version": "...",
//     "invariants": { "N0": [[1, "1"], [2, "1"], ...], ... } }
//
// Values are exact strings. Loading recomputes every entry with a cold
// engine and refuses the file on any mismatch.

#include <filesystem>
#include <stdexcept>

#include "json.hpp"

#include "severi/invariants.hpp"

namespace severi {

inline constexpr int kCacheSchemaVersion = 1;
/// Entries above this degree are rejected rather than recomputed.
inline constexpr int kMaxCachedDegree = 500;

class CacheFileError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

nlohmann::ordered_json cache_to_json(const MemoCache& cache);

/// Parses and validates a cache document. Throws CacheFileError on schema
/// mismatch, malformed entries or any value that disagrees with recomputation.
MemoCache cache_from_json(const nlohmann::json& doc);

/// Throws CacheFileError if the file cannot be written.
void cache_save(const MemoCache& cache, const std::filesystem::path& path);

/// An absent or empty file yields an empty cache.
MemoCache cache_load(const std::filesystem::path& path);

/// Loads into the engine's cache, merging with whatever is already there.
void cache_load_into(Engine& engine, const std::filesystem::path& path);

}  // namespace severi
