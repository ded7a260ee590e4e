#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "severi/invariants.hpp"

namespace severi {

/// One degree's worth of evaluated invariants, in canonical kind order.
struct InvariantRecord {
    int d = 1;
    std::vector<std::pair<InvariantKind, Evaluation>> entries;
};

/// Sorts into canonical order and drops duplicates.
std::vector<InvariantKind> normalize_selection(std::span<const InvariantKind> selection);

/// Reference sweep: degrees in order, one thread.
std::vector<InvariantRecord> build_table_serial(Engine& engine, int d_max, std::span<const InvariantKind> selection);

/// Fills the N0/N1 prefix, then evaluates degrees concurrently. Returns the
/// same records as build_table_serial.
std::vector<InvariantRecord> build_table_parallel(Engine& engine, int d_max, std::span<const InvariantKind> selection);

/// Header "d,<kinds...>,<kind>_flag..." then one LF-terminated row per degree.
std::string render_csv(std::span<const InvariantRecord> records);

nlohmann::ordered_json record_to_json(const InvariantRecord& record);
/// JSON array of records, two-space indent, trailing newline.
std::string render_json(std::span<const InvariantRecord> records);

}  // namespace severi
