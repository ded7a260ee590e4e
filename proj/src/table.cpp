#include "severi/table.hpp"

#include <algorithm>
#include <sstream>

namespace severi {

std::vector<InvariantKind> normalize_selection(std::span<const InvariantKind> selection) {
    std::vector<InvariantKind> kinds(selection.begin(), selection.end());
    std::sort(kinds.begin(), kinds.end());
    kinds.erase(std::unique(kinds.begin(), kinds.end()), kinds.end());
    return kinds;
}

namespace {

InvariantRecord evaluate_record(Engine& engine, int d, std::span<const InvariantKind> kinds) {
    InvariantRecord record{d, {}};
    record.entries.reserve(kinds.size());
    for (auto kind : kinds) record.entries.emplace_back(kind, engine.evaluate(kind, Degree{d}));
    return record;
}

}  // namespace

std::vector<InvariantRecord> build_table_serial(Engine& engine, int d_max, std::span<const InvariantKind> selection) {
    const auto kinds = normalize_selection(selection);
    std::vector<InvariantRecord> records;
    records.reserve(static_cast<std::size_t>(std::max(d_max, 0)));
    for (int d = 1; d <= d_max; ++d) records.push_back(evaluate_record(engine, d, kinds));
    return records;
}

std::vector<InvariantRecord> build_table_parallel(Engine& engine, int d_max, std::span<const InvariantKind> selection) {
    const auto kinds = normalize_selection(selection);
    if (d_max < 1) return {};
    // Recursive columns first; the sweep below then only reads them.
    engine.prefill(d_max);
    std::vector<InvariantRecord> records(static_cast<std::size_t>(d_max));
#pragma omp parallel for schedule(dynamic)
    for (int d = d_max; d >= 1; --d) records[static_cast<std::size_t>(d - 1)] = evaluate_record(engine, d, kinds);
    return records;
}

std::string render_csv(std::span<const InvariantRecord> records) {
    std::ostringstream out;
    if (records.empty()) return {};
    const auto& first = records.front().entries;
    out << 'd';
    for (const auto& [kind, _] : first) out << ',' << kind_name(kind);
    for (const auto& [kind, _] : first) out << ',' << kind_name(kind) << "_flag";
    out << '\n';
    for (const auto& record : records) {
        out << record.d;
        for (const auto& [_, eval] : record.entries) out << ',' << eval.value.to_string();
        for (const auto& [_, eval] : record.entries) {
            const auto flag = eval.flag_text();
            out << ',' << (flag.empty() ? "OK" : flag);
        }
        out << '\n';
    }
    return out.str();
}

nlohmann::ordered_json record_to_json(const InvariantRecord& record) {
    nlohmann::ordered_json values = nlohmann::ordered_json::object();
    nlohmann::ordered_json flags = nlohmann::ordered_json::object();
    for (const auto& [kind, eval] : record.entries) {
        const std::string key(kind_name(kind));
        values[key] = eval.value.to_string();
        flags[key] = {
            {"in_domain", eval.status.in_domain},
            {"reason", std::string(reason_code(eval.status.reason))},
            {"integral", eval.integral()},
        };
    }
    return {{"d", record.d}, {"values", std::move(values)}, {"flags", std::move(flags)}};
}

std::string render_json(std::span<const InvariantRecord> records) {
    nlohmann::ordered_json array = nlohmann::ordered_json::array();
    for (const auto& record : records) array.push_back(record_to_json(record));
    return array.dump(2) + "\n";
}

}  // namespace severi
