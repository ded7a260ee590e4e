#include "severi/cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "severi/audit.hpp"
#include "severi/cache_file.hpp"
#include "severi/invariants.hpp"
#include "severi/table.hpp"

namespace severi::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<InvariantKind> parse_selection(const std::string& list) {
    if (list.empty() || list == "all") return {kAllKinds.begin(), kAllKinds.end()};
    std::vector<InvariantKind> kinds;
    std::stringstream stream(list);
    std::string name;
    while (std::getline(stream, name, ',')) {
        const auto kind = parse_kind(name);
        if (!kind) throw UsageError("unknown invariant '" + name + "'");
        kinds.push_back(*kind);
    }
    if (kinds.empty()) throw UsageError("empty invariant selection");
    return kinds;
}

void require_degree(int d, int minimum, const char* what) {
    if (d < minimum) throw UsageError(std::string(what) + " must be >= " + std::to_string(minimum));
}

// Loads the cache file if one was given; saves after the command succeeds.
class CacheSession {
public:
    CacheSession(Engine& engine, const std::string& path) : engine_(engine), path_(path) {
        if (!path_.empty()) cache_load_into(engine_, path_);
    }
    void commit() const {
        if (!path_.empty()) cache_save(engine_.cache(), path_);
    }

private:
    Engine& engine_;
    std::string path_;
};

void write_output(const std::string& text, const std::string& path, std::ostream& out) {
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) throw std::runtime_error("cannot open " + path + " for writing");
    file << text;
    file.close();
    if (!file) throw std::runtime_error("write to " + path + " failed");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact enumerative invariants of plane curves", "severi"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string cache_path;
    app.add_option("--cache", cache_path, "JSON cache file, loaded before and saved after the command");

    auto* eval = app.add_subcommand("eval", "Print one invariant at one degree");
    std::string eval_kind;
    int eval_degree = 0;
    eval->add_option("invariant", eval_kind, "N0 N1 K0 K1 G0 G1 OMEGA M K0_PRINTED NODES RCOUNT LR")->required();
    eval->add_option("d", eval_degree, "degree (>= 1)")->required();

    auto* table = app.add_subcommand("table", "Emit a table of invariants for d = 1..d_max");
    int table_d_max = 0;
    std::string table_format = "csv";
    std::string table_selection = "all";
    std::string table_output;
    bool table_serial = false;
    table->add_option("--d-max", table_d_max, "largest degree")->required();
    table->add_option("--format", table_format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    table->add_option("--invariants", table_selection, "comma-separated list, or 'all'");
    table->add_option("-o,--output", table_output, "output file (default stdout)");
    table->add_flag("--serial", table_serial, "use the single-threaded reference sweep");

    auto* audit_cmd = app.add_subcommand("audit", "Run anchor, identity and discrepancy checks");
    int audit_d_max = 0;
    std::string audit_format = "text";
    audit_cmd->add_option("--d-max", audit_d_max, "largest degree (>= 3)")->required();
    audit_cmd->add_option("--format", audit_format, "text or json")->check(CLI::IsMember({"text", "json"}));

    auto* cache_cmd = app.add_subcommand("cache", "Manage the cache file");
    cache_cmd->require_subcommand(1);
    auto* cache_save_cmd = cache_cmd->add_subcommand("save", "Fill every invariant through d_max and save");
    int cache_d_max = 0;
    cache_save_cmd->add_option("--d-max", cache_d_max, "largest degree")->required();
    cache_cmd->add_subcommand("verify", "Load and validate the cache file");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        Engine engine(kernels::Policy::Parallel);

        if (*eval) {
            const auto kind = parse_kind(eval_kind);
            if (!kind) throw UsageError("unknown invariant '" + eval_kind + "'");
            require_degree(eval_degree, 1, "d");
            CacheSession session(engine, cache_path);
            const auto result = engine.evaluate(*kind, Degree{eval_degree});
            session.commit();
            out << result.value << '\n';
            if (const auto flag = result.flag_text(); !flag.empty()) out << flag << '\n';
            return kOk;
        }

        if (*table) {
            require_degree(table_d_max, 1, "--d-max");
            const auto kinds = parse_selection(table_selection);
            CacheSession session(engine, cache_path);
            const auto records = table_serial ? build_table_serial(engine, table_d_max, kinds)
                                              : build_table_parallel(engine, table_d_max, kinds);
            const auto text = table_format == "json" ? render_json(records) : render_csv(records);
            write_output(text, table_output, out);
            session.commit();
            return kOk;
        }

        if (*audit_cmd) {
            require_degree(audit_d_max, 3, "--d-max");
            CacheSession session(engine, cache_path);
            const auto report = audit::run_full_audit(engine, audit_d_max);
            report.validate();
            session.commit();
            out << (audit_format == "json" ? report.to_json().dump(2) + "\n" : report.to_text());
            return report.has_hard_failure() ? kAuditFailed : kOk;
        }

        if (*cache_cmd) {
            if (cache_path.empty()) throw UsageError("--cache is required");
            if (*cache_save_cmd) {
                require_degree(cache_d_max, 1, "--d-max");
                CacheSession session(engine, cache_path);
                build_table_parallel(engine, cache_d_max, kAllKinds);
                session.commit();
                out << "saved " << engine.cache().size() << " entries to " << cache_path << '\n';
            } else {
                const auto loaded = cache_load(cache_path);
                out << "verified " << loaded.size() << " entries in " << cache_path << '\n';
            }
            return kOk;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

}  // namespace severi::cli
