#pragma once

// Anchor comparisons, two-path identities, integrality scans and probes for
// the known inconsistencies of the printed formulas.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "severi/invariants.hpp"

namespace severi::audit {

enum class CheckKind { Anchor, Identity, Integrality, DiscrepancyProbe };
enum class CheckStatus { Pass, Fail, Info };

std::string_view to_string(CheckKind kind);
std::string_view to_string(CheckStatus status);

struct AuditCheck {
    std::string id;
    int degree = 0;
    CheckKind kind = CheckKind::Anchor;
    std::optional<ExactScalar> expected;
    ExactScalar actual;
    CheckStatus status = CheckStatus::Info;
    std::string note;
};

class AuditReport {
public:
    explicit AuditReport(int d_max) : d_max_(d_max) {}

    void add(AuditCheck check);
    /// Appends the other report's checks; d_max becomes the larger one.
    void append(const AuditReport& other);

    [[nodiscard]] const std::vector<AuditCheck>& checks() const { return checks_; }
    [[nodiscard]] std::size_t count(CheckStatus status) const;
    [[nodiscard]] int d_max() const { return d_max_; }
    [[nodiscard]] std::string_view engine_version() const { return kEngineVersion; }

    /// A FAIL among ANCHOR or IDENTITY checks.
    [[nodiscard]] bool has_hard_failure() const;

    /// Throws std::logic_error when the report is empty or a failing
    /// ANCHOR/IDENTITY check lacks an expected value.
    void validate() const;

    [[nodiscard]] std::string to_text() const;
    [[nodiscard]] nlohmann::ordered_json to_json() const;

private:
    int d_max_;
    std::vector<AuditCheck> checks_;
    std::array<std::size_t, 3> tallies_{};
};

struct Anchor {
    const char* id;
    InvariantKind kind;
    int degree;
    const char* value;
    const char* source;
};

/// Reference values; K0(3) = 24 is the classical count of cuspidal cubics,
/// the rest were derived by hand and by the independent oracle.
const std::vector<Anchor>& anchor_table();

/// Printed K0 evaluator at d = 3 disagrees with the anchor; this is the value
/// it is expected to keep producing.
inline constexpr long kPrintedK0AtThree = -60;

/// Residual of the printed ramification-section relation,
/// (2 g1 - 2 - K1) - ((3d - 9) ω - 9 N1 + T(3d1 - 2)) / 2, with the ambiguous
/// coefficient of N1 read as 9.
ExactScalar eq8_residual(Engine& engine, Degree d);

/// Frozen residuals for 4 <= d <= 12, nullopt outside that range.
std::optional<ExactScalar> frozen_eq8_residual(int d);

/// Every suite requires d_max >= 3 and throws std::invalid_argument otherwise.
AuditReport run_anchor_suite(Engine& engine, int d_max);
AuditReport run_identity_suite(Engine& engine, int d_max);
AuditReport run_discrepancy_probes(Engine& engine, int d_max);
AuditReport run_full_audit(Engine& engine, int d_max);

}  // namespace severi::audit
