#pragma once

#include <array>
#include <map>
#include <optional>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <string_view>

#include "severi/exact.hpp"
#include "severi/kernels.hpp"

namespace severi {

inline constexpr std::string_view kEngineVersion = "1.0.0";

/// Degree of a plane curve, d >= 1.
class Degree {
public:
    explicit Degree(int d) : d_(d) {
        if (d < 1) throw std::invalid_argument("degree must be >= 1, got " + std::to_string(d));
    }
    [[nodiscard]] int value() const { return d_; }
    friend auto operator<=>(Degree, Degree) = default;

private:
    int d_;
};

/// Declaration order is the canonical column order of emitted tables.
enum class InvariantKind { N0, N1, K0, K1, G0, G1, OMEGA, M, K0_PRINTED, NODES, RCOUNT, LR };

inline constexpr std::array kAllKinds = {
    InvariantKind::N0,    InvariantKind::N1, InvariantKind::K0,         InvariantKind::K1,
    InvariantKind::G0,    InvariantKind::G1, InvariantKind::OMEGA,      InvariantKind::M,
    InvariantKind::K0_PRINTED, InvariantKind::NODES, InvariantKind::RCOUNT, InvariantKind::LR,
};

[[nodiscard]] std::string_view kind_name(InvariantKind kind);
/// Case-insensitive.
[[nodiscard]] std::optional<InvariantKind> parse_kind(std::string_view name);

enum class DomainReason { Ok, BelowMinDegree, DegenerateGeometry };

[[nodiscard]] std::string_view reason_code(DomainReason reason);

struct DomainStatus {
    bool in_domain = true;
    DomainReason reason = DomainReason::Ok;

    friend bool operator==(const DomainStatus&, const DomainStatus&) = default;
};

/// Validity of each formula by degree. Out-of-domain values are still
/// computed; only the flag changes.
[[nodiscard]] DomainStatus domain_status(InvariantKind kind, Degree d);

struct Evaluation {
    ExactScalar value;
    DomainStatus status;

    [[nodiscard]] bool integral() const { return value.is_integer(); }
    /// Empty when in domain and integral, otherwise e.g.
    /// "DEGENERATE_GEOMETRY non-integral".
    [[nodiscard]] std::string flag_text() const;
};

/// Raised when a store would overwrite a memoized value with a different one.
class CacheConflict : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Per-invariant memo of exact values. Inserts are serialized and a stored
/// value is never replaced by a different one.
class MemoCache {
public:
    using Column = std::map<int, ExactScalar>;

    MemoCache() = default;
    MemoCache(const MemoCache& other);
    MemoCache& operator=(const MemoCache& other);

    [[nodiscard]] std::optional<ExactScalar> lookup(InvariantKind kind, int d) const;
    /// Throws CacheConflict if a different value is already present.
    void store(InvariantKind kind, int d, const ExactScalar& value);

    [[nodiscard]] Column column(InvariantKind kind) const;
    [[nodiscard]] std::size_t size() const;
    void clear();

private:
    mutable std::shared_mutex mutex_;
    std::array<Column, kAllKinds.size()> columns_;
};

/// Memoized evaluation of every invariant. N0 and N1 are filled bottom-up
/// by degree; derived invariants at d read only N0/N1 at degrees <= d.
///
/// Safe to share between threads: the cache serializes writes and all
/// values are deterministic, so concurrent fills agree.
class Engine {
public:
    explicit Engine(kernels::Policy policy = kernels::Policy::Serial) : policy_(policy) {}

    // Severi degrees.
    ExactScalar n0(Degree d);
    ExactScalar n1(Degree d);

    // Elliptic-family quantities.
    ExactScalar t_op(LinearWeight u, Degree d);
    ExactScalar omega(Degree d);

    // Rational-family fibre statistics.
    ExactScalar m_invariant(Degree d);
    ExactScalar reducible_fibre_count(Degree d);
    ExactScalar r_component_count(Degree d);
    ExactScalar lr(Degree d);

    // Cuspidal counts.
    ExactScalar k0(Degree d);
    ExactScalar k0_printed(Degree d);
    ExactScalar k1(Degree d);
    ExactScalar k1_via_c2(Degree d);

    // Linear genera.
    ExactScalar g0(Degree d);
    ExactScalar g0_via_section(Degree d);
    ExactScalar g1(Degree d);

    Evaluation evaluate(InvariantKind kind, Degree d);

    /// Fills N0 and N1 through d_max so later sweeps only read them.
    void prefill(int d_max);

    [[nodiscard]] kernels::Policy policy() const { return policy_; }
    MemoCache& cache() { return cache_; }
    [[nodiscard]] const MemoCache& cache() const { return cache_; }

private:
    template <class F>
    ExactScalar memo(InvariantKind kind, int d, F&& compute);
    ExactScalar split_sum(int d, const kernels::SplitTerm& term) const;
    // Σ over ordered splittings of N0(d1) N0(d2) d1 d2 C(3d-4, 3d1-2), i.e. 2m.
    ExactScalar section_sum(int d);

    kernels::Policy policy_;
    MemoCache cache_;
};

}  // namespace severi
