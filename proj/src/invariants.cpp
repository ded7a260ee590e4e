#include "severi/invariants.hpp"

#include <algorithm>
#include <cctype>
#include <mutex>

namespace severi {

namespace {

constexpr std::array<std::string_view, kAllKinds.size()> kKindNames = {
    "N0", "N1", "K0", "K1", "G0", "G1", "OMEGA", "M", "K0_PRINTED", "NODES", "RCOUNT", "LR",
};

std::size_t index_of(InvariantKind kind) { return static_cast<std::size_t>(kind); }

}  // namespace

std::string_view kind_name(InvariantKind kind) { return kKindNames[index_of(kind)]; }

std::optional<InvariantKind> parse_kind(std::string_view name) {
    std::string upper(name);
    std::transform(upper.begin(), upper.end(), upper.begin(),
                   [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
    for (auto kind : kAllKinds) {
        if (kind_name(kind) == upper) return kind;
    }
    return std::nullopt;
}

std::string_view reason_code(DomainReason reason) {
    switch (reason) {
        case DomainReason::Ok: return "OK";
        case DomainReason::BelowMinDegree: return "BELOW_MIN_DEGREE";
        case DomainReason::DegenerateGeometry: return "DEGENERATE_GEOMETRY";
    }
    return "OK";
}

DomainStatus domain_status(InvariantKind kind, Degree deg) {
    const int d = deg.value();
    constexpr DomainStatus ok{};
    constexpr DomainStatus below{false, DomainReason::BelowMinDegree};
    constexpr DomainStatus degenerate{false, DomainReason::DegenerateGeometry};
    switch (kind) {
        case InvariantKind::N0:
        case InvariantKind::N1:
        case InvariantKind::OMEGA:
            return ok;
        case InvariantKind::K0:
            return d < 3 ? degenerate : ok;
        case InvariantKind::K0_PRINTED:
        case InvariantKind::M:
        case InvariantKind::NODES:
        case InvariantKind::RCOUNT:
        case InvariantKind::LR:
            return d < 2 ? below : ok;
        case InvariantKind::K1:
        case InvariantKind::G0:
            return d < 3 ? below : ok;
        case InvariantKind::G1:
            // At d = 3 the evaluation map is birational and the printed genus
            // formula is not integral.
            if (d < 3) return below;
            return d == 3 ? degenerate : ok;
    }
    return ok;
}

std::string Evaluation::flag_text() const {
    std::string text;
    if (!status.in_domain) text = std::string(reason_code(status.reason));
    if (!integral()) text += text.empty() ? "non-integral" : " non-integral";
    return text;
}

// MemoCache

MemoCache::MemoCache(const MemoCache& other) {
    std::shared_lock lock(other.mutex_);
    columns_ = other.columns_;
}

MemoCache& MemoCache::operator=(const MemoCache& other) {
    if (this == &other) return *this;
    std::array<Column, kAllKinds.size()> copy;
    {
        std::shared_lock lock(other.mutex_);
        copy = other.columns_;
    }
    std::unique_lock lock(mutex_);
    columns_ = std::move(copy);
    return *this;
}

std::optional<ExactScalar> MemoCache::lookup(InvariantKind kind, int d) const {
    std::shared_lock lock(mutex_);
    const auto& column = columns_[index_of(kind)];
    if (auto it = column.find(d); it != column.end()) return it->second;
    return std::nullopt;
}

void MemoCache::store(InvariantKind kind, int d, const ExactScalar& value) {
    std::unique_lock lock(mutex_);
    auto [it, inserted] = columns_[index_of(kind)].try_emplace(d, value);
    if (!inserted && it->second != value) {
        throw CacheConflict("cache conflict for " + std::string(kind_name(kind)) + " at d=" + std::to_string(d) +
                            ": stored " + it->second.to_string() + ", computed " + value.to_string());
    }
}

MemoCache::Column MemoCache::column(InvariantKind kind) const {
    std::shared_lock lock(mutex_);
    return columns_[index_of(kind)];
}

std::size_t MemoCache::size() const {
    std::shared_lock lock(mutex_);
    std::size_t n = 0;
    for (const auto& c : columns_) n += c.size();
    return n;
}

void MemoCache::clear() {
    std::unique_lock lock(mutex_);
    for (auto& c : columns_) c.clear();
}

// Engine

template <class F>
ExactScalar Engine::memo(InvariantKind kind, int d, F&& compute) {
    if (auto hit = cache_.lookup(kind, d)) return *hit;
    ExactScalar value = compute();
    cache_.store(kind, d, value);
    return value;
}

ExactScalar Engine::split_sum(int d, const kernels::SplitTerm& term) const {
    return kernels::split_sum(d, term, policy_);
}

void Engine::prefill(int d_max) {
    if (d_max < 1) return;
    reserve_binomials(3L * d_max);
    n1(Degree{d_max});
}

ExactScalar Engine::n0(Degree deg) {
    const int d = deg.value();
    if (auto hit = cache_.lookup(InvariantKind::N0, d)) return *hit;
    reserve_binomials(3L * d);
    for (int k = 1; k <= d; ++k) {
        memo(InvariantKind::N0, k, [&] {
            if (k == 1) return ExactScalar(1);
            return split_sum(k, [&](int d1, int d2) {
                const ExactScalar product = n0(Degree{d1}) * n0(Degree{d2});
                const BigInt a = d1, b = d2;
                const BigInt bracket = a * a * b * b * binom_int(3L * k - 4, 3L * d1 - 2) -
                                       a * a * a * b * binom_int(3L * k - 4, 3L * d1 - 1);
                return product * ExactScalar(bracket);
            });
        });
    }
    return *cache_.lookup(InvariantKind::N0, d);
}

ExactScalar Engine::n1(Degree deg) {
    const int d = deg.value();
    if (auto hit = cache_.lookup(InvariantKind::N1, d)) return *hit;
    n0(deg);
    for (int k = 1; k <= d; ++k) {
        memo(InvariantKind::N1, k, [&] {
            // No smooth genus-one plane curves below degree 3.
            if (k < 3) return ExactScalar(0);
            const Degree dk{k};
            return ExactScalar::fraction(1, 12) * binom(k, 3) * n0(dk) +
                   t_op(LinearWeight{3, -2}, dk) / ExactScalar(9);
        });
    }
    return *cache_.lookup(InvariantKind::N1, d);
}

ExactScalar Engine::t_op(LinearWeight u, Degree deg) {
    const int d = deg.value();
    if (d < 2) return {};
    // Terms read N0 and N1 strictly below d.
    n1(Degree{d - 1});
    n0(deg);
    return split_sum(d, [&](int d1, int d2) {
        return eval_weight(u, d1) * ExactScalar(d1 * d2) * ExactScalar(binom_int(3L * d - 1, 3L * d1 - 1)) *
               n0(Degree{d1}) * n1(Degree{d2});
    });
}

ExactScalar Engine::omega(Degree deg) {
    const int d = deg.value();
    return memo(InvariantKind::OMEGA, d, [&] {
        return ExactScalar::fraction(static_cast<long>(d - 1) * (d - 2), 24) * n0(deg);
    });
}

ExactScalar Engine::section_sum(int d) {
    if (d < 2) return {};
    n0(Degree{d});
    return split_sum(d, [&](int d1, int d2) {
        return n0(Degree{d1}) * n0(Degree{d2}) * ExactScalar(d1 * d2) *
               ExactScalar(binom_int(3L * d - 4, 3L * d1 - 2));
    });
}

ExactScalar Engine::m_invariant(Degree deg) {
    const int d = deg.value();
    return memo(InvariantKind::M, d, [&] { return section_sum(d) / ExactScalar(2); });
}

ExactScalar Engine::reducible_fibre_count(Degree deg) {
    const int d = deg.value();
    return memo(InvariantKind::NODES, d, [&] {
        if (d < 2) return ExactScalar(0);
        n0(deg);
        // Ordered splittings see every fibre twice.
        return split_sum(d, [&](int d1, int d2) {
                   return n0(Degree{d1}) * n0(Degree{d2}) * ExactScalar(d1 * d2) *
                          ExactScalar(binom_int(3L * d - 2, 3L * d1 - 1));
               }) /
               ExactScalar(2);
    });
}

ExactScalar Engine::r_component_count(Degree deg) {
    const int d = deg.value();
    return memo(InvariantKind::RCOUNT, d, [&] {
        if (d < 2) return ExactScalar(0);
        n0(deg);
        // d1 is the degree of the component through A1, which carries
        // 3d1 - 2 of the remaining 3d - 3 points.
        return split_sum(d, [&](int d1, int d2) {
            return n0(Degree{d1}) * n0(Degree{d2}) * ExactScalar(d1 * d2) *
                   ExactScalar(binom_int(3L * d - 3, 3L * d1 - 2));
        });
    });
}

ExactScalar Engine::lr(Degree deg) {
    const int d = deg.value();
    return memo(InvariantKind::LR, d, [&] {
        if (d < 2) return ExactScalar(0);
        n0(deg);
        // Blown-down component has plane degree d2.
        return split_sum(d, [&](int d1, int d2) {
            return ExactScalar(d2) * n0(Degree{d1}) * n0(Degree{d2}) * ExactScalar(d1 * d2) *
                   ExactScalar(binom_int(3L * d - 3, 3L * d1 - 2));
        });
    });
}

ExactScalar Engine::k0(Degree deg) {
    const int d = deg.value();
    return memo(InvariantKind::K0, d, [&] {
        // c2 of f*T_P2 (x) T_v^*, with R^2 = -#R since R is a disjoint union
        // of (-1)-curves, minus the nodes of the reducible fibres.
        const ExactScalar c2 = ExactScalar(3) * n0(deg) - ExactScalar(3 * d) * m_invariant(deg) +
                               ExactScalar(3) * lr(deg) - r_component_count(deg);
        return c2 - reducible_fibre_count(deg);
    });
}

ExactScalar Engine::k0_printed(Degree deg) {
    const int d = deg.value();
    return memo(InvariantKind::K0_PRINTED, d, [&] {
        n0(deg);
        const ExactScalar sum = split_sum(d, [&](int d1, int d2) {
            const ExactScalar bracket =
                ExactScalar(3 * d2 - 2) * ExactScalar(binom_int(3L * d - 2, 3L * d1 - 2)) -
                ExactScalar::fraction(3, 2) * ExactScalar(binom_int(3L * d - 4, 3L * d1 - 2));
            return n0(Degree{d1}) * n0(Degree{d2}) * ExactScalar(d1 * d2) * bracket;
        });
        return ExactScalar(3) * n0(deg) - sum;
    });
}

ExactScalar Engine::k1(Degree deg) {
    const int d = deg.value();
    return memo(InvariantKind::K1, d, [&] {
        if (d < 3) return ExactScalar(0);
        return ExactScalar(3) * n1(deg) +
               ExactScalar::fraction(static_cast<long>(d - 1) * (d - 2) * (d - 4), 8) * n0(deg) +
               t_op(LinearWeight{3, -2}, deg);
    });
}

ExactScalar Engine::k1_via_c2(Degree deg) {
    const int d = deg.value();
    return ExactScalar(3) * n1(deg) + ExactScalar(3 * d - 12) * omega(deg) +
           ExactScalar(3) * t_op(LinearWeight::identity(), deg) -
           ExactScalar(2) * t_op(LinearWeight::constant(1), deg);
}

ExactScalar Engine::g0(Degree deg) {
    const int d = deg.value();
    return memo(InvariantKind::G0, d, [&] {
        return (k0(deg) - section_sum(d) + ExactScalar(2)) / ExactScalar(2);
    });
}

ExactScalar Engine::g0_via_section(Degree deg) {
    // s1 . (ramification relation): m + 2g - 2 = -m + K0.
    const ExactScalar m = m_invariant(deg);
    return (k0(deg) - m - m + ExactScalar(2)) / ExactScalar(2);
}

ExactScalar Engine::g1(Degree deg) {
    const int d = deg.value();
    return memo(InvariantKind::G1, d, [&] {
        const ExactScalar rhs = k1(deg) - ExactScalar::fraction(9, 2) * n1(deg) +
                                ExactScalar::fraction(static_cast<long>(d - 1) * (d - 2) * (3 * d - 4), 24) * n0(deg) +
                                t_op(LinearWeight{3, -2}, deg) / ExactScalar(2);
        return (rhs + ExactScalar(2)) / ExactScalar(2);
    });
}

Evaluation Engine::evaluate(InvariantKind kind, Degree d) {
    ExactScalar value;
    switch (kind) {
        case InvariantKind::N0: value = n0(d); break;
        case InvariantKind::N1: value = n1(d); break;
        case InvariantKind::K0: value = k0(d); break;
        case InvariantKind::K1: value = k1(d); break;
        case InvariantKind::G0: value = g0(d); break;
        case InvariantKind::G1: value = g1(d); break;
        case InvariantKind::OMEGA: value = omega(d); break;
        case InvariantKind::M: value = m_invariant(d); break;
        case InvariantKind::K0_PRINTED: value = k0_printed(d); break;
        case InvariantKind::NODES: value = reducible_fibre_count(d); break;
        case InvariantKind::RCOUNT: value = r_component_count(d); break;
        case InvariantKind::LR: value = lr(d); break;
    }
    return {std::move(value), domain_status(kind, d)};
}

}  // namespace severi
