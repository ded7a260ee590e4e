#pragma once

// Convolution kernels over ordered splittings d1 + d2 = d, d1, d2 >= 1.
//
// Every invariant in the engine reduces to sums of this shape. The serial
// kernel is the reference; the OpenMP kernel evaluates terms concurrently and
// then adds them in d1 order, so both return the same value bit for bit.
// Terms passed to the parallel kernel must only read shared state.

#include <functional>
#include <vector>

#include "severi/exact.hpp"

namespace severi::kernels {

enum class Policy { Serial, Parallel };

/// Splittings with d below this are always summed serially.
inline constexpr int kParallelThreshold = 16;

using SplitTerm = std::function<ExactScalar(int d1, int d2)>;

inline ExactScalar split_sum_serial(int d, const SplitTerm& term) {
    ExactScalar total;
    for (int d1 = 1; d1 < d; ++d1) total += term(d1, d - d1);
    return total;
}

inline ExactScalar split_sum_parallel(int d, const SplitTerm& term) {
    if (d < 2) return {};
    std::vector<ExactScalar> terms(static_cast<std::size_t>(d - 1));
#pragma omp parallel for schedule(dynamic)
    for (int d1 = 1; d1 < d; ++d1) terms[static_cast<std::size_t>(d1 - 1)] = term(d1, d - d1);
    ExactScalar total;
    for (const auto& t : terms) total += t;
    return total;
}

inline ExactScalar split_sum(int d, const SplitTerm& term, Policy policy) {
    if (policy == Policy::Parallel && d >= kParallelThreshold) return split_sum_parallel(d, term);
    return split_sum_serial(d, term);
}

/// Number of OpenMP threads available, 1 without OpenMP.
int max_threads();

}  // namespace severi::kernels
