#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "severi/invariants.hpp"
#include "severi/kernels.hpp"
#include "severi/table.hpp"

using namespace severi;

TEST_CASE("split sums: parallel kernel reproduces the serial reference") {
    for (int d : {1, 2, 3, 17, 64, 200}) {
        const kernels::SplitTerm term = [d](int d1, int d2) {
            return ExactScalar::fraction(d1 * d1 - 3 * d2, d1 + d2 + 1) * binom(3L * d - 1, 3L * d1 - 1);
        };
        INFO("d=", d);
        CHECK(kernels::split_sum_parallel(d, term) == kernels::split_sum_serial(d, term));
        CHECK(kernels::split_sum(d, term, kernels::Policy::Parallel) == kernels::split_sum_serial(d, term));
    }
}

TEST_CASE("split sums over fewer than two parts are empty") {
    const kernels::SplitTerm one = [](int, int) { return ExactScalar(1); };
    CHECK(kernels::split_sum_serial(1, one) == 0);
    CHECK(kernels::split_sum_parallel(1, one) == 0);
    CHECK(kernels::split_sum_serial(5, one) == 4);
}

TEST_CASE("serial and parallel engines agree") {
    Engine serial(kernels::Policy::Serial);
    Engine parallel(kernels::Policy::Parallel);
    for (int d = 1; d <= 40; d += 3) {
        for (auto kind : kAllKinds) {
            REQUIRE(serial.evaluate(kind, Degree{d}).value == parallel.evaluate(kind, Degree{d}).value);
        }
    }
}

TEST_CASE("serial and parallel table sweeps render identically") {
    Engine a(kernels::Policy::Serial);
    Engine b(kernels::Policy::Parallel);
    const auto serial = build_table_serial(a, 30, kAllKinds);
    const auto parallel = build_table_parallel(b, 30, kAllKinds);
    REQUIRE(serial.size() == 30);
    REQUIRE(parallel.size() == 30);
    CHECK(render_csv(serial) == render_csv(parallel));
    CHECK(render_json(serial) == render_json(parallel));
}

TEST_CASE("max_threads reports at least one") { CHECK(kernels::max_threads() >= 1); }
