// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "golden.hpp"
#include "json.hpp"
#include "oracle/oracle.hpp"
#include "severi/audit.hpp"
#include "severi/cache_file.hpp"
#include "severi/cli.hpp"
#include "severi/invariants.hpp"
#include "severi/table.hpp"

using namespace severi;
namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
    std::string timing;

    void expect(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            detail += (detail.empty() ? "" : "; ") + what;
        }
    }
};

double elapsed_ms(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string cli(const std::vector<std::string>& args, int* code = nullptr) {
    std::ostringstream out, err;
    const int rc = cli::run(args, out, err);
    if (code) *code = rc;
    return out.str();
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

long plane_curve_genus(long degree) { return (degree - 1) * (degree - 2) / 2; }

long choose_small(long n, long k) {
    long r = 1;
    for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// 1. K0(3) = 24 through the CLI, under 1 ms.
Outcome anchor_k0() {
    Outcome o;
    const auto start = Clock::now();
    int code = -1;
    const auto out = cli({"eval", "K0", "3"}, &code);
    const double ms = elapsed_ms(start);
    o.expect(code == 0, "exit code " + std::to_string(code));
    o.expect(out == "24\n", "printed '" + out + "'");
    o.timing = std::to_string(ms) + " ms";
    o.expect(ms < 1.0, "took " + o.timing);
    return o;
}

// 2. N0(1..6) against the oracle and the committed golden values, under 10 ms.
Outcome rational_severi_degrees() {
    Outcome o;
    const std::vector<std::string> expected = {"1", "1", "12", "620", "87304", "26312976"};
    const auto oracle_rows = oracle::evaluate(6);
    const auto golden = golden::load();
    Engine engine;
    const auto start = Clock::now();
    std::vector<std::string> got;
    for (int d = 1; d <= 6; ++d) got.push_back(engine.n0(Degree{d}).to_string());
    const double ms = elapsed_ms(start);
    for (int d = 1; d <= 6; ++d) {
        const auto& want = expected[static_cast<std::size_t>(d - 1)];
        o.expect(got[static_cast<std::size_t>(d - 1)] == want, "N0(" + std::to_string(d) + ")");
        o.expect(oracle::str(oracle_rows[static_cast<std::size_t>(d - 1)].n0) == want,
                 "oracle N0(" + std::to_string(d) + ")");
        o.expect(golden.at(d).at("N0") == want, "golden N0(" + std::to_string(d) + ")");
    }
    o.timing = std::to_string(ms) + " ms";
    o.expect(ms < 10.0, "took " + o.timing);
    return o;
}

// 3. N1(3) = 1, N1(4) = 225, N1(5) = 87192.
//   d=3: C(3,3) N0(3) / 12 = 12 / 12 = 1; every split term carries N1(d2 <= 2) = 0.
//   d=4: C(4,3) 620 / 12 + (1/9) 1*1*3 C(11,2) N1(3) = 620/3 + 55/3 = 225.
//   d=5: C(5,3) 87304 / 12 + (1/9) 1*4 C(14,2) 225 + (4/9) 2*3 C(14,5) 1
//        = 218260/3 + 9100 + 16016/3 = 87192.
Outcome elliptic_counts() {
    Outcome o;
    Engine engine;
    o.expect(engine.n1(Degree{3}) == 1, "N1(3)");
    o.expect(engine.n1(Degree{4}) == 225, "N1(4)");
    o.expect(engine.n1(Degree{5}) == 87192, "N1(5)");
    const ExactScalar by_hand = ExactScalar::fraction(218260, 3) + ExactScalar(9100) + ExactScalar::fraction(16016, 3);
    o.expect(by_hand == 87192, "hand derivation of N1(5)");
    return o;
}

// 4. K1(3) = 0, K1(4) = 840 and K1 = K1 via c2 for 3 <= d <= 12.
Outcome cuspidal_elliptic_counts() {
    Outcome o;
    Engine engine;
    o.expect(engine.k1(Degree{3}) == 0, "K1(3)");
    o.expect(engine.k1(Degree{4}) == 840, "K1(4)");
    for (int d = 3; d <= 12; ++d) {
        o.expect(engine.k1(Degree{d}) == engine.k1_via_c2(Degree{d}), "two-path K1 at d=" + std::to_string(d));
    }
    return o;
}

// 5. g0(3) = 3 from the genus formula and from the discriminant curve of the
// net of cubics through seven points: degree 12, arithmetic genus 55, minus
// 21 line+conic nodes, 7 base-point nodes and 24 cusps.
Outcome linear_genus_cubics() {
    Outcome o;
    Engine engine;
    o.expect(engine.g0(Degree{3}) == 3, "g0(3) = " + engine.g0(Degree{3}).to_string());
    o.expect(engine.g0_via_section(Degree{3}) == 3, "section form of g0(3)");

    const long points = 3 * 3 - 2;
    const long discriminant_degree = 3 * (3 - 1) * (3 - 1);
    const long arithmetic_genus = plane_curve_genus(discriminant_degree);
    const long binodal = choose_small(points, 2);
    const long cusps = 24;
    const long classical = arithmetic_genus - binodal - points - cusps;
    o.expect(arithmetic_genus == 55 && binodal == 21, "discriminant counts");
    o.expect(classical == 3, "classical route gives " + std::to_string(classical));
    return o;
}

// 6. Printed K0 gives -60 at d = 3 and is INFO only; Eq 8 residual at d = 4
// is 2015/2.
Outcome discrepancy_reproduction() {
    Outcome o;
    Engine engine;
    o.expect(engine.k0_printed(Degree{3}) == -60, "k0_printed(3)");
    const auto report = audit::run_full_audit(engine, 5);
    bool found = false;
    for (const auto& c : report.checks()) {
        if (c.id == "K0_PRINTED_VS_ANCHOR") {
            found = true;
            o.expect(c.status == audit::CheckStatus::Info, "probe status");
            o.expect(c.kind == audit::CheckKind::DiscrepancyProbe, "probe kind");
        }
    }
    o.expect(found, "probe missing from report");
    o.expect(!report.has_hard_failure(), "audit has a hard failure");
    int code = -1;
    cli({"audit", "--d-max", "5"}, &code);
    o.expect(code == 0, "audit exit code " + std::to_string(code));
    o.expect(audit::eq8_residual(engine, Degree{4}) == ExactScalar::fraction(2015, 2),
             "eq8 residual " + audit::eq8_residual(engine, Degree{4}).to_string());
    return o;
}

// 7. Properties for 2 <= d <= 12, under 5 s in total.
Outcome property_suite() {
    Outcome o;
    const auto start = Clock::now();
    Engine engine;
    const auto d1 = LinearWeight::identity();
    const auto one = LinearWeight::constant(1);
    for (int d = 2; d <= 12; ++d) {
        const Degree deg{d};
        const auto tag = " at d=" + std::to_string(d);
        o.expect(engine.r_component_count(deg) == engine.reducible_fibre_count(deg), "component count" + tag);
        for (long a = -3; a <= 3; ++a) {
            for (long b = -3; b <= 3; ++b) {
                const auto lhs = engine.t_op(a * d1 + b * one, deg);
                const auto rhs = ExactScalar(a) * engine.t_op(d1, deg) + ExactScalar(b) * engine.t_op(one, deg);
                o.expect(lhs == rhs, "T-linearity" + tag);
            }
        }
        for (auto kind : {InvariantKind::N0, InvariantKind::N1, InvariantKind::K0, InvariantKind::K1,
                          InvariantKind::G0}) {
            const auto eval = engine.evaluate(kind, deg);
            if (!eval.status.in_domain) continue;
            o.expect(eval.value.is_integer() && eval.value.sign() >= 0,
                     std::string(kind_name(kind)) + " integrality" + tag);
        }
    }

    Engine cold;
    Engine warm;
    for (int d = 12; d >= 2; --d) {
        for (auto it = kAllKinds.rbegin(); it != kAllKinds.rend(); ++it) warm.evaluate(*it, Degree{d});
    }
    for (int d = 2; d <= 12; ++d) {
        for (auto kind : kAllKinds) {
            Engine fresh;
            const auto v = fresh.evaluate(kind, Degree{d}).value;
            o.expect(warm.evaluate(kind, Degree{d}).value == v && cold.evaluate(kind, Degree{d}).value == v,
                     "cache determinism");
        }
    }
    const double ms = elapsed_ms(start);
    o.timing = std::to_string(ms) + " ms";
    o.expect(ms < 5000.0, "took " + o.timing);
    return o;
}

// 8. Byte-deterministic tables, cache round trip, poisoned cache refused.
Outcome io_contract() {
    Outcome o;
    for (const char* fmt : {"csv", "json"}) {
        const auto a = cli({"table", "--d-max", "12", "--format", fmt});
        const auto b = cli({"table", "--d-max", "12", "--format", fmt});
        const auto c = cli({"table", "--d-max", "12", "--format", fmt, "--serial"});
        o.expect(!a.empty() && a == b && a == c, std::string(fmt) + " not deterministic");
    }

    const auto dir = fs::temp_directory_path() / "severi_acceptance";
    fs::create_directories(dir);
    const auto cache = dir / "cache.json";
    fs::remove(cache);
    int code = -1;
    cli({"cache", "save", "--d-max", "12", "--cache", cache.string()}, &code);
    o.expect(code == 0, "cache save");
    const auto cold = cli({"table", "--d-max", "12"});
    const auto warm = cli({"table", "--d-max", "12", "--cache", cache.string()}, &code);
    o.expect(code == 0 && warm == cold, "cache round trip");

    // One altered digit: N0(7) = 14616808192 -> 14616808193.
    auto text = slurp(cache);
    const auto pos = text.find("\"14616808192\"");
    o.expect(pos != std::string::npos, "N0(7) not in cache file");
    if (pos != std::string::npos) {
        text[pos + 11] = '3';
        std::ofstream(cache, std::ios::binary | std::ios::trunc) << text;
        cli({"table", "--d-max", "12", "--cache", cache.string()}, &code);
        o.expect(code == 2, "poisoned cache accepted (exit " + std::to_string(code) + ")");
        bool refused = false;
        try {
            cache_load(cache);
        } catch (const CacheFileError&) {
            refused = true;
        }
        o.expect(refused, "cache_load accepted poisoned file");
    }
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
        {"1 anchor K0(3) = 24 via eval, < 1 ms", anchor_k0},
        {"2 N0(1..6) = 1,1,12,620,87304,26312976, < 10 ms", rational_severi_degrees},
        {"3 N1(3,4,5) = 1,225,87192", elliptic_counts},
        {"4 K1(3) = 0, K1(4) = 840, two-path K1 for 3..12", cuspidal_elliptic_counts},
        {"5 g0(3) = 3 by two routes", linear_genus_cubics},
        {"6 printed K0(3) = -60 as INFO, Eq8 residual(4) = 2015/2", discrepancy_reproduction},
        {"7 property suite 2..12, < 5 s", property_suite},
        {"8 I/O determinism, cache round trip, poisoned cache refused", io_contract},
    };
    int failures = 0;
    for (const auto& [name, run] : criteria) {
        Outcome o;
        try {
            o = run();
        } catch (const std::exception& e) {
            o.expect(false, std::string("exception: ") + e.what());
        }
        std::cout << (o.pass ? "PASS" : "FAIL") << "  " << name;
        if (!o.timing.empty()) std::cout << "  (" << o.timing << ")";
        if (!o.pass) std::cout << "  [" << o.detail << "]";
        std::cout << '\n';
        if (!o.pass) ++failures;
    }
    std::cout << (failures == 0 ? "acceptance: all criteria passed" : "acceptance: failures present") << '\n';
    return failures == 0 ? 0 : 1;
}
