// Acceptance suite: one pass/fail line per criterion, exit 0 iff all pass.

#include <chrono>
#include <iostream>

#include "ellcob/verify.hpp"

using namespace ellcob;

namespace {

int failures = 0;

void report(int index, const std::string& title, const verify::CheckResult& r,
            long elapsed_ms, long budget_ms = 0) {
    bool pass = r.pass && (budget_ms == 0 || elapsed_ms <= budget_ms);
    if (!pass) ++failures;
    std::cout << "criterion " << index << " [" << title << "]: "
              << (pass ? "PASS" : "FAIL") << " (" << elapsed_ms << " ms) — " << r.detail;
    if (r.pass && budget_ms != 0 && elapsed_ms > budget_ms)
        std::cout << " [exceeded " << budget_ms << " ms budget]";
    std::cout << "\n";
}

template <typename F>
std::pair<verify::CheckResult, long> timed(F&& f) {
    auto t0 = std::chrono::steady_clock::now();
    verify::CheckResult r = f();
    auto t1 = std::chrono::steady_clock::now();
    return {r, std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count()};
}

}  // namespace

int main() {
    const unsigned seed = 20260826;

    // Criterion 1 budget covers calibration, so build the series inside it.
    auto [r1, t1] = timed([&] {
        GenusSeries g = curve_log(krichever_curve(), 7);
        return verify::genus_anchors(g);
    });
    report(1, "genus anchors", r1, t1, 10000);

    GenusSeries g = curve_log(krichever_curve(), 12);

    auto [r2, t2] = timed([&] { return verify::star_values(1); });
    report(2, "star values", r2, t2);

    std::vector<FlopDatum> flops = verify::flop_test_data(seed, 20);
    auto [r3, t3] = timed([&] { return verify::flop_formula(flops); });
    report(3, "flop formula cross-check", r3, t3, 60000);

    auto [r4, t4] = timed([&] { return verify::flop_kernel(flops, g, 7); });
    report(4, "genus kernel on flops", r4, t4);

    auto [r5, t5] = timed([&] { return verify::calabi_yau(); });
    report(5, "Calabi-Yau construction", r5, t5);

    auto [r6, t6] = timed([&] { return verify::generator_witnesses(1); });
    report(6, "generator existence", r6, t6, 300000);

    auto [r7, t7] = timed([&] { return verify::e2_poincare(); });
    report(7, "E2 Poincare counts", r7, t7);

    auto [r8, t8] = timed([&] { return verify::msl_degrees(); });
    report(8, "MSL generator degrees", r8, t8);

    auto [r9, t9] = timed([&] { return verify::koszul_dims(); });
    report(9, "Koszul Ext", r9, t9);

    auto [r10, t10] = timed([&] { return verify::pushforward_oracle(); });
    report(10, "pushforward oracle", r10, t10);

    auto [r11, t11] = timed([&] { return verify::log_power_sum_identity(seed, 30); });
    report(11, "footnote identity", r11, t11);

    auto [r12, t12] = timed([&] { return verify::image_ring(g, 1); });
    report(12, "image ring", r12, t12);

    if (failures == 0) {
        std::cout << "acceptance: 12/12 criteria pass\n";
        return 0;
    }
    std::cout << "acceptance: " << (12 - failures) << "/12 criteria pass\n";
    return 1;
}
