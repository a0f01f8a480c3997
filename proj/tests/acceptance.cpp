// Acceptance runner: one line per criterion, nonzero exit on any failure.
//
// Criterion 2 includes the pt-image equality for closed maps. The
// enumeration itself disproves that equality (a three-point closed
// monotone surjection violates it), so the criterion reports FAIL with
// the counterexample; the provable reverse inclusion is verified
// alongside. See the pick-up-extra suite notes in the output.

#include <cstdio>
#include <string>

#include "zariski/suites.hpp"

using namespace zariski;

namespace {

int failures_total = 0;

void report(int index, const std::string& what, bool pass, const std::string& detail) {
    std::printf("criterion %d: %s  [%s]%s%s\n", index, pass ? "PASS" : "FAIL", what.c_str(),
                detail.empty() ? "" : "  ", detail.c_str());
    if (!pass) ++failures_total;
}

std::string counts(const SuiteResult& r) {
    char buf[160];
    std::snprintf(buf, sizeof(buf), "%llu cases, %llu failures, %.1fs", r.cases, r.failures,
                  r.seconds);
    return buf;
}

}  // namespace

int main() {
    // 1. exhaustive operator identities on posets with up to 5 points
    {
        auto basics = suite_spectral_basics(5);
        auto qc = suite_new_qc(5);
        bool time_ok = basics.seconds + qc.seconds < 60.0;
        bool pass = basics.pass() && qc.pass() && time_ok;
        report(1, "spectral-basics + new-qc, posets <= 5", pass,
               counts(basics) + "; " + counts(qc) + (time_ok ? "" : "; over time budget"));
    }

    // 2. image behavior under monotone maps on posets with up to 4 points
    {
        auto r = suite_pick_up_extra(4);
        bool time_ok = r.seconds < 120.0;
        report(2, "pick-up-extra, posets <= 4", r.pass() && time_ok, counts(r));
        for (const auto& n : r.notes) std::printf("    note: %s\n", n.c_str());
        if (!r.pass())
            std::printf(
                "    analysis: the pt clause for closed maps is disproved by the enumeration "
                "itself; gen/inv/patch clauses and the reverse pt inclusion hold with zero "
                "failures\n");
    }

    // 3. truncation coherence between the exact engine and the brute-force oracle
    {
        auto r = suite_truncation(200, 8, 42);
        report(3, "truncation oracle, 3 settings x 200 subsets, n <= 8", r.pass(), counts(r));
        for (const auto& n : r.notes) std::printf("    note: %s\n", n.c_str());
    }

    // 4. limit formulas over the standard model system
    {
        auto r = suite_fundamental(100, 64, 42);
        report(4, "limit formulas over {line, nodal, cuspidal, product} at probe 64", r.pass(),
               counts(r));
        for (const auto& n : r.notes) std::printf("    note: %s\n", n.c_str());
    }

    // 5. Kronecker membership against integer contents
    {
        auto r = suite_kronecker_content(500, 42);
        report(5, "Kronecker vs content on 500 integer pairs", r.pass(), counts(r));
        for (const auto& n : r.notes) std::printf("    note: %s\n", n.c_str());
    }

    // 6. section-5 correspondences with separating-element certificates
    {
        auto r = suite_top_prelim(100, 64, 42);
        report(6, "inv/pt correspondences, 100 subsets per setting", r.pass(), counts(r));
        for (const auto& n : r.notes) std::printf("    note: %s\n", n.c_str());
    }

    // 7. affine fixtures and invertibility witnesses
    {
        auto r = suite_affine_scheme(50, 42);
        report(7, "affine tests + 50 witness tuples per setting", r.pass(), counts(r));
        for (const auto& n : r.notes) std::printf("    note: %s\n", n.c_str());
    }

    // 8. density and essential-prime-divisor fixtures
    {
        auto r = suite_kuhlmann_density(64);
        auto g = suite_geom_prufer(42);
        bool pass = r.pass() && g.pass();
        report(8, "patch density + essential prime divisors + collapse samples", pass,
               counts(r) + "; " + counts(g));
        for (const auto& n : r.notes) std::printf("    note: %s\n", n.c_str());
        for (const auto& n : g.notes) std::printf("    note: %s\n", n.c_str());
    }

    std::printf("summary: %d of 8 criteria pass\n", 8 - failures_total);
    return failures_total;
}
