// Acceptance gate: one line per criterion, PASS or FAIL, with wall time.
// Exits nonzero if any criterion fails its check or its time budget.
#include <chrono>
#include <cstdint>
#include <exception>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "shg/shg.hpp"

using namespace shg;

namespace {

int failures_total = 0;

// Runs one criterion. `body` returns an empty string on success and a reason
// on failure; exceptions and blown time budgets also fail the criterion.
void criterion(int index, const std::string& label, double budget_millis,
               const std::function<std::string()>& body) {
    auto start = std::chrono::steady_clock::now();
    std::string reason;
    try {
        reason = body();
    } catch (const std::exception& e) {
        reason = std::string("unexpected exception: ") + e.what();
    }
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                    .count();
    if (reason.empty() && ms > budget_millis) {
        std::ostringstream over;
        over << "exceeded time budget: " << std::fixed << std::setprecision(0) << ms << " ms > "
             << budget_millis << " ms";
        reason = over.str();
    }
    std::ostringstream line;
    line << (reason.empty() ? "PASS" : "FAIL") << "  " << std::setw(2) << index << "  " << label
         << "  (" << std::fixed << std::setprecision(0) << ms << " ms)";
    if (!reason.empty()) {
        line << "\n          " << reason;
        ++failures_total;
    }
    std::cout << line.str() << std::endl;
}

std::string suite_reason(const SuiteReport& r, std::uint64_t want_cases) {
    if (r.cases_run != want_cases)
        return "ran " + std::to_string(r.cases_run) + " cases, wanted " +
               std::to_string(want_cases);
    if (!r.failures.empty()) {
        const SuiteFailure& f = r.failures.front();
        return std::to_string(r.failures.size()) + " failure(s); first at case " +
               std::to_string(f.case_index) + ": " + f.reason;
    }
    return "";
}

std::string check_bound_row(int n, int k, int t, std::uint64_t want) {
    BoundReport r = erdos_bound(n, k, t);
    if (r.erdos != u128{want})
        return "bound at (" + std::to_string(n) + "," + std::to_string(k) + "," +
               std::to_string(t) + ") is " + to_decimal(r.erdos) + ", wanted " +
               std::to_string(want);
    return "";
}

std::string check_extremal_point(int n, int k, int t, std::uint64_t want) {
    std::string at =
        "(" + std::to_string(n) + "," + std::to_string(k) + "," + std::to_string(t) + ")";
    ExtremalResult r = max_edges_no_t_matching(n, k, t);
    if (r.max_edges != want)
        return "extremal count at " + at + " is " + std::to_string(r.max_edges) + ", wanted " +
               std::to_string(want);
    BoundReport b = erdos_bound(n, k, t);
    if (u128{r.max_edges} != b.erdos)
        return "extremal count at " + at + " differs from the bound " + to_decimal(b.erdos);
    if (has_t_matching(r.extremal, t).found)
        return "extremal family at " + at + " admits " + std::to_string(t) + " disjoint edges";
    int nu = max_matching(r.extremal).nu;
    if (nu != t - 1)
        return "extremal family at " + at + " has matching number " + std::to_string(nu) +
               ", wanted " + std::to_string(t - 1);
    return "";
}

std::string check_walkthrough(int n, int k, int t) {
    std::string at =
        "(" + std::to_string(n) + "," + std::to_string(k) + "," + std::to_string(t) + ")";
    SetFamily f = detail::cover_plus_one(n, k, t);
    ExtractionReport report = t_disjoint_by_thm1(f, t);
    if (auto why = matching_violation(f, report.matching))
        return "extracted matching at " + at + " invalid: " + *why;
    if (report.matching.size() != static_cast<std::size_t>(t))
        return "extracted matching at " + at + " has size " +
               std::to_string(report.matching.size());
    if (report.case_trace.empty()) return "no case trace recorded at " + at;
    if (!has_t_matching(f, t).found)
        return "solver found no " + std::to_string(t) + " disjoint edges at " + at;
    return "";
}

}  // namespace

int main() {
    criterion(1, "bound value table", 1'000, [] {
        struct Row {
            int n, k, t;
            std::uint64_t want;
        };
        const Row rows[] = {
            {9, 3, 2, 28}, {6, 2, 3, 10}, {5, 2, 2, 4},  {12, 3, 2, 55},
            {8, 2, 4, 21}, {6, 2, 2, 5},  {10, 2, 2, 9}, {7, 3, 2, 15},
        };
        for (const Row& r : rows)
            if (std::string why = check_bound_row(r.n, r.k, r.t, r.want); !why.empty()) return why;
        return std::string{};
    });

    criterion(2, "exhaustive extremal counts match the bound", 600'000, [] {
        struct Point {
            int n, k, t;
            std::uint64_t want;
        };
        const Point points[] = {{5, 2, 2, 4}, {6, 2, 3, 10}, {6, 3, 2, 10}};
        for (const Point& p : points)
            if (std::string why = check_extremal_point(p.n, p.k, p.t, p.want); !why.empty())
                return why;
        return std::string{};
    });

    criterion(3, "construction sizes and matching numbers", 60'000, [] {
        for (int n = 1; n <= 12; ++n)
            for (int k = 1; k <= std::min(4, n); ++k)
                for (int t = 1; t <= 3; ++t) {
                    if (k * t > n) continue;
                    std::string at = "(" + std::to_string(n) + "," + std::to_string(k) + "," +
                                     std::to_string(t) + ")";
                    SetFamily cover = gen_cover_construction(n, k, t);
                    if (u128{cover.size()} != cover_bound(n, k, t))
                        return "cover construction size off at " + at;
                    if (max_matching(cover).nu != t - 1)
                        return "cover construction matching number off at " + at;
                    SetFamily clique = gen_clique_construction(n, k, t);
                    if (u128{clique.size()} != clique_bound(k, t))
                        return "clique construction size off at " + at;
                    if (max_matching(clique).nu != t - 1)
                        return "clique construction matching number off at " + at;
                }
        return std::string{};
    });

    criterion(4, "shift invariance suite, 1000 cases", 300'000,
              [] { return suite_reason(run_suite("lemma1", 42, 1000), 1000); });

    criterion(5, "side assignment suite, 200 cases", 300'000,
              [] { return suite_reason(run_suite("lemma2", 42, 200), 200); });

    criterion(6, "pullback and lift suite, 500 cases", 300'000,
              [] { return suite_reason(run_suite("pullback", 42, 500), 500); });

    criterion(7, "rainbow extraction suite, 300 cases", 600'000,
              [] { return suite_reason(run_suite("lemma3", 42, 300), 300); });

    criterion(8, "single-family extraction walkthroughs", 60'000, [] {
        const int points[][3] = {{25, 2, 2}, {30, 2, 2}, {40, 2, 2}, {55, 3, 2}};
        for (const auto& p : points)
            if (std::string why = check_walkthrough(p[0], p[1], p[2]); !why.empty()) return why;
        return std::string{};
    });

    criterion(9, "regime and gap integer grids", 10'000, [] {
        for (int k = 2; k <= 6; ++k)
            for (int t = 2; t * (k + 1) <= 200; ++t)
                for (int n = t * (k + 1); n <= 200; ++n) {
                    BoundReport r = erdos_bound(n, k, t);
                    if (r.regime != Regime::CoverDominant || r.cover <= r.clique)
                        return "regime claim fails at n=" + std::to_string(n) + " k=" +
                               std::to_string(k) + " t=" + std::to_string(t);
                }
        for (int k = 2; k <= 6; ++k)
            for (int t = 2; 3 * k * k * t < 200; ++t)
                for (int n = 3 * k * k * t + 1; n <= 200; ++n) {
                    GapCheck g = degree_sum_gap_check(n, k, t);
                    if (!g.holds || g.lhs >= g.rhs)
                        return "gap claim fails at n=" + std::to_string(n) + " k=" +
                               std::to_string(k) + " t=" + std::to_string(t);
                }
        return std::string{};
    });

    criterion(10, "byte-identical reports on repeated runs", 300'000, [] {
        struct Rerun {
            const char* suite;
            std::uint64_t seed;
            std::uint64_t cases;
        };
        const Rerun reruns[] = {
            {"lemma1", 9, 120}, {"lemma3", 7, 30}, {"pullback", 5, 40}, {"thm2", 3, 3}};
        for (const Rerun& r : reruns) {
            std::string a = to_json(run_suite(r.suite, r.seed, r.cases)).dump();
            std::string b = to_json(run_suite(r.suite, r.seed, r.cases)).dump();
            if (a != b) return std::string("suite ") + r.suite + " reports differ between runs";
        }
        std::string b1 = to_json(erdos_bound(9, 3, 2)).dump();
        std::string b2 = to_json(erdos_bound(9, 3, 2)).dump();
        if (b1 != b2) return std::string("bound reports differ between runs");
        SetFamily f = detail::cover_plus_one(25, 2, 2);
        std::string e1 = to_json(t_disjoint_by_thm1(f, 2)).dump();
        std::string e2 = to_json(t_disjoint_by_thm1(f, 2)).dump();
        if (e1 != e2) return std::string("extraction reports differ between runs");
        return std::string{};
    });

    if (failures_total == 0) {
        std::cout << "ACCEPTANCE: all 10 criteria passed" << std::endl;
        return 0;
    }
    std::cout << "ACCEPTANCE: " << failures_total << " criterion(s) failed" << std::endl;
    return 1;
}
