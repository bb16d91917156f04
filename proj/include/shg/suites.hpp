#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "shg/bounds.hpp"
#include "shg/errors.hpp"
#include "shg/extract.hpp"
#include "shg/family.hpp"
#include "shg/io.hpp"
#include "shg/report_json.hpp"
#include "shg/rng.hpp"
#include "shg/shift.hpp"
#include "shg/solver.hpp"

namespace shg {

struct SuiteFailure {
    std::uint64_t case_index = 0;
    std::string reason;
    std::string instance;  // serialized SHG/SHGM reproduction input
};

struct SuiteReport {
    std::string suite;
    std::uint64_t seed = 0;
    std::uint64_t cases_run = 0;
    std::vector<SuiteFailure> failures;
    double wall_millis = 0.0;  // informational; kept out of the JSON form
};

// The JSON form is a pure function of (suite, seed, cases, failures) so that
// repeated runs are byte-identical; wall time stays in the text report only.
inline nlohmann::json to_json(const SuiteReport& r) {
    nlohmann::json failures = nlohmann::json::array();
    for (const SuiteFailure& f : r.failures)
        failures.push_back(
            {{"case", f.case_index}, {"reason", f.reason}, {"instance", f.instance}});
    return {
        {"schema", 1},
        {"suite", r.suite},
        {"seed", r.seed},
        {"cases", r.cases_run},
        {"failures", failures},
    };
}

namespace detail {

struct SuiteRun {
    SuiteReport report;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    explicit SuiteRun(std::string name, std::uint64_t seed) {
        report.suite = std::move(name);
        report.seed = seed;
    }

    void fail(std::uint64_t case_index, const std::string& reason, const std::string& instance) {
        report.failures.push_back({case_index, reason, instance});
    }

    SuiteReport finish(std::uint64_t cases_run) {
        report.cases_run = cases_run;
        report.wall_millis = std::chrono::duration<double, std::milli>(
                                 std::chrono::steady_clock::now() - start)
                                 .count();
        return std::move(report);
    }
};

// Wraps a per-case body so that any library error becomes a recorded failure
// with the offending instance attached, never an aborted suite.
template <typename Body>
inline void guarded_case(SuiteRun& run, std::uint64_t case_index, const std::string& instance,
                         Body&& body) {
    try {
        body();
    } catch (const error& e) {
        run.fail(case_index, std::string("unexpected error: ") + e.what(), instance);
    }
}

inline std::uint64_t small_count(Xorshift64Star& rng, std::uint64_t cap, std::uint64_t most) {
    return rng.next_below(std::min(cap, most) + 1);
}

// Random (k-1)-subsets of [n] minus `center`, each completed by `center`.
inline std::vector<Edge> random_star_edges(Xorshift64Star& rng, int n, int k, Vertex center,
                                           std::uint64_t count) {
    std::uint64_t universe = to_u64(binom(n - 1, k - 1));
    std::vector<Edge> out;
    for (std::uint64_t r : sample_distinct(rng, universe, count)) {
        Edge sub = colex_unrank(r, n - 1, k - 1);
        std::vector<Vertex> vs;
        vs.reserve(static_cast<std::size_t>(k));
        for (Vertex v : sub) vs.push_back(v < center ? v : v + 1);
        vs.push_back(center);
        out.emplace_back(std::move(vs));
    }
    return out;
}

}  // namespace detail

// Shift applications preserve size and uniformity, never raise the matching
// number, and never create a rainbow matching where none existed.
inline SuiteReport run_suite_lemma1(std::uint64_t seed, std::uint64_t cases,
                                    const SolverLimits& limits = {}) {
    detail::SuiteRun run("lemma1", seed);
    Xorshift64Star master(seed);
    for (std::uint64_t c = 0; c < cases; ++c) {
        int n = master.range(4, 10);
        int k = master.range(1, std::min(4, n));
        std::uint64_t m = detail::small_count(master, to_u64(binom(n, k)), 30);
        SetFamily f = random_family({n, k, m, {}, master.next()});
        ShiftOp op{master.range(2, n), 0};
        op.j = master.range(1, op.i - 1);
        std::string instance = to_shg_string(f) + "# shift i=" + std::to_string(op.i) +
                               " j=" + std::to_string(op.j) + "\n";
        detail::guarded_case(run, c, instance, [&] {
            SetFamily shifted = apply_shift(f, op);
            if (shifted.size() != f.size())
                return run.fail(c, "shift changed the edge count", instance);
            if (shifted.k() != f.k() || shifted.n() != f.n())
                return run.fail(c, "shift changed the family signature", instance);
            int nu_before = max_matching(f, limits).nu;
            int nu_after = max_matching(shifted, limits).nu;
            if (nu_after > nu_before)
                return run.fail(c,
                                "matching number rose from " + std::to_string(nu_before) +
                                    " to " + std::to_string(nu_after),
                                instance);
        });

        // Colored half: rainbow-freeness survives a shift.
        int t = master.range(2, 3);
        std::vector<RandomFamilySpec> specs;
        for (int i = 0; i < t; ++i) {
            int ki = master.range(1, std::min(3, n));
            std::uint64_t mi = detail::small_count(master, to_u64(binom(n, ki)), 12);
            specs.push_back({n, ki, mi, {}, master.next()});
        }
        ColoredFamilies cf = random_colored(specs);
        ShiftOp cop{master.range(2, n), 0};
        cop.j = master.range(1, cop.i - 1);
        std::string cinstance = to_shgm_string(cf) + "# shift i=" + std::to_string(cop.i) +
                                " j=" + std::to_string(cop.j) + "\n";
        detail::guarded_case(run, c, cinstance, [&] {
            if (rainbow_matching(cf, limits).matching.has_value()) return;  // not a control
            ColoredFamilies shifted = apply_shift(cf, cop);
            if (rainbow_matching(shifted, limits).matching.has_value())
                run.fail(c, "shift created a rainbow matching", cinstance);
        });
    }
    return run.finish(cases);
}

namespace detail {

// Draws a colored instance with sum of uniformities at most n. Families are
// either sampled inside the star at vertex 1 (guaranteeing no rainbow
// matching for t >= 2) or freely.
inline ColoredFamilies random_bounded_colored(Xorshift64Star& rng, int n, int t, bool star_style,
                                              std::uint64_t max_size) {
    std::vector<int> ks;
    for (;;) {
        ks.clear();
        int total = 0;
        for (int i = 0; i < t; ++i) {
            int ki = rng.range(1, 3);
            ks.push_back(ki);
            total += ki;
        }
        if (total <= n) break;
    }
    std::vector<SetFamily> fams;
    fams.reserve(static_cast<std::size_t>(t));
    for (int i = 0; i < t; ++i) {
        int k = ks[static_cast<std::size_t>(i)];
        if (star_style) {
            std::uint64_t cap = to_u64(binom(n - 1, k - 1));
            std::uint64_t m = 1 + small_count(rng, cap - 1, max_size - 1);
            fams.push_back(make_family(n, k, random_star_edges(rng, n, k, 1, m)));
        } else {
            std::uint64_t cap = to_u64(binom(n, k));
            std::uint64_t m = 1 + small_count(rng, cap - 1, max_size - 1);
            fams.push_back(random_family({n, k, m, {}, rng.next()}));
        }
    }
    return ColoredFamilies(n, std::move(fams));
}

}  // namespace detail

// On fully compressed instances with no rainbow matching, every way of
// assigning each family to one side of its decomposition is also rainbow-free.
inline SuiteReport run_suite_lemma2(std::uint64_t seed, std::uint64_t cases,
                                    const SolverLimits& limits = {}) {
    detail::SuiteRun run("lemma2", seed);
    Xorshift64Star master(seed);
    std::uint64_t produced = 0;
    const std::uint64_t max_attempts = cases * 80 + 80;
    for (std::uint64_t attempt = 0; produced < cases && attempt < max_attempts; ++attempt) {
        int n = master.range(5, 9);
        int t = master.range(2, 3);
        // Free samples usually admit a rainbow matching; fall back to star
        // samples (never rainbow) so target counts are always reachable.
        bool star_style = (attempt % 4) != 0;
        ColoredFamilies cf = detail::random_bounded_colored(master, n, t, star_style, 10);
        ColoredFamilies compressed = compress_to_target(cf, n).first;
        if (rainbow_matching(compressed, limits).matching.has_value()) continue;
        std::uint64_t c = produced++;
        std::string instance = to_shgm_string(compressed);
        detail::guarded_case(run, c, instance, [&] {
            for (unsigned mask = 0; mask < (1u << t); ++mask) {
                std::vector<SetFamily> parts;
                parts.reserve(static_cast<std::size_t>(t));
                for (int i = 0; i < t; ++i) {
                    Decomposition d = decompose(compressed[i]);
                    parts.push_back((mask >> i) & 1u ? std::move(d.with_n)
                                                     : std::move(d.without_n));
                }
                ColoredFamilies side(n - 1, std::move(parts));
                if (rainbow_matching(side, limits).matching.has_value()) {
                    run.fail(c,
                             "side assignment mask=" + std::to_string(mask) +
                                 " admits a rainbow matching",
                             instance);
                    return;
                }
            }
        });
    }
    if (produced < cases)
        run.fail(produced, "generator could not reach the requested number of instances", "");
    return run.finish(produced);
}

// Wherever the compressed instance has a rainbow matching, rewinding it
// through the recorded trace lands a valid matching in the originals, and a
// matching of decomposed parts lifts back into the compressed families.
inline SuiteReport run_suite_pullback(std::uint64_t seed, std::uint64_t cases,
                                      const SolverLimits& limits = {}) {
    detail::SuiteRun run("pullback", seed);
    Xorshift64Star master(seed);
    std::uint64_t produced = 0;
    const std::uint64_t max_attempts = cases * 80 + 80;
    for (std::uint64_t attempt = 0; produced < cases && attempt < max_attempts; ++attempt) {
        int n = master.range(5, 10);
        int t = master.range(2, 3);
        ColoredFamilies cf = detail::random_bounded_colored(master, n, t, false, 40);
        auto [compressed, trace] = compress_to_target(cf, n);
        RainbowResult found = rainbow_matching(compressed, limits);
        if (!found.matching.has_value()) continue;
        std::uint64_t c = produced++;
        std::string instance = to_shgm_string(cf);
        detail::guarded_case(run, c, instance, [&] {
            Matching pulled = pull_back_matching(trace, *found.matching);
            if (auto why = matching_violation(cf, pulled, MatchingKind::Rainbow))
                return run.fail(c, "pulled-back matching invalid: " + *why, instance);
            if (pulled.size() != static_cast<std::size_t>(t))
                return run.fail(c, "pulled-back matching lost entries", instance);

            // Lift half: solve one random side assignment of the compressed
            // instance and re-extend the matching found there.
            std::vector<Side> sides(static_cast<std::size_t>(t));
            std::vector<SetFamily> parts;
            parts.reserve(static_cast<std::size_t>(t));
            unsigned mask = static_cast<unsigned>(master.next_below(1u << t));
            for (int i = 0; i < t; ++i) {
                Decomposition d = decompose(compressed[i]);
                bool with = (mask >> i) & 1u;
                sides[static_cast<std::size_t>(i)] = with ? Side::WithN : Side::WithoutN;
                parts.push_back(with ? std::move(d.with_n) : std::move(d.without_n));
            }
            RainbowResult sub = rainbow_matching(ColoredFamilies(n - 1, std::move(parts)), limits);
            if (!sub.matching.has_value()) return;  // this side split has nothing to lift
            Matching lifted = lift_decomposed_matching(compressed, sides, *sub.matching);
            if (auto why = matching_violation(compressed, lifted, MatchingKind::Rainbow))
                return run.fail(c, "lifted matching invalid: " + *why, instance);
            if (lifted.size() != static_cast<std::size_t>(t))
                return run.fail(c, "lifted matching lost entries", instance);
        });
    }
    if (produced < cases)
        run.fail(produced, "generator could not reach the requested number of instances", "");
    return run.finish(produced);
}

// Families above the per-family size threshold always yield an extracted
// rainbow matching that the exact solver confirms; star families and cover
// families sit at or below the threshold and are rejected up front.
inline SuiteReport run_suite_lemma3(std::uint64_t seed, std::uint64_t cases,
                                    const SolverLimits& limits = {}) {
    detail::SuiteRun run("lemma3", seed);
    Xorshift64Star master(seed);
    for (std::uint64_t c = 0; c < cases; ++c) {
        if (c % 10 == 9) {
            // Negative controls: at-threshold instances must be rejected and
            // really have no rainbow matching.
            bool use_stars = (c / 10) % 2 == 0;
            int t = master.range(2, 3);
            int k = master.range(1, 3);
            int n = master.range(std::max(k * t, k * (t - 1) + 2), 12);
            ColoredFamilies controls =
                use_stars ? gen_star_families(n, k, t)
                          : ColoredFamilies(n, std::vector<SetFamily>(
                                                   static_cast<std::size_t>(t),
                                                   gen_cover_construction(n, k, t)));
            std::string instance = to_shgm_string(controls);
            detail::guarded_case(run, c, instance, [&] {
                if (rainbow_matching(controls, limits).matching.has_value())
                    return run.fail(c, "control instance admits a rainbow matching", instance);
                try {
                    rainbow_by_lemma3(controls);
                    run.fail(c, "extractor accepted an at-threshold control", instance);
                } catch (const precondition_error&) {
                    // expected
                }
            });
            continue;
        }
        int t = master.range(2, 3);
        std::vector<int> ks;
        int n = 0;
        for (;;) {
            ks.clear();
            int total = 0;
            int min_n = 4;
            for (int i = 0; i < t; ++i) {
                int ki = master.range(1, 3);
                ks.push_back(ki);
                total += ki;
                min_n = std::max(min_n, ki * (t - 1) + 1);
            }
            min_n = std::max(min_n, total);
            if (min_n <= 12) {
                n = master.range(min_n, 12);
                break;
            }
        }
        std::vector<SetFamily> fams;
        for (int i = 0; i < t; ++i) {
            int ki = ks[static_cast<std::size_t>(i)];
            std::uint64_t threshold = to_u64(rainbow_threshold(n, ki, t));
            std::uint64_t cap = to_u64(binom(n, ki));
            std::uint64_t m = threshold + 1 + detail::small_count(master, cap - threshold - 1, 8);
            fams.push_back(random_family({n, ki, m, {}, master.next()}));
        }
        ColoredFamilies cf(n, std::move(fams));
        std::string instance = to_shgm_string(cf);
        detail::guarded_case(run, c, instance, [&] {
            ExtractionReport report = rainbow_by_lemma3(cf);
            if (auto why = matching_violation(cf, report.matching, MatchingKind::Rainbow))
                return run.fail(c, "extracted matching invalid: " + *why, instance);
            if (report.matching.size() != static_cast<std::size_t>(t))
                return run.fail(c, "extracted matching has the wrong size", instance);
            if (!rainbow_matching(cf, limits).matching.has_value())
                run.fail(c, "solver disagrees: no rainbow matching found", instance);
        });
    }
    return run.finish(cases);
}

// Center-based extraction succeeds on every instance whose centers exceed the
// degree threshold, and the solver confirms the t disjoint edges.
inline SuiteReport run_suite_cor1(std::uint64_t seed, std::uint64_t cases,
                                  const SolverLimits& limits = {}) {
    detail::SuiteRun run("cor1", seed);
    Xorshift64Star master(seed);
    for (std::uint64_t c = 0; c < cases; ++c) {
        int k = master.range(2, 3);
        int t = master.range(1, 3);
        int min_n = std::max({k * t, 2 * (t - 1) * (k - 1) + 2, 5});
        int n = master.range(min_n, 12);
        std::uint64_t need = to_u64(
            checked_mul(static_cast<u128>(2) * static_cast<u128>(t - 1), binom(n - 2, k - 2)));
        std::vector<Vertex> centers;
        for (int i = 1; i <= t; ++i) centers.push_back(i);
        std::vector<Edge> edges;
        for (Vertex v : centers) {
            std::uint64_t cap = to_u64(binom(n - 1, k - 1));
            std::uint64_t m = std::min(cap, need + 1 + master.next_below(4));
            auto star = detail::random_star_edges(master, n, k, v, m);
            edges.insert(edges.end(), star.begin(), star.end());
        }
        // Noise edges anywhere.
        std::uint64_t extra = master.next_below(6);
        for (std::uint64_t r : sample_distinct(master, to_u64(binom(n, k)),
                                               std::min<std::uint64_t>(extra, to_u64(binom(n, k)))))
            edges.push_back(colex_unrank(r, n, k));
        SetFamily f = make_family(n, k, std::move(edges));
        // Deduplication may have cost some degree; top up deterministically.
        {
            std::vector<Edge> topped = f.edges();
            for (Vertex v : centers) {
                int d = degree(f, v);
                if (static_cast<std::uint64_t>(d) > need) continue;
                for (const Edge& sub : KSubsetRange(n - 1, k - 1)) {
                    if (static_cast<std::uint64_t>(d) > need) break;
                    std::vector<Vertex> vs;
                    for (Vertex w : sub) vs.push_back(w < v ? w : w + 1);
                    vs.push_back(v);
                    Edge e(std::move(vs));
                    if (!f.contains(e)) {
                        topped.push_back(e);
                        ++d;
                    }
                }
            }
            f = make_family(n, k, std::move(topped));
        }
        std::string instance = to_shg_string(f) + "# centers";
        for (Vertex v : centers) instance += " " + std::to_string(v);
        instance += "\n";
        detail::guarded_case(run, c, instance, [&] {
            ExtractionReport report = t_disjoint_by_cor1(f, t, centers);
            if (auto why = matching_violation(f, report.matching))
                return run.fail(c, "extracted matching invalid: " + *why, instance);
            if (report.matching.size() != static_cast<std::size_t>(t))
                return run.fail(c, "extracted matching has the wrong size", instance);
            if (!has_t_matching(f, t, limits).found)
                run.fail(c, "solver disagrees: no t disjoint edges", instance);
        });
    }
    return run.finish(cases);
}

namespace detail {

// Cover construction plus its colex-first missing edge: one past the bound.
inline SetFamily cover_plus_one(int n, int k, int t) {
    SetFamily cover = gen_cover_construction(n, k, t);
    std::vector<Edge> edges = cover.edges();
    for (const Edge& e : KSubsetRange(n, k))
        if (!cover.contains(e)) {
            edges.push_back(e);
            break;
        }
    return make_family(n, k, std::move(edges));
}

}  // namespace detail

// The three-case analysis always delivers t disjoint edges from a family
// above the cover bound in the validated range.
inline SuiteReport run_suite_thm1(std::uint64_t seed, std::uint64_t cases,
                                  const SolverLimits& limits = {}) {
    detail::SuiteRun run("thm1", seed);
    Xorshift64Star master(seed);
    for (std::uint64_t c = 0; c < cases; ++c) {
        SetFamily f(1, 1);
        int t = 2;
        if (c == 0) {
            // Star at 1 (the cover construction for t=2) plus one edge.
            f = detail::cover_plus_one(25, 2, 2);
        } else if (c == 1) {
            f = detail::cover_plus_one(55, 3, 2);
        } else if (c % 5 == 4) {
            t = 3;
            int n = master.range(37, 40);
            std::uint64_t cover = to_u64(cover_bound(n, 2, 3));
            std::uint64_t m = cover + 1 + master.next_below(8);
            f = random_family({n, 2, m, {}, master.next()});
        } else {
            int n = master.range(25, 40);
            std::uint64_t cover = to_u64(cover_bound(n, 2, 2));
            std::uint64_t m = cover + 1 + master.next_below(8);
            f = random_family({n, 2, m, {}, master.next()});
        }
        std::string instance = to_shg_string(f) + "# t=" + std::to_string(t) + "\n";
        detail::guarded_case(run, c, instance, [&] {
            ExtractionReport report = t_disjoint_by_thm1(f, t);
            if (auto why = matching_violation(f, report.matching))
                return run.fail(c, "extracted matching invalid: " + *why, instance);
            if (report.matching.size() != static_cast<std::size_t>(t))
                return run.fail(c, "extracted matching has the wrong size", instance);
            if (report.case_trace.empty())
                return run.fail(c, "missing case trace", instance);
            if (!has_t_matching(f, t, limits).found)
                run.fail(c, "solver disagrees: no t disjoint edges", instance);
        });
    }
    return run.finish(cases);
}

// The multicolor analysis always delivers a rainbow t-matching when every
// family clears the cover bound in the validated range.
inline SuiteReport run_suite_thm2(std::uint64_t seed, std::uint64_t cases,
                                  const SolverLimits& limits = {}) {
    detail::SuiteRun run("thm2", seed);
    Xorshift64Star master(seed);
    for (std::uint64_t c = 0; c < cases; ++c) {
        int n = 25;
        int t = 2;
        std::vector<SetFamily> fams;
        if (c == 0) {
            // Two stars at different vertices, each with one extra edge.
            std::vector<Edge> f1 = gen_star_families(n, 2, 1)[0].edges();
            f1.push_back(Edge{2, 3});
            std::vector<Edge> f2;
            for (const Edge& e : KSubsetRange(n, 2))
                if (e.contains(4)) f2.push_back(e);
            f2.push_back(Edge{5, 6});
            fams.push_back(make_family(n, 2, std::move(f1)));
            fams.push_back(make_family(n, 2, std::move(f2)));
        } else {
            n = master.range(25, 40);
            std::uint64_t cover = to_u64(cover_bound(n, 2, 2));
            for (int i = 0; i < t; ++i) {
                std::uint64_t m = cover + 1 + master.next_below(8);
                fams.push_back(random_family({n, 2, m, {}, master.next()}));
            }
        }
        ColoredFamilies cf(n, std::move(fams));
        std::string instance = to_shgm_string(cf);
        detail::guarded_case(run, c, instance, [&] {
            ExtractionReport report = rainbow_by_thm2(cf);
            if (auto why = matching_violation(cf, report.matching, MatchingKind::Rainbow))
                return run.fail(c, "extracted matching invalid: " + *why, instance);
            if (report.matching.size() != static_cast<std::size_t>(t))
                return run.fail(c, "extracted matching has the wrong size", instance);
            if (!rainbow_matching(cf, limits).matching.has_value())
                run.fail(c, "solver disagrees: no rainbow matching", instance);
        });
    }
    return run.finish(cases);
}

// Deterministic exact-integer grids: bound formulas against enumeration,
// construction sizes and matching numbers, the regime and gap claims, and the
// t=2 tie to the intersecting-family bound.
inline SuiteReport run_suite_bounds(std::uint64_t seed, std::uint64_t /*cases*/,
                                    const SolverLimits& limits = {}) {
    detail::SuiteRun run("bounds", seed);
    std::uint64_t checked = 0;
    auto expect = [&](bool ok, const std::string& what) {
        ++checked;
        if (!ok) run.fail(checked, what, "");
    };

    // Bound formulas against direct enumeration on a small grid.
    for (int n = 1; n <= 9; ++n)
        for (int k = 1; k <= std::min(n, 4); ++k)
            for (int t = 1; t <= std::min(n, 3); ++t) {
                std::uint64_t cover_enum = 0;
                for (const Edge& e : KSubsetRange(n, k)) {
                    bool meets = false;
                    for (Vertex v = 1; v < t; ++v)
                        if (e.contains(v)) meets = true;
                    if (meets) ++cover_enum;
                }
                expect(cover_bound(n, k, t) == u128{cover_enum},
                       "cover bound mismatch at n=" + std::to_string(n) + " k=" +
                           std::to_string(k) + " t=" + std::to_string(t));
                if (static_cast<long long>(k) * t - 1 <= n) {
                    std::uint64_t clique_enum = 0;
                    for (const Edge& e : KSubsetRange(k * t - 1, k)) {
                        (void)e;
                        ++clique_enum;
                    }
                    expect(clique_bound(k, t) == u128{clique_enum},
                           "clique bound mismatch at k=" + std::to_string(k) + " t=" +
                               std::to_string(t));
                }
            }

    // Construction sizes match the formulas; matching numbers equal t-1.
    for (int n = 1; n <= 12; ++n)
        for (int k = 1; k <= std::min(n, 4); ++k)
            for (int t = 1; t <= 3; ++t) {
                if (t <= n) {
                    SetFamily cover = gen_cover_construction(n, k, t);
                    expect(u128{cover.size()} == cover_bound(n, k, t),
                           "cover construction size off at n=" + std::to_string(n) + " k=" +
                               std::to_string(k) + " t=" + std::to_string(t));
                    if (static_cast<long long>(k) * (t - 1) <= n)
                        expect(max_matching(cover, limits).nu == t - 1,
                               "cover construction matching number off at n=" +
                                   std::to_string(n) + " k=" + std::to_string(k) + " t=" +
                                   std::to_string(t));
                }
                if (static_cast<long long>(k) * t - 1 <= n) {
                    SetFamily clique = gen_clique_construction(n, k, t);
                    expect(u128{clique.size()} == clique_bound(k, t),
                           "clique construction size off at n=" + std::to_string(n) + " k=" +
                               std::to_string(k) + " t=" + std::to_string(t));
                    expect(max_matching(clique, limits).nu == t - 1,
                           "clique construction matching number off at n=" + std::to_string(n) +
                               " k=" + std::to_string(k) + " t=" + std::to_string(t));
                }
                if (k <= n) {
                    ColoredFamilies stars = gen_star_families(n, k, t);
                    bool sizes_ok = true;
                    for (const SetFamily& s : stars.families())
                        sizes_ok = sizes_ok && u128{s.size()} == binom(n - 1, k - 1);
                    expect(sizes_ok, "star family size off at n=" + std::to_string(n) + " k=" +
                                         std::to_string(k) + " t=" + std::to_string(t));
                }
            }

    // Regime grid: the cover side strictly dominates once t(k+1) <= n.
    for (int k = 2; k <= 6; ++k)
        for (int t = 2; t * (k + 1) <= 200; ++t)
            for (int n = t * (k + 1); n <= 200; ++n) {
                BoundReport r = erdos_bound(n, k, t);
                expect(r.regime == Regime::CoverDominant && r.cover > r.clique,
                       "regime claim fails at n=" + std::to_string(n) + " k=" +
                           std::to_string(k) + " t=" + std::to_string(t));
            }

    // Gap grid: the degree-sum bound sits strictly below the cover bound.
    for (int k = 2; k <= 6; ++k)
        for (int t = 2; 3 * k * k * t < 200; ++t)
            for (int n = 3 * k * k * t + 1; n <= 200; ++n) {
                GapCheck g = degree_sum_gap_check(n, k, t);
                expect(g.holds, "gap claim fails at n=" + std::to_string(n) + " k=" +
                                    std::to_string(k) + " t=" + std::to_string(t));
            }

    // t=2 cover bound is the classical intersecting-family value C(n-1,k-1).
    for (int n = 2; n <= 60; ++n)
        for (int k = 1; k <= n; ++k)
            expect(cover_bound(n, k, 2) == binom(n - 1, k - 1),
                   "t=2 identity fails at n=" + std::to_string(n) + " k=" + std::to_string(k));

    return run.finish(checked);
}

// Exhaustive extremal search agrees with the bound formula on every ground
// set small enough to enumerate, and the extremal families are tight.
inline SuiteReport run_suite_oracle(std::uint64_t seed, std::uint64_t /*cases*/,
                                    const SolverLimits& limits = {}) {
    detail::SuiteRun run("oracle", seed);
    struct Point {
        int n, k, t;
    };
    const Point points[] = {{4, 2, 2}, {5, 2, 2}, {6, 2, 2}, {6, 2, 3}, {6, 3, 2}};
    std::uint64_t c = 0;
    for (const Point& p : points) {
        ++c;
        std::string label = "(n=" + std::to_string(p.n) + " k=" + std::to_string(p.k) +
                            " t=" + std::to_string(p.t) + ")";
        detail::guarded_case(run, c, label, [&] {
            ExtremalResult r = max_edges_no_t_matching(p.n, p.k, p.t, limits);
            BoundReport b = erdos_bound(p.n, p.k, p.t);
            if (u128{r.max_edges} != b.erdos)
                return run.fail(c,
                                "extremal count " + std::to_string(r.max_edges) +
                                    " does not equal the bound " + to_decimal(b.erdos) + " at " +
                                    label,
                                to_shg_string(r.extremal));
            int nu = max_matching(r.extremal, limits).nu;
            if (nu != p.t - 1)
                run.fail(c,
                         "extremal family has matching number " + std::to_string(nu) +
                             ", expected " + std::to_string(p.t - 1) + " at " + label,
                         to_shg_string(r.extremal));
        });
    }
    return run.finish(c);
}

// Suite registry. cases == 0 selects each suite's standard volume.
inline SuiteReport run_suite(const std::string& name, std::uint64_t seed, std::uint64_t cases,
                             const SolverLimits& limits = {}) {
    using Runner = SuiteReport (*)(std::uint64_t, std::uint64_t, const SolverLimits&);
    struct Entry {
        Runner runner;
        std::uint64_t default_cases;
    };
    static const std::map<std::string, Entry> registry = {
        {"lemma1", {run_suite_lemma1, 1000}}, {"lemma2", {run_suite_lemma2, 200}},
        {"pullback", {run_suite_pullback, 500}}, {"lemma3", {run_suite_lemma3, 300}},
        {"cor1", {run_suite_cor1, 100}},      {"thm1", {run_suite_thm1, 25}},
        {"thm2", {run_suite_thm2, 25}},       {"bounds", {run_suite_bounds, 0}},
        {"oracle", {run_suite_oracle, 0}},
    };
    auto it = registry.find(name);
    if (it == registry.end()) throw validation_error("unknown suite '" + name + "'");
    std::uint64_t effective = cases == 0 ? it->second.default_cases : cases;
    return it->second.runner(seed, effective, limits);
}

inline std::vector<std::string> suite_names() {
    return {"lemma1", "lemma2", "pullback", "lemma3", "cor1", "thm1", "thm2", "bounds", "oracle"};
}

}  // namespace shg
