#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "shg/arith.hpp"
#include "shg/bounds.hpp"
#include "shg/errors.hpp"
#include "shg/family.hpp"
#include "shg/shift.hpp"
#include "shg/solver.hpp"

namespace shg {

// Which branch of the inductive argument produced each part of a witness.
enum class CaseTag {
    HighDegreeVertex,  // peeled a vertex of very high degree, recursed on t-1
    TopDegreeLemma3,   // t heavy centers, links handed to the rainbow recursion
    GapSweep,          // recursed on t-1, swept for an edge avoiding the rest
    ShiftCompress,     // compression toward n changed at least one family
    SingletonBase,     // t=1 (or a forced 1-uniform {n}) resolved directly
    MinimalNBase,      // n equals the sum of uniformities; exhaustive search
    SplitRecurse,      // families split by the size dichotomy, lifted back
};

inline const char* case_tag_name(CaseTag tag) {
    switch (tag) {
        case CaseTag::HighDegreeVertex: return "high_degree_vertex";
        case CaseTag::TopDegreeLemma3: return "top_degree_lemma3";
        case CaseTag::GapSweep: return "gap_sweep";
        case CaseTag::ShiftCompress: return "shift_compress";
        case CaseTag::SingletonBase: return "singleton_base";
        case CaseTag::MinimalNBase: return "minimal_n_base";
        default: return "split_recurse";
    }
}

struct ExtractionReport {
    Matching matching;
    int recursion_depth = 0;  // deepest level reached; the top call is 1
    std::vector<CaseTag> case_trace;
};

namespace detail {

struct ExtractionContext {
    std::vector<CaseTag> trace;
    int max_depth = 0;

    void enter(int depth) { max_depth = std::max(max_depth, depth); }
    void tag(CaseTag t) { trace.push_back(t); }
};

// Generous internal budget for the tiny exhaustive searches the recursion
// bottoms out in.
inline SolverLimits extraction_limits() { return {200'000'000, 600'000}; }

inline u128 sum_uniformities(const ColoredFamilies& fams) {
    u128 s = 0;
    for (const SetFamily& f : fams.families()) s += static_cast<u128>(f.k());
    return s;
}

// Check the per-family size thresholds; used once as a user-facing
// precondition and re-checked inside every recursion as a self-test.
template <typename Error>
inline void check_rainbow_thresholds(const ColoredFamilies& fams, const char* who) {
    const int t = fams.t();
    for (int i = 0; i < t; ++i) {
        u128 threshold = rainbow_threshold(fams.n(), fams[i].k(), t);
        if (u128{fams[i].size()} <= threshold)
            throw Error(std::string(who) + ": family " + std::to_string(i + 1) + " has " +
                        std::to_string(fams[i].size()) + " edges, needs more than " +
                        to_decimal(threshold));
    }
    if (sum_uniformities(fams) > u128{static_cast<std::uint64_t>(fams.n())})
        throw Error(std::string(who) + ": ground set must hold k_1+...+k_t vertices");
}

// The permutation argument behind the minimal case implies a strict counting
// inequality; evaluating it exactly guards the exhaustive search.
inline void check_minimal_base_counting(const ColoredFamilies& fams) {
    const int t = fams.t();
    u128 product = 1;
    for (int i = 0; i < t; ++i) product = checked_mul(product, binom(fams.n(), fams[i].k()));
    u128 lhs = 0;
    for (int i = 0; i < t; ++i) {
        u128 term = u128{fams[i].size()};
        for (int j = 0; j < t; ++j)
            if (j != i) term = checked_mul(term, binom(fams.n(), fams[j].k()));
        lhs = checked_add(lhs, term);
    }
    u128 rhs = checked_mul(static_cast<u128>(t - 1), product);
    if (lhs <= rhs)
        throw consistency_error("minimal-case counting inequality failed: " + to_decimal(lhs) +
                                " <= " + to_decimal(rhs));
}

inline Matching lemma3_extract(const ColoredFamilies& fams, ExtractionContext& ctx, int depth) {
    ctx.enter(depth);
    check_rainbow_thresholds<consistency_error>(fams, "rainbow recursion invariant");
    const int t = fams.t();
    const int n = fams.n();

    if (t == 1) {
        ctx.tag(CaseTag::SingletonBase);
        return Matching{{{0, fams[0].edges().front()}}};
    }

    if (sum_uniformities(fams) == u128{static_cast<std::uint64_t>(n)}) {
        ctx.tag(CaseTag::MinimalNBase);
        check_minimal_base_counting(fams);
        RainbowResult r = rainbow_matching(fams, extraction_limits());
        if (!r.matching)
            throw consistency_error("no rainbow matching in the minimal case despite the counting "
                                    "guarantee");
        return *r.matching;
    }

    auto [compressed, trace] = compress_to_target(fams, n);
    if (!trace.steps.empty()) ctx.tag(CaseTag::ShiftCompress);

    // A 1-uniform family holding {n} after compression actually holds every
    // singleton; hand it {n} and recurse on the others inside [n-1].
    int singleton = -1;
    for (int i = 0; i < t; ++i)
        if (compressed[i].k() == 1 && compressed[i].contains(Edge{n})) {
            singleton = i;
            break;
        }

    Matching in_compressed;
    if (singleton >= 0) {
        ctx.tag(CaseTag::SingletonBase);
        std::vector<SetFamily> rest;
        rest.reserve(static_cast<std::size_t>(t) - 1);
        for (int i = 0; i < t; ++i) {
            if (i == singleton) continue;
            rest.push_back(decompose(compressed[i]).without_n);
        }
        Matching sub = lemma3_extract(ColoredFamilies(n - 1, std::move(rest)), ctx, depth + 1);
        in_compressed.entries.reserve(static_cast<std::size_t>(t));
        for (MatchingEntry& e : sub.entries) {
            if (e.family >= singleton) ++e.family;
            in_compressed.entries.push_back(std::move(e));
        }
        in_compressed.entries.push_back({singleton, Edge{n}});
    } else {
        ctx.tag(CaseTag::SplitRecurse);
        // Size dichotomy: every compressed family is large on at least one
        // side of the decomposition; prefer the side avoiding n, which keeps
        // the uniformity intact.
        std::vector<Side> sides(static_cast<std::size_t>(t));
        std::vector<SetFamily> parts;
        parts.reserve(static_cast<std::size_t>(t));
        for (int i = 0; i < t; ++i) {
            Decomposition d = decompose(compressed[i]);
            int k_i = compressed[i].k();
            bool without_ok =
                u128{d.without_n.size()} >
                checked_mul(static_cast<u128>(t - 1), binom(n - 2, k_i - 1));
            bool with_ok = k_i >= 2 &&
                           u128{d.with_n.size()} >
                               checked_mul(static_cast<u128>(t - 1), binom(n - 2, k_i - 2));
            if (!without_ok && !with_ok)
                throw consistency_error("size dichotomy failed for family " +
                                        std::to_string(i + 1));
            sides[static_cast<std::size_t>(i)] = without_ok ? Side::WithoutN : Side::WithN;
            parts.push_back(without_ok ? std::move(d.without_n) : std::move(d.with_n));
        }
        Matching sub = lemma3_extract(ColoredFamilies(n - 1, std::move(parts)), ctx, depth + 1);
        in_compressed = lift_decomposed_matching(compressed, sides, sub);
    }

    return pull_back_matching(trace, in_compressed);
}

inline void verify_report(const ColoredFamilies& fams, const ExtractionReport& report,
                          MatchingKind kind, std::size_t want_size) {
    if (report.matching.size() != want_size)
        throw consistency_error("extracted matching has size " +
                                std::to_string(report.matching.size()) + ", expected " +
                                std::to_string(want_size));
    if (auto why = matching_violation(fams, report.matching, kind))
        throw consistency_error("extracted matching invalid: " + *why);
    if (report.case_trace.empty()) throw consistency_error("extraction produced no case trace");
}

}  // namespace detail

// Rainbow matching extraction for families above the size thresholds,
// following the shift / split / recurse induction.
inline ExtractionReport rainbow_by_lemma3(const ColoredFamilies& fams) {
    detail::check_rainbow_thresholds<precondition_error>(fams, "rainbow extraction");
    detail::ExtractionContext ctx;
    Matching m = detail::lemma3_extract(fams, ctx, 1);
    ExtractionReport report{std::move(m), ctx.max_depth, std::move(ctx.trace)};
    detail::verify_report(fams, report, MatchingKind::Rainbow,
                          static_cast<std::size_t>(fams.t()));
    return report;
}

namespace detail {

// Shared by the center-based and degree-analysis extractors: links at t
// distinct heavy centers, relabeled away from the centers, handed to the
// rainbow recursion, then re-extended by the centers.
inline Matching disjoint_via_links(const ColoredFamilies& fams, const std::vector<Vertex>& centers,
                                   ExtractionContext& ctx, int depth) {
    ctx.enter(depth);
    ctx.tag(CaseTag::TopDegreeLemma3);
    const int n = fams.n();
    const int t = fams.t();
    std::vector<SetFamily> links;
    links.reserve(static_cast<std::size_t>(t));
    for (int i = 0; i < t; ++i) {
        std::vector<Vertex> others;
        for (int j = 0; j < t; ++j)
            if (j != i) others.push_back(centers[static_cast<std::size_t>(j)]);
        LinkResult li = link(fams[i], centers[static_cast<std::size_t>(i)], others);
        u128 need = checked_mul(static_cast<u128>(t - 1), binom(n - t - 1, fams[i].k() - 2));
        if (u128{li.family.size()} <= need)
            throw consistency_error("link at center " +
                                    std::to_string(centers[static_cast<std::size_t>(i)]) +
                                    " has " + std::to_string(li.family.size()) +
                                    " edges, needs more than " + to_decimal(need));
        links.push_back(std::move(li.family));
    }
    // Ground set without the centers, relabeled onto [n-t].
    std::vector<bool> is_center(static_cast<std::size_t>(n) + 1, false);
    for (Vertex c : centers) is_center[static_cast<std::size_t>(c)] = true;
    std::vector<Vertex> keep;
    keep.reserve(static_cast<std::size_t>(n - t));
    for (Vertex v = 1; v <= n; ++v)
        if (!is_center[static_cast<std::size_t>(v)]) keep.push_back(v);
    GroundRestriction gr = restrict_ground(ColoredFamilies(n, std::move(links)), keep);
    Matching sub = lemma3_extract(gr.families, ctx, depth + 1);
    Matching out;
    out.entries.reserve(static_cast<std::size_t>(t));
    for (const MatchingEntry& e : sub.entries)
        out.entries.push_back(
            {e.family,
             map_edge(e.edge, gr.old_ids).with(centers[static_cast<std::size_t>(e.family)])});
    std::sort(out.entries.begin(), out.entries.end(),
              [](const MatchingEntry& a, const MatchingEntry& b) { return a.family < b.family; });
    return out;
}

}  // namespace detail

// Extraction of t disjoint edges around t given high-degree centers.
inline ExtractionReport t_disjoint_by_cor1(const SetFamily& f, int t,
                                           const std::vector<Vertex>& centers) {
    const int n = f.n();
    const int k = f.k();
    if (k < 2) throw precondition_error("center-based extraction requires uniformity at least 2");
    if (t < 1) throw precondition_error("t must be at least 1");
    if (static_cast<long long>(k) * t > n)
        throw precondition_error("center-based extraction requires k*t <= n, got k=" +
                                 std::to_string(k) + " t=" + std::to_string(t) + " n=" +
                                 std::to_string(n));
    if (static_cast<int>(centers.size()) != t)
        throw precondition_error("need exactly t centers, got " + std::to_string(centers.size()));
    std::vector<Vertex> sorted = centers;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw precondition_error("centers must be distinct");
    u128 need = checked_mul(static_cast<u128>(2) * static_cast<u128>(t - 1), binom(n - 2, k - 2));
    for (Vertex c : centers) {
        int d = degree(f, c);  // also validates the range
        if (u128{static_cast<std::uint64_t>(d)} <= need)
            throw precondition_error("center " + std::to_string(c) + " has degree " +
                                     std::to_string(d) + ", needs more than " + to_decimal(need));
    }
    detail::ExtractionContext ctx;
    Matching m = detail::disjoint_via_links(
        ColoredFamilies(n, std::vector<SetFamily>(static_cast<std::size_t>(t), f)), centers, ctx,
        1);
    for (MatchingEntry& e : m.entries) e.family = 0;
    ExtractionReport report{std::move(m), ctx.max_depth, std::move(ctx.trace)};
    detail::verify_report(ColoredFamilies(n, {f}), report, MatchingKind::Plain,
                          static_cast<std::size_t>(t));
    return report;
}

namespace detail {

// First colex edge of f through v (or of all of f when v == 0) avoiding every
// vertex already used by the partial matching.
inline Edge sweep_for_edge(const SetFamily& f, Vertex v, const std::vector<bool>& used,
                           const char* who) {
    for (const Edge& e : f.edges()) {
        if (v != 0 && !e.contains(v)) continue;
        if (edge_free(e, used)) return e;
    }
    throw consistency_error(std::string(who) +
                            ": no edge avoids the current matching, contradicting the counting "
                            "guarantee");
}

inline std::vector<bool> used_map(int n, const std::vector<Edge>& edges) {
    std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
    for (const Edge& e : edges) mark(e, used, true);
    return used;
}

inline std::vector<Edge> thm1_extract(const SetFamily& f, int t, ExtractionContext& ctx,
                                      int depth) {
    ctx.enter(depth);
    const int n = f.n();
    const int k = f.k();
    if (3ll * k * k * t >= n)
        throw consistency_error("induction left the validated range 3k^2 t < n");
    if (u128{f.size()} <= cover_bound(n, k, t))
        throw consistency_error("induction lost the required family size");

    if (t == 1) {
        ctx.tag(CaseTag::SingletonBase);
        return {f.edges().front()};
    }

    std::vector<std::pair<Vertex, int>> dseq = degree_sequence(f);
    u128 peel_need = checked_mul(static_cast<u128>(k) * static_cast<u128>(t - 1),
                                 binom(n - 2, k - 2));
    if (u128{static_cast<std::uint64_t>(dseq.front().second)} > peel_need) {
        // Case A: one vertex so heavy that removing it keeps the rest above
        // the cover bound one level down.
        ctx.tag(CaseTag::HighDegreeVertex);
        Vertex v = dseq.front().first;
        VertexDeletion del = delete_vertex(f, v);
        std::vector<Edge> sub = thm1_extract(del.family, t - 1, ctx, depth + 1);
        std::vector<Edge> edges;
        edges.reserve(static_cast<std::size_t>(t));
        for (const Edge& e : sub) edges.push_back(map_edge(e, del.old_ids));
        std::vector<bool> used = used_map(n, edges);
        edges.push_back(sweep_for_edge(f, v, used, "high-degree sweep"));
        return edges;
    }

    u128 heavy_need =
        checked_mul(static_cast<u128>(2) * static_cast<u128>(t - 1), binom(n - 2, k - 2));
    if (u128{static_cast<std::uint64_t>(dseq[static_cast<std::size_t>(t) - 1].second)} >
        heavy_need) {
        // Case B: t heavy vertices; hand their links to the rainbow recursion.
        std::vector<Vertex> centers;
        centers.reserve(static_cast<std::size_t>(t));
        for (int i = 0; i < t; ++i) centers.push_back(dseq[static_cast<std::size_t>(i)].first);
        Matching m = disjoint_via_links(
            ColoredFamilies(n, std::vector<SetFamily>(static_cast<std::size_t>(t), f)), centers,
            ctx, depth);
        std::vector<Edge> edges;
        edges.reserve(m.entries.size());
        for (const MatchingEntry& e : m.entries) edges.push_back(e.edge);
        return edges;
    }

    // Case C: all degrees are moderate, so the t-1 edges found recursively
    // block too few edges to exhaust a family above the cover bound.
    ctx.tag(CaseTag::GapSweep);
    std::vector<Edge> edges = thm1_extract(f, t - 1, ctx, depth + 1);
    std::vector<bool> used = used_map(n, edges);
    edges.push_back(sweep_for_edge(f, 0, used, "degree-gap sweep"));
    return edges;
}

inline void check_theorem_range(int n, int k, int t, std::size_t fam_size, int which_family) {
    if (k < 2) throw precondition_error("theorem extraction requires uniformity at least 2");
    if (t < 1) throw precondition_error("t must be at least 1");
    if (3ll * k * k * t >= n)
        throw precondition_error("theorem extraction requires 3k^2*t < n, got k=" +
                                 std::to_string(k) + " t=" + std::to_string(t) + " n=" +
                                 std::to_string(n));
    u128 need = cover_bound(n, k, t);
    if (u128{fam_size} <= need) {
        std::string who = which_family ? "family " + std::to_string(which_family) : std::string("the family");
        throw precondition_error(who + " has " + std::to_string(fam_size) +
                                 " edges, needs more than the cover bound " + to_decimal(need));
    }
}

}  // namespace detail

// t pairwise disjoint edges from a single family above the cover bound, via
// the three-case degree analysis.
inline ExtractionReport t_disjoint_by_thm1(const SetFamily& f, int t) {
    detail::check_theorem_range(f.n(), f.k(), t, f.size(), 0);
    detail::ExtractionContext ctx;
    std::vector<Edge> edges = detail::thm1_extract(f, t, ctx, 1);
    Matching m;
    m.entries.reserve(edges.size());
    for (Edge& e : edges) m.entries.push_back({0, std::move(e)});
    ExtractionReport report{std::move(m), ctx.max_depth, std::move(ctx.trace)};
    detail::verify_report(ColoredFamilies(f.n(), {f}), report, MatchingKind::Plain,
                          static_cast<std::size_t>(t));
    return report;
}

namespace detail {

// Lexicographically-first system of distinct representatives: centers[i] is
// drawn from options[i], all distinct, via backtracking over sorted options.
inline bool pick_distinct(const std::vector<std::vector<Vertex>>& options, std::size_t i,
                          std::vector<Vertex>& centers, std::vector<bool>& taken) {
    if (i == options.size()) return true;
    for (Vertex v : options[i]) {
        if (taken[static_cast<std::size_t>(v)]) continue;
        taken[static_cast<std::size_t>(v)] = true;
        centers.push_back(v);
        if (pick_distinct(options, i + 1, centers, taken)) return true;
        centers.pop_back();
        taken[static_cast<std::size_t>(v)] = false;
    }
    return false;
}

inline Matching thm2_extract(const ColoredFamilies& fams, ExtractionContext& ctx, int depth) {
    ctx.enter(depth);
    const int n = fams.n();
    const int t = fams.t();
    const int k = fams[0].k();
    if (3ll * k * k * t >= n)
        throw consistency_error("induction left the validated range 3k^2 t < n");
    for (int i = 0; i < t; ++i)
        if (u128{fams[i].size()} <= cover_bound(n, k, t))
            throw consistency_error("induction lost the required size of family " +
                                    std::to_string(i + 1));

    if (t == 1) {
        ctx.tag(CaseTag::SingletonBase);
        return Matching{{{0, fams[0].edges().front()}}};
    }

    auto recurse_without_family = [&](int skip, const ColoredFamilies& sub,
                                      const std::vector<Vertex>* old_ids) {
        Matching m = thm2_extract(sub, ctx, depth + 1);
        for (MatchingEntry& e : m.entries) {
            if (old_ids) e.edge = map_edge(e.edge, *old_ids);
            if (e.family >= skip) ++e.family;
        }
        return m;
    };

    // Case A: some family owns a vertex heavy enough to peel off.
    u128 peel_need = checked_mul(static_cast<u128>(k) * static_cast<u128>(t - 1),
                                 binom(n - 2, k - 2));
    for (int i = 0; i < t; ++i) {
        std::vector<std::pair<Vertex, int>> dseq = degree_sequence(fams[i]);
        if (u128{static_cast<std::uint64_t>(dseq.front().second)} <= peel_need) continue;
        ctx.tag(CaseTag::HighDegreeVertex);
        Vertex v = dseq.front().first;
        std::vector<SetFamily> rest;
        std::vector<Vertex> old_ids;
        rest.reserve(static_cast<std::size_t>(t) - 1);
        for (int j = 0; j < t; ++j) {
            if (j == i) continue;
            VertexDeletion del = delete_vertex(fams[j], v);
            old_ids = std::move(del.old_ids);
            rest.push_back(std::move(del.family));
        }
        Matching m =
            recurse_without_family(i, ColoredFamilies(n - 1, std::move(rest)), &old_ids);
        std::vector<Edge> others;
        others.reserve(m.entries.size());
        for (const MatchingEntry& e : m.entries) others.push_back(e.edge);
        std::vector<bool> used = used_map(n, others);
        m.entries.push_back({i, sweep_for_edge(fams[i], v, used, "high-degree sweep")});
        std::sort(m.entries.begin(), m.entries.end(),
                  [](const MatchingEntry& a, const MatchingEntry& b) { return a.family < b.family; });
        return m;
    }

    // Case B check: does every family have t heavy vertices? The first one
    // that does not is resolved by the degree-gap sweep instead.
    u128 heavy_need =
        checked_mul(static_cast<u128>(2) * static_cast<u128>(t - 1), binom(n - 2, k - 2));
    std::vector<std::vector<Vertex>> heavy(static_cast<std::size_t>(t));
    int sparse_family = -1;
    for (int i = 0; i < t; ++i) {
        for (auto [v, d] : degree_sequence(fams[i]))
            if (u128{static_cast<std::uint64_t>(d)} > heavy_need)
                heavy[static_cast<std::size_t>(i)].push_back(v);
        std::sort(heavy[static_cast<std::size_t>(i)].begin(),
                  heavy[static_cast<std::size_t>(i)].end());
        if (static_cast<int>(heavy[static_cast<std::size_t>(i)].size()) < t &&
            sparse_family < 0)
            sparse_family = i;
    }

    if (sparse_family >= 0) {
        ctx.tag(CaseTag::GapSweep);
        std::vector<SetFamily> rest;
        rest.reserve(static_cast<std::size_t>(t) - 1);
        for (int j = 0; j < t; ++j)
            if (j != sparse_family) rest.push_back(fams[j]);
        Matching m =
            recurse_without_family(sparse_family, ColoredFamilies(n, std::move(rest)), nullptr);
        std::vector<Edge> others;
        others.reserve(m.entries.size());
        for (const MatchingEntry& e : m.entries) others.push_back(e.edge);
        std::vector<bool> used = used_map(n, others);
        m.entries.push_back(
            {sparse_family, sweep_for_edge(fams[sparse_family], 0, used, "degree-gap sweep")});
        std::sort(m.entries.begin(), m.entries.end(),
                  [](const MatchingEntry& a, const MatchingEntry& b) { return a.family < b.family; });
        return m;
    }

    // Case B: distinct heavy centers exist by counting; links + recursion.
    std::vector<Vertex> centers;
    std::vector<bool> taken(static_cast<std::size_t>(n) + 1, false);
    if (!pick_distinct(heavy, 0, centers, taken))
        throw consistency_error("no system of distinct heavy centers despite t heavy vertices "
                                "per family");
    return disjoint_via_links(fams, centers, ctx, depth);
}

}  // namespace detail

// Rainbow t-matching from t equally-uniform families, each above the cover
// bound, via the multicolor case analysis.
inline ExtractionReport rainbow_by_thm2(const ColoredFamilies& fams) {
    const int k = fams[0].k();
    for (int i = 1; i < fams.t(); ++i)
        if (fams[i].k() != k)
            throw precondition_error("all families must share one uniformity, family " +
                                     std::to_string(i + 1) + " has k=" +
                                     std::to_string(fams[i].k()) + " instead of " +
                                     std::to_string(k));
    for (int i = 0; i < fams.t(); ++i)
        detail::check_theorem_range(fams.n(), k, fams.t(), fams[i].size(), i + 1);
    detail::ExtractionContext ctx;
    Matching m = detail::thm2_extract(fams, ctx, 1);
    ExtractionReport report{std::move(m), ctx.max_depth, std::move(ctx.trace)};
    detail::verify_report(fams, report, MatchingKind::Rainbow,
                          static_cast<std::size_t>(fams.t()));
    return report;
}

}  // namespace shg
