#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "shg/errors.hpp"
#include "shg/family.hpp"

namespace shg {

// The (i, j)-shift with j < i: an edge containing i but not j is replaced by
// (E \ {i}) u {j} unless that set is already present, in which case the edge
// is kept (the move is blocked). All moves are decided against the family as
// it was before the shift.
struct ShiftOp {
    Vertex i = 0;
    Vertex j = 0;

    bool operator==(const ShiftOp&) const = default;
};

inline void validate_shift_op(ShiftOp op, int n) {
    if (op.j < 1 || op.i > n || op.j >= op.i)
        throw validation_error("shift needs 1 <= j < i <= n, got i=" + std::to_string(op.i) +
                               " j=" + std::to_string(op.j) + " n=" + std::to_string(n));
}

inline SetFamily apply_shift(const SetFamily& f, ShiftOp op) {
    validate_shift_op(op, f.n());
    std::vector<Edge> out;
    out.reserve(f.size());
    for (const Edge& e : f.edges()) {
        if (e.contains(op.i) && !e.contains(op.j)) {
            Edge moved = e.with_replaced(op.i, op.j);
            if (!f.contains(moved)) {
                out.push_back(std::move(moved));
                continue;
            }
        }
        out.push_back(e);
    }
    SetFamily shifted = canonical_family(f.n(), f.k(), std::move(out));
    if (shifted.size() != f.size())
        throw consistency_error("shift changed the edge count of a family");
    return shifted;
}

// Shifts are applied to each family independently; blocking is per family.
inline ColoredFamilies apply_shift(const ColoredFamilies& fams, ShiftOp op) {
    std::vector<SetFamily> out;
    out.reserve(fams.families().size());
    for (const SetFamily& f : fams.families()) out.push_back(apply_shift(f, op));
    return ColoredFamilies(fams.n(), std::move(out));
}

// One recorded compression step: the operation plus the complete state it was
// applied to. Full snapshots make the pullback self-checking.
struct ShiftStep {
    ShiftOp op;
    ColoredFamilies before;
};

struct ShiftTrace {
    std::vector<ShiftStep> steps;
};

namespace detail {

inline std::uint64_t vertex_weight(const ColoredFamilies& fams) {
    std::uint64_t w = 0;
    for (const SetFamily& f : fams.families())
        for (const Edge& e : f.edges())
            for (Vertex v : e) w += static_cast<std::uint64_t>(v);
    return w;
}

}  // namespace detail

// Repeatedly applies S_{target,j} for j = 1..target-1 until no shift changes
// any family. Only effective steps are recorded. Terminates because every
// effective step strictly lowers the total vertex weight.
inline std::pair<ColoredFamilies, ShiftTrace> compress_to_target(const ColoredFamilies& fams,
                                                                 Vertex target) {
    if (target != fams.n())
        throw precondition_error("compression target must equal n=" + std::to_string(fams.n()) +
                                 ", got " + std::to_string(target));
    ColoredFamilies current = fams;
    ShiftTrace trace;
    if (target < 2) return {current, trace};
    bool changed = true;
    while (changed) {
        changed = false;
        for (Vertex j = 1; j < target; ++j) {
            ShiftOp op{target, j};
            ColoredFamilies next = apply_shift(current, op);
            if (next == current) continue;
            if (detail::vertex_weight(next) >= detail::vertex_weight(current))
                throw consistency_error("effective shift failed to lower total vertex weight");
            trace.steps.push_back({op, current});
            current = std::move(next);
            changed = true;
        }
    }
    return {current, trace};
}

inline std::pair<SetFamily, ShiftTrace> compress_to_target(const SetFamily& f, Vertex target) {
    auto [fams, trace] = compress_to_target(ColoredFamilies(f.n(), {f}), target);
    return {fams[0], trace};
}

// True when every S_{target,j} leaves every family unchanged.
inline bool stable_under_target_shifts(const ColoredFamilies& fams, Vertex target) {
    if (target != fams.n())
        throw precondition_error("stability target must equal n=" + std::to_string(fams.n()) +
                                 ", got " + std::to_string(target));
    for (Vertex j = 1; j < target; ++j)
        if (apply_shift(fams, ShiftOp{target, j}) != fams) return false;
    return true;
}

// Split of a family by its largest ground vertex n: with_n holds the edges
// through n with n removed (uniformity k-1), without_n the rest. Both live on
// ground set [n-1].
struct Decomposition {
    SetFamily with_n;
    SetFamily without_n;
    Vertex origin = 0;  // the vertex that was split off
};

inline Decomposition decompose(const SetFamily& f) {
    if (f.k() < 1) throw precondition_error("decomposition requires uniformity at least 1");
    if (f.n() < 1) throw precondition_error("decomposition requires a nonempty ground set");
    std::vector<Edge> with_n;
    std::vector<Edge> without_n;
    for (const Edge& e : f.edges()) {
        if (e.contains(f.n()))
            with_n.push_back(e.without(f.n()));
        else
            without_n.push_back(e);
    }
    return {canonical_family(f.n() - 1, f.k() - 1, std::move(with_n)),
            canonical_family(f.n() - 1, f.k(), std::move(without_n)), f.n()};
}

// Rewinds a rainbow matching through a recorded compression, one step at a
// time from the last shift to the first. After undoing step s the matching is
// valid in that step's `before` families; at most one matched edge can be an
// image created by the step, and undoing it may force one swap with the edge
// that blocked it.
inline Matching pull_back_matching(const ShiftTrace& trace, Matching m) {
    if (trace.steps.empty()) return m;

    auto validate = [](const ColoredFamilies& fams, const Matching& mm, const char* where) {
        if (auto why = matching_violation(fams, mm, MatchingKind::Rainbow))
            throw consistency_error(std::string("pullback ") + where + ": " + *why);
    };

    // The matching must be valid in the final (fully shifted) families.
    ColoredFamilies expected_after =
        apply_shift(trace.steps.back().before, trace.steps.back().op);
    validate(expected_after, m, "input");

    for (std::size_t s = trace.steps.size(); s-- > 0;) {
        const ShiftStep& step = trace.steps[s];
        const ColoredFamilies& pre = step.before;
        // Trace chain check: each recorded state must reproduce the next.
        ColoredFamilies post = apply_shift(pre, step.op);
        if (post != expected_after)
            throw consistency_error("trace snapshots are not a consistent shift chain");

        const Vertex i = step.op.i;
        const Vertex j = step.op.j;

        // Locate matched edges that do not exist before this step: they must
        // be images created by it. Two images would both contain j and touch.
        int moved = -1;
        for (std::size_t a = 0; a < m.entries.size(); ++a) {
            if (pre[m.entries[a].family].contains(m.entries[a].edge)) continue;
            if (moved >= 0)
                throw consistency_error("two matched edges were created by one shift step");
            moved = static_cast<int>(a);
        }
        if (moved >= 0) {
            MatchingEntry& me = m.entries[static_cast<std::size_t>(moved)];
            if (!me.edge.contains(j) || me.edge.contains(i))
                throw consistency_error("matched edge " + me.edge.to_string() +
                                        " is not an image of the step on i=" + std::to_string(i) +
                                        " j=" + std::to_string(j));
            Edge original = me.edge.with_replaced(j, i);
            if (!pre[me.family].contains(original))
                throw consistency_error("image edge " + me.edge.to_string() +
                                        " has no preimage in its family");
            me.edge = std::move(original);
            // The restored edge uses i; if another matched edge holds i, that
            // edge survived the shift only because its move was blocked, so
            // the blocking edge (with i swapped for j) is available for it.
            for (std::size_t a = 0; a < m.entries.size(); ++a) {
                if (static_cast<int>(a) == moved) continue;
                MatchingEntry& other = m.entries[a];
                if (!other.edge.contains(i)) continue;
                Edge swapped = other.edge.with_replaced(i, j);
                if (!pre[other.family].contains(swapped))
                    throw consistency_error("blocked counterpart " + swapped.to_string() +
                                            " missing from family " +
                                            std::to_string(other.family + 1));
                other.edge = std::move(swapped);
                break;  // disjointness allows at most one such edge
            }
        }
        validate(pre, m, "step");
        expected_after = pre;
    }
    return m;
}

enum class Side { WithN, WithoutN };

// Re-extends a rainbow matching of decomposed parts into the intact families.
// sides[i] names the part of family i the matching used: entries on a
// WithoutN side are kept as-is, entries on a WithN side get one new vertex
// each. The lowest-indexed WithN family receives n itself, every other one
// the smallest vertex not used anywhere; stability under the S_{n,j} shifts
// guarantees those completions exist in the families.
inline Matching lift_decomposed_matching(const ColoredFamilies& fams,
                                         const std::vector<Side>& sides, const Matching& m) {
    const int n = fams.n();
    const int t = fams.t();
    if (static_cast<int>(sides.size()) != t)
        throw validation_error("need one side per family, got " + std::to_string(sides.size()) +
                               " for t=" + std::to_string(t));
    long long total_k = 0;
    for (const SetFamily& f : fams.families()) total_k += f.k();
    if (total_k > n)
        throw precondition_error("lift requires k_1+...+k_t <= n");
    if (!stable_under_target_shifts(fams, n))
        throw precondition_error("families are not stable under the shifts toward n");

    // Build the decomposed instance the matching claims to live in.
    std::vector<SetFamily> parts;
    parts.reserve(static_cast<std::size_t>(t));
    for (int i = 0; i < t; ++i) {
        Decomposition d = decompose(fams[i]);
        parts.push_back(sides[static_cast<std::size_t>(i)] == Side::WithN ? std::move(d.with_n)
                                                                          : std::move(d.without_n));
    }
    ColoredFamilies decomposed(n - 1, std::move(parts));
    if (m.size() != static_cast<std::size_t>(t))
        throw precondition_error("lift needs one matched edge per family");
    if (auto why = matching_violation(decomposed, m, MatchingKind::Rainbow))
        throw precondition_error("matching invalid for the decomposed families: " + *why);

    std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
    for (const MatchingEntry& e : m.entries)
        for (Vertex v : e.edge) used[static_cast<std::size_t>(v)] = true;

    // Families needing a completion vertex, in ascending family order.
    std::vector<int> with_n_order;
    for (int i = 0; i < t; ++i)
        if (sides[static_cast<std::size_t>(i)] == Side::WithN) with_n_order.push_back(i);

    Matching lifted = m;
    bool n_assigned = false;
    Vertex cursor = 1;
    for (int i : with_n_order) {
        Vertex x;
        if (!n_assigned) {
            x = n;  // edges of the decomposed instance live on [n-1]
            n_assigned = true;
        } else {
            while (cursor <= n && used[static_cast<std::size_t>(cursor)]) ++cursor;
            if (cursor > n) throw consistency_error("no free vertex left for a completion");
            x = cursor;
        }
        used[static_cast<std::size_t>(x)] = true;
        MatchingEntry* entry = nullptr;
        for (MatchingEntry& e : lifted.entries)
            if (e.family == i) entry = &e;
        Edge extended = entry->edge.with(x);
        if (!fams[i].contains(extended))
            throw consistency_error("completion " + extended.to_string() +
                                    " missing from family " + std::to_string(i + 1) +
                                    " despite shift stability");
        entry->edge = std::move(extended);
    }
    // WithoutN entries are already edges of the intact families.
    for (int i = 0; i < t; ++i) {
        if (sides[static_cast<std::size_t>(i)] == Side::WithN) continue;
        for (const MatchingEntry& e : lifted.entries)
            if (e.family == i && !fams[i].contains(e.edge))
                throw consistency_error("edge " + e.edge.to_string() +
                                        " missing from intact family " + std::to_string(i + 1));
    }
    if (auto why = matching_violation(fams, lifted, MatchingKind::Rainbow))
        throw consistency_error("lifted matching invalid: " + *why);
    return lifted;
}

}  // namespace shg
