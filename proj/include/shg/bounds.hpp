#pragma once

#include <string>
#include <vector>

#include "shg/arith.hpp"
#include "shg/errors.hpp"
#include "shg/family.hpp"

namespace shg {

// Largest size of a k-uniform family on [n] whose edges all meet [t-1]:
// C(n,k) - C(n-t+1,k). The degenerate t=1 case is the empty family.
inline u128 cover_bound(int n, int k, int t) {
    if (t < 1 || t > n || k < 1 || k > n)
        throw precondition_error("cover bound requires 1 <= t <= n and 1 <= k <= n, got n=" +
                                 std::to_string(n) + " k=" + std::to_string(k) + " t=" +
                                 std::to_string(t));
    return checked_sub(binom(n, k), binom(n - t + 1, k));
}

// Size of the complete k-uniform family on kt-1 vertices: C(kt-1,k).
inline u128 clique_bound(int k, int t) {
    if (t < 1 || k < 1)
        throw precondition_error("clique bound requires k >= 1 and t >= 1, got k=" +
                                 std::to_string(k) + " t=" + std::to_string(t));
    return binom(static_cast<std::int64_t>(k) * t - 1, k);
}

enum class Regime { CoverDominant, CliqueDominant, Tie };

inline const char* regime_name(Regime r) {
    switch (r) {
        case Regime::CoverDominant: return "cover_dominant";
        case Regime::CliqueDominant: return "clique_dominant";
        default: return "tie";
    }
}

struct BoundReport {
    int n = 0;
    int k = 0;
    int t = 0;
    u128 cover = 0;
    u128 clique = 0;
    u128 erdos = 0;       // max(cover, clique)
    Regime regime = Regime::Tie;
    bool in_conjecture_range = false;  // kt <= n
    bool in_cover_range = false;       // t(k+1) <= n, where cover dominates
    bool in_theorem_range = false;     // 3k^2 t < n
};

inline BoundReport erdos_bound(int n, int k, int t) {
    BoundReport r;
    r.n = n;
    r.k = k;
    r.t = t;
    r.cover = cover_bound(n, k, t);
    r.clique = clique_bound(k, t);
    r.erdos = r.cover > r.clique ? r.cover : r.clique;
    r.regime = r.cover > r.clique
                   ? Regime::CoverDominant
                   : (r.clique > r.cover ? Regime::CliqueDominant : Regime::Tie);
    long long kt = static_cast<long long>(k) * t;
    r.in_conjecture_range = kt <= n;
    r.in_cover_range = static_cast<long long>(t) * (k + 1) <= n;
    r.in_theorem_range = 3ll * k * k * t < n;
    return r;
}

// Per-family size above which t families of (possibly mixed) uniformities
// are guaranteed a rainbow matching: |F_i| > (t-1) * C(n-1, k_i - 1).
inline u128 rainbow_threshold(int n, int k_i, int t) {
    if (t < 1 || k_i < 1 || k_i > n)
        throw precondition_error("rainbow threshold requires t >= 1 and 1 <= k_i <= n, got n=" +
                                 std::to_string(n) + " k_i=" + std::to_string(k_i) + " t=" +
                                 std::to_string(t));
    return checked_mul(static_cast<u128>(t - 1), binom(n - 1, k_i - 1));
}

struct GapCheck {
    bool holds = false;
    u128 lhs = 0;  // (t-1)^2 * (3k-2) * C(n-2, k-2)
    u128 rhs = 0;  // the cover bound C(n,k) - C(n-t+1,k)
};

// The degree-sum slack that powers the sweep case of the t-disjoint-edges
// argument: any family larger than the cover bound has an edge avoiding the
// vertices of a fixed (t-1)-matching. lhs < rhs whenever 3k^2 t < n; t=1
// degenerates to the trivial 0 < 0 fail.
inline GapCheck degree_sum_gap_check(int n, int k, int t) {
    if (t < 1 || t > n || k < 2 || k > n)
        throw precondition_error("gap check requires 1 <= t <= n and 2 <= k <= n, got n=" +
                                 std::to_string(n) + " k=" + std::to_string(k) + " t=" +
                                 std::to_string(t));
    GapCheck g;
    u128 tm1 = static_cast<u128>(t - 1);
    g.lhs = checked_mul(checked_mul(tm1, tm1),
                        checked_mul(static_cast<u128>(3 * k - 2), binom(n - 2, k - 2)));
    g.rhs = cover_bound(n, k, t);
    g.holds = g.lhs < g.rhs;
    return g;
}

// All k-subsets of [n] meeting {1, ..., t-1}; attains the cover bound.
inline SetFamily gen_cover_construction(int n, int k, int t) {
    if (t < 1 || t - 1 > n || k < 1 || k > n)
        throw precondition_error("cover construction requires t-1 <= n and 1 <= k <= n, got n=" +
                                 std::to_string(n) + " k=" + std::to_string(k) + " t=" +
                                 std::to_string(t));
    std::vector<Edge> edges;
    for (const Edge& e : KSubsetRange(n, k)) {
        bool meets = false;
        for (Vertex v = 1; v < t; ++v)
            if (e.contains(v)) {
                meets = true;
                break;
            }
        if (meets) edges.push_back(e);
    }
    return make_family(n, k, std::move(edges));
}

// All k-subsets of {1, ..., kt-1}; attains the clique bound.
inline SetFamily gen_clique_construction(int n, int k, int t) {
    if (k < 1 || t < 1 || static_cast<long long>(k) * t - 1 > n)
        throw precondition_error("clique construction requires kt-1 <= n, got n=" +
                                 std::to_string(n) + " k=" + std::to_string(k) + " t=" +
                                 std::to_string(t));
    std::vector<Edge> edges;
    for (const Edge& e : KSubsetRange(k * t - 1, k)) edges.push_back(e);
    return make_family(n, k, std::move(edges));
}

// t copies of the full star at vertex 1: each family meets the rainbow
// threshold with equality, and no rainbow t-matching exists for t >= 2.
inline ColoredFamilies gen_star_families(int n, int k, int t) {
    if (t < 1 || k < 1 || k > n)
        throw precondition_error("star families require t >= 1 and 1 <= k <= n, got n=" +
                                 std::to_string(n) + " k=" + std::to_string(k) + " t=" +
                                 std::to_string(t));
    std::vector<Edge> star;
    for (const Edge& e : KSubsetRange(n, k))
        if (e.contains(1)) star.push_back(e);
    SetFamily f = make_family(n, k, std::move(star));
    return ColoredFamilies(n, std::vector<SetFamily>(static_cast<std::size_t>(t), f));
}

}  // namespace shg
