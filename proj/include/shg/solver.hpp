#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "shg/arith.hpp"
#include "shg/errors.hpp"
#include "shg/family.hpp"

namespace shg {

// Hard caps for the exact searches. A solver either returns a proven answer
// within the budget or throws resource_error; it never returns a guess.
struct SolverLimits {
    std::uint64_t max_nodes = 50'000'000;
    std::uint64_t max_millis = 60'000;
};

namespace detail {

class SearchBudget {
public:
    explicit SearchBudget(const SolverLimits& limits)
        : limits_(limits), start_(std::chrono::steady_clock::now()) {}

    void tick() {
        if (++nodes_ > limits_.max_nodes)
            throw resource_error("node budget of " + std::to_string(limits_.max_nodes) +
                                 " exhausted");
        if ((nodes_ & 1023) == 0) {
            auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                               std::chrono::steady_clock::now() - start_)
                               .count();
            if (elapsed > static_cast<long long>(limits_.max_millis))
                throw resource_error("time budget of " + std::to_string(limits_.max_millis) +
                                     "ms exhausted");
        }
    }

    std::uint64_t nodes() const { return nodes_; }

private:
    SolverLimits limits_;
    std::uint64_t nodes_ = 0;
    std::chrono::steady_clock::time_point start_;
};

inline bool edge_free(const Edge& e, const std::vector<bool>& used) {
    for (Vertex v : e)
        if (used[static_cast<std::size_t>(v)]) return false;
    return true;
}

inline void mark(const Edge& e, std::vector<bool>& used, bool value) {
    for (Vertex v : e) used[static_cast<std::size_t>(v)] = value;
}

}  // namespace detail

// First-fit matching over the colex edge order; a fast lower bound.
inline Matching greedy_matching(const SetFamily& f) {
    Matching m;
    std::vector<bool> used(static_cast<std::size_t>(f.n()) + 1, false);
    for (const Edge& e : f.edges()) {
        if (!detail::edge_free(e, used)) continue;
        detail::mark(e, used, true);
        m.entries.push_back({0, e});
    }
    return m;
}

struct MaxMatchingResult {
    int nu = 0;
    Matching witness;
    std::uint64_t nodes = 0;
};

namespace detail {

struct MaxMatchingSearch {
    const std::vector<Edge>& edges;
    int k;
    SearchBudget budget;
    std::vector<bool> used;
    std::vector<MatchingEntry> current;
    std::vector<MatchingEntry> best;
    int free_vertices;

    void run(std::size_t from) {
        budget.tick();
        if (current.size() > best.size()) best = current;
        // Remaining edges and remaining vertex capacity both bound the gain.
        std::size_t gain = std::min(edges.size() - from,
                                    static_cast<std::size_t>(free_vertices / std::max(k, 1)));
        if (k == 0) gain = edges.size() - from;
        if (current.size() + gain <= best.size()) return;
        for (std::size_t idx = from; idx < edges.size(); ++idx) {
            if (edges.size() - idx + current.size() <= best.size()) break;
            const Edge& e = edges[idx];
            if (!edge_free(e, used)) continue;
            mark(e, used, true);
            free_vertices -= static_cast<int>(e.size());
            current.push_back({0, e});
            run(idx + 1);
            current.pop_back();
            free_vertices += static_cast<int>(e.size());
            mark(e, used, false);
        }
    }
};

}  // namespace detail

// Exact maximum matching size with a witness, by branch and bound seeded with
// the greedy matching.
inline MaxMatchingResult max_matching(const SetFamily& f, const SolverLimits& limits = {}) {
    detail::MaxMatchingSearch search{f.edges(),
                                     f.k(),
                                     detail::SearchBudget(limits),
                                     std::vector<bool>(static_cast<std::size_t>(f.n()) + 1, false),
                                     {},
                                     greedy_matching(f).entries,
                                     f.n()};
    search.run(0);
    MaxMatchingResult r;
    r.nu = static_cast<int>(search.best.size());
    r.witness.entries = std::move(search.best);
    r.nodes = search.budget.nodes();
    return r;
}

struct TMatchingResult {
    bool found = false;
    Matching witness;
    std::uint64_t nodes = 0;
};

namespace detail {

struct TMatchingSearch {
    const std::vector<Edge>& edges;
    int k;
    std::size_t t;
    SearchBudget budget;
    std::vector<bool> used;
    std::vector<MatchingEntry> current;
    int free_vertices;

    bool run(std::size_t from) {
        budget.tick();
        if (current.size() >= t) return true;
        std::size_t need = t - current.size();
        if (edges.size() - from < need) return false;
        if (k > 0 && static_cast<std::size_t>(free_vertices / k) < need) return false;
        for (std::size_t idx = from; idx < edges.size(); ++idx) {
            if (edges.size() - idx < need) break;
            const Edge& e = edges[idx];
            if (!edge_free(e, used)) continue;
            mark(e, used, true);
            free_vertices -= static_cast<int>(e.size());
            current.push_back({0, e});
            if (run(idx + 1)) return true;
            current.pop_back();
            free_vertices += static_cast<int>(e.size());
            mark(e, used, false);
        }
        return false;
    }
};

}  // namespace detail

// Decides whether t pairwise disjoint edges exist, stopping at the first hit.
// found=false is a proven negative, not a timeout.
inline TMatchingResult has_t_matching(const SetFamily& f, int t, const SolverLimits& limits = {}) {
    if (t < 0) throw validation_error("matching size must be nonnegative");
    detail::TMatchingSearch search{f.edges(),
                                   f.k(),
                                   static_cast<std::size_t>(t),
                                   detail::SearchBudget(limits),
                                   std::vector<bool>(static_cast<std::size_t>(f.n()) + 1, false),
                                   {},
                                   f.n()};
    TMatchingResult r;
    r.found = search.run(0);
    if (r.found) r.witness.entries = std::move(search.current);
    r.nodes = search.budget.nodes();
    return r;
}

struct RainbowResult {
    std::optional<Matching> matching;
    std::uint64_t nodes = 0;
};

namespace detail {

struct RainbowSearch {
    const ColoredFamilies& fams;
    const std::vector<int>& order;  // family indices, smallest family first
    SearchBudget budget;
    std::vector<bool> used;
    std::vector<MatchingEntry> current;

    bool run(std::size_t level) {
        budget.tick();
        if (level == order.size()) return true;
        int fam = order[level];
        for (const Edge& e : fams[fam].edges()) {
            if (!edge_free(e, used)) continue;
            mark(e, used, true);
            current.push_back({fam, e});
            if (run(level + 1)) return true;
            current.pop_back();
            mark(e, used, false);
        }
        return false;
    }
};

}  // namespace detail

// Exhaustive search for a full rainbow matching: one edge per family, all
// pairwise disjoint. Families are processed smallest first (ties by index) to
// fail fast; reported entries are sorted by family index.
inline RainbowResult rainbow_matching(const ColoredFamilies& fams,
                                      const SolverLimits& limits = {}) {
    std::vector<int> order(static_cast<std::size_t>(fams.t()));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return fams[a].size() < fams[b].size(); });
    detail::RainbowSearch search{fams, order, detail::SearchBudget(limits),
                                 std::vector<bool>(static_cast<std::size_t>(fams.n()) + 1, false),
                                 {}};
    RainbowResult r;
    if (search.run(0)) {
        std::sort(search.current.begin(), search.current.end(),
                  [](const MatchingEntry& a, const MatchingEntry& b) { return a.family < b.family; });
        r.matching = Matching{std::move(search.current)};
    }
    r.nodes = search.budget.nodes();
    return r;
}

struct ExtremalResult {
    std::uint64_t max_edges = 0;
    SetFamily extremal;
    std::uint64_t nodes = 0;
};

namespace detail {

struct NoTMatchingSearch {
    const std::vector<Edge>& all;
    int t;
    SearchBudget budget;
    std::vector<Edge> current;
    std::vector<Edge> best;

    // Would adding e to the current (t-matching-free) selection create t
    // pairwise disjoint edges? Equivalent: t-1 disjoint edges among the
    // selection, all avoiding e.
    bool completes_t_matching(const Edge& e) {
        std::vector<const Edge*> cand;
        for (const Edge& c : current)
            if (c.disjoint(e)) cand.push_back(&c);
        std::vector<const Edge*> picked;
        return find_disjoint(cand, 0, t - 1, picked);
    }

    bool find_disjoint(const std::vector<const Edge*>& cand, std::size_t from, int need,
                       std::vector<const Edge*>& picked) {
        if (need == 0) return true;
        for (std::size_t idx = from; idx < cand.size(); ++idx) {
            if (cand.size() - idx < static_cast<std::size_t>(need)) break;
            bool ok = true;
            for (const Edge* p : picked)
                if (!p->disjoint(*cand[idx])) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            picked.push_back(cand[idx]);
            if (find_disjoint(cand, idx + 1, need - 1, picked)) return true;
            picked.pop_back();
        }
        return false;
    }

    void run(std::size_t idx) {
        budget.tick();
        if (current.size() > best.size()) best = current;
        if (idx == all.size()) return;
        if (current.size() + (all.size() - idx) <= best.size()) return;
        // Include first so ties resolve toward the colex-earliest family.
        if (!completes_t_matching(all[idx])) {
            current.push_back(all[idx]);
            run(idx + 1);
            current.pop_back();
        }
        run(idx + 1);
    }
};

}  // namespace detail

// Exact maximum edge count of a k-uniform family on [n] with no t pairwise
// disjoint edges, plus the first extremal family in include-first order.
// Only meant for tiny ground sets: the search walks all C(n,k) candidates.
inline ExtremalResult max_edges_no_t_matching(int n, int k, int t,
                                              const SolverLimits& limits = {}) {
    if (n < 0 || k < 1 || t < 1)
        throw validation_error("extremal search requires n >= 0, k >= 1, t >= 1");
    u128 total = binom(n, k);
    if (total > 24)
        throw resource_error("extremal search supports at most C(n,k) <= 24 candidate edges, got " +
                             to_decimal(total));
    std::vector<Edge> all = all_ksubsets(n, k);
    detail::NoTMatchingSearch search{all, t, detail::SearchBudget(limits), {}, {}};
    search.run(0);
    ExtremalResult r;
    r.max_edges = search.best.size();
    r.extremal = canonical_family(n, k, std::move(search.best));
    r.nodes = search.budget.nodes();
    return r;
}

}  // namespace shg
