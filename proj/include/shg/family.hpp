#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "shg/arith.hpp"
#include "shg/errors.hpp"

namespace shg {

// Vertices are 1-based ids on a ground set [n] = {1, ..., n}.
using Vertex = int;

// A finite set of distinct vertices, kept sorted ascending.
class Edge {
public:
    Edge() = default;  // the empty set

    explicit Edge(std::vector<Vertex> vs) : v_(std::move(vs)) {
        std::sort(v_.begin(), v_.end());
        for (std::size_t i = 0; i + 1 < v_.size(); ++i)
            if (v_[i] == v_[i + 1])
                throw validation_error("edge " + brace_list(v_) + " repeats vertex " +
                                       std::to_string(v_[i]));
    }

    Edge(std::initializer_list<Vertex> vs) : Edge(std::vector<Vertex>(vs)) {}

    std::size_t size() const { return v_.size(); }
    bool empty() const { return v_.empty(); }
    const std::vector<Vertex>& verts() const { return v_; }
    auto begin() const { return v_.begin(); }
    auto end() const { return v_.end(); }

    bool contains(Vertex v) const { return std::binary_search(v_.begin(), v_.end(), v); }

    bool disjoint(const Edge& other) const {
        auto a = v_.begin();
        auto b = other.v_.begin();
        while (a != v_.end() && b != other.v_.end()) {
            if (*a < *b)
                ++a;
            else if (*b < *a)
                ++b;
            else
                return false;
        }
        return true;
    }

    Edge without(Vertex v) const {
        std::vector<Vertex> out;
        out.reserve(v_.size());
        for (Vertex x : v_)
            if (x != v) out.push_back(x);
        if (out.size() == v_.size())
            throw validation_error("edge " + to_string() + " does not contain " + std::to_string(v));
        Edge e;
        e.v_ = std::move(out);  // still sorted and distinct
        return e;
    }

    Edge with(Vertex v) const {
        if (contains(v))
            throw validation_error("edge " + to_string() + " already contains " + std::to_string(v));
        Edge e;
        e.v_ = v_;
        e.v_.insert(std::upper_bound(e.v_.begin(), e.v_.end(), v), v);
        return e;
    }

    // Replace member i by non-member j, preserving sortedness.
    Edge with_replaced(Vertex i, Vertex j) const { return without(i).with(j); }

    std::string to_string() const { return brace_list(v_); }

    bool operator==(const Edge&) const = default;

    // Colex order: compare largest elements first. This is the canonical
    // edge order everywhere in the library.
    friend bool operator<(const Edge& a, const Edge& b) {
        return std::lexicographical_compare(a.v_.rbegin(), a.v_.rend(), b.v_.rbegin(),
                                            b.v_.rend());
    }

private:
    static std::string brace_list(const std::vector<Vertex>& vs) {
        std::string s = "{";
        for (std::size_t i = 0; i < vs.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(vs[i]);
        }
        return s + "}";
    }

    std::vector<Vertex> v_;
};

// A k-uniform set family on ground set [n]. Edges are distinct and stored in
// colex order, so equality of families is equality of representations.
class SetFamily {
public:
    SetFamily() = default;

    SetFamily(int n, int k) : n_(n), k_(k) {
        if (n < 0) throw validation_error("ground set size must be nonnegative");
        if (k < 0) throw validation_error("uniformity must be nonnegative");
    }

    int n() const { return n_; }
    int k() const { return k_; }
    std::size_t size() const { return edges_.size(); }
    bool empty() const { return edges_.empty(); }
    const std::vector<Edge>& edges() const { return edges_; }

    bool contains(const Edge& e) const {
        return std::binary_search(edges_.begin(), edges_.end(), e);
    }

    bool operator==(const SetFamily&) const = default;

    friend SetFamily canonical_family(int n, int k, std::vector<Edge> raw);

private:
    int n_ = 0;
    int k_ = 0;
    std::vector<Edge> edges_;
};

// Validating constructor shared by all family-producing operations: checks
// every edge against (n, k), then sorts and deduplicates. Allows k = 0
// because decomposition of a 1-uniform family legally produces it; user
// input goes through make_family, which insists on k >= 1.
inline SetFamily canonical_family(int n, int k, std::vector<Edge> raw) {
    SetFamily f(n, k);
    for (const Edge& e : raw) {
        if (static_cast<int>(e.size()) != k)
            throw validation_error("edge " + e.to_string() + " has size " +
                                   std::to_string(e.size()) + ", expected " + std::to_string(k));
        for (Vertex v : e)
            if (v < 1 || v > n)
                throw validation_error("edge " + e.to_string() + " has vertex " +
                                       std::to_string(v) + " outside 1..n with n=" +
                                       std::to_string(n));
    }
    std::sort(raw.begin(), raw.end());
    raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
    f.edges_ = std::move(raw);
    return f;
}

inline SetFamily make_family(int n, int k, std::vector<Edge> raw) {
    if (k < 1) throw validation_error("uniformity must be at least 1");
    return canonical_family(n, k, std::move(raw));
}

// An ordered tuple (F_1, ..., F_t) of families on a common ground set [n].
// Uniformities may differ between families.
class ColoredFamilies {
public:
    ColoredFamilies(int n, std::vector<SetFamily> fams) : n_(n), fams_(std::move(fams)) {
        if (n < 0) throw validation_error("ground set size must be nonnegative");
        if (fams_.empty()) throw validation_error("at least one family is required");
        for (std::size_t i = 0; i < fams_.size(); ++i)
            if (fams_[i].n() != n)
                throw validation_error("family " + std::to_string(i + 1) + " has ground set " +
                                       std::to_string(fams_[i].n()) + ", expected " +
                                       std::to_string(n));
    }

    int n() const { return n_; }
    int t() const { return static_cast<int>(fams_.size()); }
    const std::vector<SetFamily>& families() const { return fams_; }
    const SetFamily& operator[](int i) const { return fams_[static_cast<std::size_t>(i)]; }

    bool operator==(const ColoredFamilies&) const = default;

private:
    int n_ = 0;
    std::vector<SetFamily> fams_;
};

// One matched edge plus the 0-based index of the family it was taken from.
// Single-family matchings use family index 0 throughout.
struct MatchingEntry {
    int family = 0;
    Edge edge;

    bool operator==(const MatchingEntry&) const = default;
};

struct Matching {
    std::vector<MatchingEntry> entries;

    std::size_t size() const { return entries.size(); }

    bool operator==(const Matching&) const = default;
};

enum class MatchingKind { Plain, Rainbow };

// Returns a description of the first violated matching invariant, or nullopt
// when m is valid: every edge belongs to its family, edges are pairwise
// disjoint, and (rainbow only) family indices are distinct.
inline std::optional<std::string> matching_violation(const ColoredFamilies& fams,
                                                     const Matching& m, MatchingKind kind) {
    std::vector<bool> family_used(static_cast<std::size_t>(fams.t()), false);
    for (std::size_t a = 0; a < m.entries.size(); ++a) {
        const MatchingEntry& e = m.entries[a];
        if (e.family < 0 || e.family >= fams.t())
            return "entry " + std::to_string(a + 1) + " references family index " +
                   std::to_string(e.family + 1) + " outside 1.." + std::to_string(fams.t());
        if (!fams[e.family].contains(e.edge))
            return "edge " + e.edge.to_string() + " is not in family " +
                   std::to_string(e.family + 1);
        if (kind == MatchingKind::Rainbow) {
            if (family_used[static_cast<std::size_t>(e.family)])
                return "family " + std::to_string(e.family + 1) + " is used twice";
            family_used[static_cast<std::size_t>(e.family)] = true;
        }
        for (std::size_t b = 0; b < a; ++b)
            if (!m.entries[b].edge.disjoint(e.edge))
                return "edges " + m.entries[b].edge.to_string() + " and " + e.edge.to_string() +
                       " intersect";
    }
    return std::nullopt;
}

inline std::optional<std::string> matching_violation(const SetFamily& f, const Matching& m) {
    return matching_violation(ColoredFamilies(f.n(), {f}), m, MatchingKind::Plain);
}

// Number of edges containing v.
inline int degree(const SetFamily& f, Vertex v) {
    if (v < 1 || v > f.n())
        throw validation_error("vertex " + std::to_string(v) + " outside 1..n with n=" +
                               std::to_string(f.n()));
    int d = 0;
    for (const Edge& e : f.edges())
        if (e.contains(v)) ++d;
    return d;
}

// All (vertex, degree) pairs sorted by degree descending, ties by ascending id.
inline std::vector<std::pair<Vertex, int>> degree_sequence(const SetFamily& f) {
    std::vector<std::pair<Vertex, int>> out;
    out.reserve(static_cast<std::size_t>(f.n()));
    std::vector<int> deg(static_cast<std::size_t>(f.n()) + 1, 0);
    for (const Edge& e : f.edges())
        for (Vertex v : e) ++deg[static_cast<std::size_t>(v)];
    for (Vertex v = 1; v <= f.n(); ++v) out.emplace_back(v, deg[static_cast<std::size_t>(v)]);
    std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    });
    return out;
}

struct LinkResult {
    SetFamily family;         // (k-1)-uniform, still labeled on [n]
    int effective_vertices;   // n minus v minus the excluded vertices
};

// Link of v: {E \ {v} : v in E, E avoids every vertex of `excluded`}.
// The result keeps the original labels; effective_vertices records how many
// ground vertices remain usable.
inline LinkResult link(const SetFamily& f, Vertex v, const std::vector<Vertex>& excluded) {
    if (f.k() < 2) throw precondition_error("link requires uniformity at least 2");
    if (v < 1 || v > f.n())
        throw validation_error("vertex " + std::to_string(v) + " outside 1..n with n=" +
                               std::to_string(f.n()));
    for (Vertex x : excluded) {
        if (x < 1 || x > f.n())
            throw validation_error("excluded vertex " + std::to_string(x) +
                                   " outside 1..n with n=" + std::to_string(f.n()));
        if (x == v)
            throw precondition_error("excluded set must not contain the link vertex " +
                                     std::to_string(v));
    }
    std::vector<Vertex> ex = excluded;
    std::sort(ex.begin(), ex.end());
    ex.erase(std::unique(ex.begin(), ex.end()), ex.end());
    std::vector<Edge> out;
    for (const Edge& e : f.edges()) {
        if (!e.contains(v)) continue;
        bool hit = false;
        for (Vertex x : ex)
            if (e.contains(x)) {
                hit = true;
                break;
            }
        if (!hit) out.push_back(e.without(v));
    }
    return {canonical_family(f.n(), f.k() - 1, std::move(out)),
            f.n() - 1 - static_cast<int>(ex.size())};
}

struct VertexDeletion {
    SetFamily family;              // on ground set [n-1]
    std::vector<Vertex> old_ids;   // old_ids[w-1] = original id of new vertex w
};

// Drop every edge containing v and relabel the remaining ground set onto
// [n-1] preserving order. old_ids inverts the relabeling.
inline VertexDeletion delete_vertex(const SetFamily& f, Vertex v) {
    if (v < 1 || v > f.n())
        throw validation_error("vertex " + std::to_string(v) + " outside 1..n with n=" +
                               std::to_string(f.n()));
    std::vector<Vertex> old_ids;
    old_ids.reserve(static_cast<std::size_t>(f.n()) - 1);
    std::vector<Vertex> new_of_old(static_cast<std::size_t>(f.n()) + 1, 0);
    for (Vertex w = 1; w <= f.n(); ++w) {
        if (w == v) continue;
        old_ids.push_back(w);
        new_of_old[static_cast<std::size_t>(w)] = static_cast<Vertex>(old_ids.size());
    }
    std::vector<Edge> out;
    for (const Edge& e : f.edges()) {
        if (e.contains(v)) continue;
        std::vector<Vertex> vs;
        vs.reserve(e.size());
        for (Vertex w : e) vs.push_back(new_of_old[static_cast<std::size_t>(w)]);
        out.emplace_back(std::move(vs));
    }
    return {canonical_family(f.n() - 1, f.k(), std::move(out)), std::move(old_ids)};
}

// Map an edge through old_ids (new label w -> old_ids[w-1]).
inline Edge map_edge(const Edge& e, const std::vector<Vertex>& old_ids) {
    std::vector<Vertex> vs;
    vs.reserve(e.size());
    for (Vertex w : e) {
        if (w < 1 || static_cast<std::size_t>(w) > old_ids.size())
            throw consistency_error("relabeled vertex " + std::to_string(w) +
                                    " has no original id");
        vs.push_back(old_ids[static_cast<std::size_t>(w) - 1]);
    }
    return Edge(std::move(vs));
}

struct GroundRestriction {
    ColoredFamilies families;      // relabeled onto [keep.size()]
    std::vector<Vertex> old_ids;   // old_ids[w-1] = original id of new vertex w
};

// Keep only edges inside `keep` and relabel that set onto [|keep|] in order.
inline GroundRestriction restrict_ground(const ColoredFamilies& fams,
                                         const std::vector<Vertex>& keep) {
    std::vector<Vertex> old_ids = keep;
    std::sort(old_ids.begin(), old_ids.end());
    old_ids.erase(std::unique(old_ids.begin(), old_ids.end()), old_ids.end());
    for (Vertex v : old_ids)
        if (v < 1 || v > fams.n())
            throw validation_error("kept vertex " + std::to_string(v) + " outside 1..n with n=" +
                                   std::to_string(fams.n()));
    std::vector<Vertex> new_of_old(static_cast<std::size_t>(fams.n()) + 1, 0);
    for (std::size_t w = 0; w < old_ids.size(); ++w)
        new_of_old[static_cast<std::size_t>(old_ids[w])] = static_cast<Vertex>(w + 1);
    int m = static_cast<int>(old_ids.size());
    std::vector<SetFamily> out;
    out.reserve(fams.families().size());
    for (const SetFamily& f : fams.families()) {
        std::vector<Edge> es;
        for (const Edge& e : f.edges()) {
            std::vector<Vertex> vs;
            vs.reserve(e.size());
            bool inside = true;
            for (Vertex v : e) {
                Vertex w = new_of_old[static_cast<std::size_t>(v)];
                if (w == 0) {
                    inside = false;
                    break;
                }
                vs.push_back(w);
            }
            if (inside) es.emplace_back(std::move(vs));
        }
        out.push_back(canonical_family(m, f.k(), std::move(es)));
    }
    return {ColoredFamilies(m, std::move(out)), std::move(old_ids)};
}

// ---- colex enumeration, ranking and unranking of k-subsets of [n] ----

// rank(S) = sum over positions i = 1..k of C(s_i - 1, i), where
// s_1 < ... < s_k. Ranks run from 0 to C(n,k) - 1 in colex order.
inline std::uint64_t colex_rank(const Edge& e) {
    u128 r = 0;
    int i = 1;
    for (Vertex v : e) {
        r = checked_add(r, binom(v - 1, i));
        ++i;
    }
    return to_u64(r);
}

inline Edge colex_unrank(std::uint64_t rank, int n, int k) {
    if (n < 0 || k < 0) throw validation_error("unrank requires nonnegative n and k");
    u128 total = binom(n, k);
    if (u128{rank} >= total)
        throw validation_error("rank " + std::to_string(rank) + " outside 0..C(n,k)-1 for n=" +
                               std::to_string(n) + " k=" + std::to_string(k));
    std::vector<Vertex> vs(static_cast<std::size_t>(k));
    u128 r = rank;
    int hi = n;
    for (int pos = k; pos >= 1; --pos) {
        // Largest m <= hi with C(m-1, pos) <= r.
        int m = pos;
        while (m < hi && binom(m, pos) <= r) ++m;
        vs[static_cast<std::size_t>(pos) - 1] = m;
        r -= binom(m - 1, pos);
        hi = m - 1;
    }
    return Edge(std::move(vs));
}

// Forward iteration over all k-subsets of [n] in colex order.
class KSubsetRange {
public:
    KSubsetRange(int n, int k) : n_(n), k_(k) {
        if (n < 0 || k < 0) throw validation_error("enumeration requires nonnegative n and k");
    }

    class iterator {
    public:
        iterator() = default;  // end
        iterator(int n, int k) : n_(n), done_(k > n) {
            std::vector<Vertex> vs(static_cast<std::size_t>(k));
            for (int i = 0; i < k; ++i) vs[static_cast<std::size_t>(i)] = i + 1;
            if (!done_) cur_ = Edge(std::move(vs));
        }

        const Edge& operator*() const { return cur_; }
        const Edge* operator->() const { return &cur_; }

        iterator& operator++() {
            // Colex successor: bump the lowest position that can grow, reset
            // everything below it to 1..i.
            std::vector<Vertex> vs = cur_.verts();
            int k = static_cast<int>(vs.size());
            int i = 0;
            while (i < k) {
                Vertex cap = (i + 1 < k) ? vs[static_cast<std::size_t>(i) + 1] : n_ + 1;
                if (vs[static_cast<std::size_t>(i)] + 1 < cap) break;
                ++i;
            }
            if (i == k) {
                done_ = true;
                return *this;
            }
            ++vs[static_cast<std::size_t>(i)];
            for (int j = 0; j < i; ++j) vs[static_cast<std::size_t>(j)] = j + 1;
            cur_ = Edge(std::move(vs));
            return *this;
        }

        bool operator==(const iterator& other) const {
            if (done_ != other.done_) return false;
            return done_ || cur_ == other.cur_;
        }

    private:
        int n_ = 0;
        bool done_ = true;
        Edge cur_;
    };

    iterator begin() const { return iterator(n_, k_); }
    iterator end() const { return iterator(); }

private:
    int n_;
    int k_;
};

inline std::vector<Edge> all_ksubsets(int n, int k) {
    std::vector<Edge> out;
    if (!fits_u64(binom(n, k)))
        throw arithmetic_error("C(n,k) too large to materialize");
    for (const Edge& e : KSubsetRange(n, k)) out.push_back(e);
    return out;
}

}  // namespace shg
