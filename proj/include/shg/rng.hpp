#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "shg/arith.hpp"
#include "shg/errors.hpp"
#include "shg/family.hpp"

namespace shg {

// xorshift64*: state is a single nonzero 64-bit word. Each draw applies
//   x ^= x >> 12;  x ^= x << 25;  x ^= x >> 27;
// and returns x * 0x2545F4914F6CDD1D. Fixed here so that seeded runs are
// reproducible across platforms and compilers.
class Xorshift64Star {
public:
    explicit Xorshift64Star(std::uint64_t seed)
        : state_(seed != 0 ? seed : 0x9E3779B97F4A7C15ull) {}

    std::uint64_t next() {
        std::uint64_t x = state_;
        x ^= x >> 12;
        x ^= x << 25;
        x ^= x >> 27;
        state_ = x;
        return x * 0x2545F4914F6CDD1Dull;
    }

    // Uniform draw from [0, bound) by rejection; bound must be positive.
    std::uint64_t next_below(std::uint64_t bound) {
        if (bound == 0) throw validation_error("draw from an empty range");
        std::uint64_t threshold = (0 - bound) % bound;  // 2^64 mod bound
        for (;;) {
            std::uint64_t r = next();
            if (r >= threshold) return r % bound;
        }
    }

    // Uniform int in [lo, hi] inclusive.
    int range(int lo, int hi) {
        if (lo > hi) throw validation_error("empty integer range");
        return lo + static_cast<int>(next_below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

private:
    std::uint64_t state_;
};

// Floyd's sampling: m distinct values from [0, universe), uniform over
// m-subsets, deterministic given the generator state.
inline std::vector<std::uint64_t> sample_distinct(Xorshift64Star& rng, std::uint64_t universe,
                                                  std::uint64_t m) {
    if (m > universe)
        throw validation_error("cannot sample " + std::to_string(m) + " distinct values from " +
                               std::to_string(universe));
    std::set<std::uint64_t> chosen;
    for (std::uint64_t j = universe - m; j < universe; ++j) {
        std::uint64_t r = rng.next_below(j + 1);
        if (!chosen.insert(r).second) chosen.insert(j);
    }
    return {chosen.begin(), chosen.end()};
}

// Recipe for one seeded random family. Exactly one of edge_count /
// inclusion_prob must be set; generation is a pure function of the fields.
struct RandomFamilySpec {
    int n = 0;
    int k = 0;
    std::optional<std::uint64_t> edge_count;
    std::optional<double> inclusion_prob;
    std::uint64_t seed = 0;
};

inline SetFamily random_family(const RandomFamilySpec& spec) {
    if (spec.n < 0 || spec.k < 1)
        throw validation_error("random family requires n >= 0 and k >= 1");
    if (spec.edge_count.has_value() == spec.inclusion_prob.has_value())
        throw validation_error("exactly one of edge_count and inclusion_prob must be set");
    u128 total128 = binom(spec.n, spec.k);
    if (!fits_u64(total128)) throw arithmetic_error("C(n,k) too large for random sampling");
    std::uint64_t total = to_u64(total128);
    Xorshift64Star rng(spec.seed);
    std::vector<Edge> edges;
    if (spec.edge_count) {
        if (*spec.edge_count > total)
            throw validation_error("requested " + std::to_string(*spec.edge_count) +
                                   " edges but C(n,k)=" + std::to_string(total));
        for (std::uint64_t r : sample_distinct(rng, total, *spec.edge_count))
            edges.push_back(colex_unrank(r, spec.n, spec.k));
    } else {
        double p = *spec.inclusion_prob;
        if (p < 0.0 || p > 1.0) throw validation_error("inclusion probability outside [0,1]");
        // Compare a fresh 53-bit draw against p for each candidate edge.
        const double scale = 9007199254740992.0;  // 2^53
        for (std::uint64_t r = 0; r < total; ++r) {
            double u = static_cast<double>(rng.next() >> 11) / scale;
            if (u < p) edges.push_back(colex_unrank(r, spec.n, spec.k));
        }
    }
    return make_family(spec.n, spec.k, std::move(edges));
}

inline ColoredFamilies random_colored(const std::vector<RandomFamilySpec>& specs) {
    if (specs.empty()) throw validation_error("at least one family spec is required");
    int n = specs.front().n;
    std::vector<SetFamily> fams;
    fams.reserve(specs.size());
    for (const RandomFamilySpec& s : specs) {
        if (s.n != n) throw validation_error("family specs must share one ground set");
        fams.push_back(random_family(s));
    }
    return ColoredFamilies(n, std::move(fams));
}

}  // namespace shg
