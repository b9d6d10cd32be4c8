// Random Euclidean tables for property tests.

#ifndef EUCLID_TESTS_TABLE_GEN_HPP
#define EUCLID_TESTS_TABLE_GEN_HPP

#include <random>
#include <vector>

#include "euclid/euclidean.hpp"

namespace gen {

// A delayed fixed point: each level assigns a random nonempty part of the elements
// whose cosets all meet lower levels, and levels may be skipped. Every table built
// this way satisfies the division property, usually above the bottom one.
inline std::vector<std::uint64_t> delayed_fixed_point(const euclid::FiniteRing& r, std::mt19937_64& rng) {
    const std::uint64_t n = r.size();
    constexpr auto unset = std::numeric_limits<std::uint64_t>::max();
    std::vector<std::uint64_t> value(n, unset);
    std::vector<std::vector<std::uint32_t>> labels(n);
    std::vector<std::uint32_t> counts(n, 0);
    for (std::uint64_t b = 1; b < n; ++b) labels[b] = euclid::detail::coset_labels(r, b, counts[b]);
    std::uint64_t remaining = n - 1, level = 0;
    while (remaining > 0) {
        std::vector<std::uint64_t> eligible;
        for (std::uint64_t b = 1; b < n; ++b) {
            if (value[b] != unset) continue;
            std::vector<bool> met(counts[b], false);
            met[0] = true;
            for (std::uint64_t x = 1; x < n; ++x)
                if (value[x] != unset && value[x] < level) met[labels[b][x]] = true;
            if (std::all_of(met.begin(), met.end(), [](bool m) { return m; })) eligible.push_back(b);
        }
        std::vector<std::uint64_t> chosen;
        for (auto b : eligible)
            if (rng() % 3 != 0) chosen.push_back(b);
        if (chosen.empty() && !eligible.empty()) chosen.push_back(eligible[rng() % eligible.size()]);
        for (auto b : chosen) value[b] = level;
        remaining -= chosen.size();
        level += 1 + rng() % 2;
    }
    value[0] = 0;
    return value;
}

}  // namespace gen

#endif
